#ifndef FRAGWL_WL_HPP
#define FRAGWL_WL_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fragwl/augment.hpp"
#include "fragwl/fragmentation.hpp"
#include "fragwl/graph.hpp"
#include "fragwl/interner.hpp"

namespace fragwl {

struct Coloring {
  std::vector<Color> colors;                // stable colors
  std::size_t round = 0;                    // refinement rounds performed
  std::vector<std::vector<Color>> history;  // history[t] = colors after round t
};

struct Fingerprint {
  std::vector<std::pair<Color, std::size_t>> histogram;  // sorted by color
  std::size_t rounds = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint make_fingerprint(std::span<const Color> colors, std::size_t rounds);
nlohmann::json fingerprint_to_json(const Fingerprint& fp);

struct WlOptions {
  bool use_edge_labels = true;
};

/// Node-kind-aware initial colors: intern(kind, label).
std::vector<Color> initial_colors(const Graph& g, std::span<const NodeKind> kinds, ColorInterner& interner);

/// 1-WL refinement run jointly on all graphs with one interner, so the stable
/// colors are comparable across graphs. Stops once the number of distinct
/// colors over all graphs no longer grows.
std::vector<Coloring> wl_refine_joint(const std::vector<const Graph*>& graphs,
                                      std::vector<std::vector<Color>> initial, ColorInterner& interner,
                                      const WlOptions& options = {});

Coloring wl_refine(const Graph& g, ColorInterner& interner, const WlOptions& options = {});
Coloring wl_refine(const AugmentedGraph& g, ColorInterner& interner, const WlOptions& options = {});

inline constexpr std::size_t kFwlDefaultNodeCap = 64;

struct FwlOptions {
  bool use_edge_labels = true;
  std::size_t node_cap = kFwlDefaultNodeCap;
};

/// Folklore 2-WL over ordered pairs, run jointly. Throws std::invalid_argument
/// when a graph exceeds the node cap.
std::vector<Fingerprint> fwl2_refine_joint(const std::vector<const Graph*>& graphs, ColorInterner& interner,
                                           const FwlOptions& options = {});
Fingerprint fwl2_refine(const Graph& g, ColorInterner& interner, const FwlOptions& options = {});

enum class WlTest { WL, FWL2, NF, FR, HLG, ER, GR };

std::string to_string(WlTest t);
/// Accepts wl, fwl2, nf, fr, hlg, er, gr (and the "-wl" suffixed forms).
WlTest parse_wl_test(const std::string& text);
bool needs_scheme(WlTest t);

enum class Outcome { Distinguished, Indistinguishable };
std::string to_string(Outcome o);

struct DistinguishOptions {
  Scheme scheme = Scheme::none();
  bool strict_def4 = false;
  bool use_edge_labels = true;
  std::size_t fwl_node_cap = kFwlDefaultNodeCap;
};

struct DistinguishResult {
  WlTest test = WlTest::WL;
  Outcome outcome = Outcome::Indistinguishable;
  std::size_t rounds = 0;
  std::array<Fingerprint, 2> fingerprints;
};

/// g-WL(G1) vs g-WL(G2) with one shared interner.
DistinguishResult distinguish(const Graph& g1, const Graph& g2, WlTest test, const DistinguishOptions& options = {});

/// Same, with fragmentations supplied by the caller.
DistinguishResult distinguish_with(const Graph& g1, const Fragmentation& f1, const Graph& g2,
                                   const Fragmentation& f2, WlTest test, const DistinguishOptions& options = {});

nlohmann::json result_to_json(const DistinguishResult& r);

/// Partial order used by the monotonicity check: WL ~ ER ~ GR, WL <= FWL2,
/// WL <= NF <= FR <= HLG.
bool at_most_as_strong(WlTest weaker, WlTest stronger);

struct HierarchyMatrix {
  std::vector<WlTest> tests;
  std::vector<std::vector<Outcome>> rows;  // rows[pair][test]
  /// "pair i: A distinguishes but B does not" for every order violation.
  std::vector<std::string> violations;

  bool monotone() const { return violations.empty(); }
};

HierarchyMatrix hierarchy_matrix(const std::vector<std::pair<Graph, Graph>>& pairs, const std::vector<WlTest>& tests,
                                 const DistinguishOptions& options);

}  // namespace fragwl

#endif  // FRAGWL_WL_HPP
