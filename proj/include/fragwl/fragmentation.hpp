#ifndef FRAGWL_FRAGMENTATION_HPP
#define FRAGWL_FRAGMENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fragwl/graph.hpp"

namespace fragwl {

enum class FragmentClass { Ring, Path, Junction };

std::string to_string(FragmentClass c);
FragmentClass fragment_class_from_string(const std::string& s);

/// Structural family behind a type id. Ring-class fragments come from either
/// the cycle family or the clique family; vocabulary fragments are matched
/// against user-supplied graphs.
enum class FragmentFamily : std::int64_t { Cycle = 1, Path = 2, Junction = 3, Clique = 4, Vocabulary = 5 };

using TypeId = std::int64_t;

/// Packs (family, size-or-index) into a type id. Every fragment produced by
/// the schemes here has a fixed shape per family (chordless cycle, induced
/// path, clique), so equal ids mean isomorphic induced subgraphs.
constexpr TypeId make_type_id(FragmentFamily family, std::int64_t payload) {
  return (static_cast<std::int64_t>(family) << 32) | payload;
}
constexpr FragmentFamily type_family(TypeId id) { return static_cast<FragmentFamily>(id >> 32); }
constexpr std::int64_t type_payload(TypeId id) { return id & 0xffffffffLL; }

struct Fragment {
  std::vector<NodeId> nodes;  // sorted, nonempty
  FragmentClass frag_class = FragmentClass::Path;
  TypeId type_id = 0;

  std::size_t size() const noexcept { return nodes.size(); }
  bool contains(NodeId v) const;
  friend auto operator<=>(const Fragment&, const Fragment&) = default;
};

struct Fragmentation {
  std::vector<Fragment> fragments;  // sorted by (class, nodes)
  std::string scheme;

  std::size_t count(FragmentClass c) const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationBudget = 100000;

/// All chordless cycles of length 3..max_length, each once, as sorted node
/// sets. Throws BudgetExceeded when more than `budget` cycles exist.
std::vector<std::vector<NodeId>> chordless_cycles(const Graph& g, std::size_t max_length,
                                                  std::size_t budget = kDefaultEnumerationBudget);

/// Minimal rings: the union of all minimum cycle bases (relevant cycles).
std::vector<std::vector<NodeId>> minimal_rings(const Graph& g,
                                               std::size_t budget = kDefaultEnumerationBudget);

/// Rings, then maximal paths of ring-uncovered edges merged through nodes of
/// remainder-degree two, then a junction at every node in >= 3 fragments.
Fragmentation fragment_rings_paths(const Graph& g, std::size_t budget = kDefaultEnumerationBudget);

Fragmentation fragment_rings(const Graph& g, std::size_t budget = kDefaultEnumerationBudget);

/// Every induced cycle of length 3..k. Recovers c-cycles for every c <= k.
Fragmentation fragment_all_cycles(const Graph& g, std::size_t k,
                                  std::size_t budget = kDefaultEnumerationBudget);

/// Maximal cliques with 2..k nodes (Bron-Kerbosch with pivoting).
Fragmentation fragment_cliques(const Graph& g, std::size_t k,
                               std::size_t budget = kDefaultEnumerationBudget);

/// Every node subset whose induced subgraph is isomorphic to one of
/// `vocabulary` (deduplicated up to isomorphism); type = vocabulary index.
Fragmentation fragment_vocabulary(const Graph& g, const std::vector<Graph>& vocabulary,
                                  std::size_t budget = kDefaultEnumerationBudget);

/// Scheme descriptor as used on the command line: rings_paths, rings,
/// all_cycles:K, cliques:K. Vocabulary schemes are built programmatically.
struct Scheme {
  enum class Kind { None, RingsPaths, Rings, AllCycles, Cliques, Vocabulary };
  Kind kind = Kind::RingsPaths;
  std::size_t k = 0;
  std::vector<Graph> vocabulary;
  std::size_t budget = kDefaultEnumerationBudget;

  static Scheme parse(const std::string& text);
  static Scheme none() { return of(Kind::None); }
  static Scheme rings_paths() { return of(Kind::RingsPaths); }
  static Scheme rings() { return of(Kind::Rings); }
  static Scheme all_cycles(std::size_t k) { return of(Kind::AllCycles, k); }
  static Scheme cliques(std::size_t k) { return of(Kind::Cliques, k); }
  static Scheme from_vocabulary(std::vector<Graph> vocab) {
    Scheme s = of(Kind::Vocabulary);
    s.vocabulary = std::move(vocab);
    return s;
  }

  std::string name() const;
  Fragmentation apply(const Graph& g) const;

 private:
  static Scheme of(Kind kind, std::size_t k = 0) {
    Scheme s;
    s.kind = kind;
    s.k = k;
    return s;
  }
};

nlohmann::json fragmentation_to_json(const Fragmentation& fr);
Fragmentation fragmentation_from_json(const nlohmann::json& j);

/// Fragment counts per type over a corpus.
struct VocabEntry {
  TypeId type_id;
  FragmentClass frag_class;
  std::size_t size;  // fragment size for the type
  std::size_t count;
};

struct VocabStats {
  std::vector<VocabEntry> vocab;  // descending count, ties by type id
  double coverage = 0.0;          // fraction of atoms in at least one fragment
  std::map<FragmentClass, std::map<std::size_t, std::size_t>> size_histogram;
  /// coverage_curve[k] = fraction of atoms covered using only the k+1 most
  /// frequent types.
  std::vector<double> coverage_curve;
};

/// Throws std::invalid_argument on an empty corpus.
VocabStats vocab_stats(const std::vector<Graph>& corpus, const Scheme& scheme);

std::string type_name(TypeId id);

}  // namespace fragwl

#endif  // FRAGWL_FRAGMENTATION_HPP
