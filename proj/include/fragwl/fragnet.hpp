#ifndef FRAGWL_FRAGNET_HPP
#define FRAGWL_FRAGNET_HPP

#include <array>
#include <optional>
#include <vector>

#include "fragwl/fragmentation.hpp"
#include "fragwl/graph.hpp"
#include "fragwl/interner.hpp"
#include "fragwl/wl.hpp"

namespace fragwl {

struct FragnetState {
  std::vector<Color> h_v;
  std::vector<Color> h_f;  // parallel to Fragmentation::fragments
  std::vector<Color> h_e;  // parallel to Graph::edges()
  std::size_t layer = 0;
};

struct FragnetOptions {
  bool use_edge_channel = true;
  bool use_edge_labels = true;
  /// Fragment adjacency keeps every intersecting pair instead of routing
  /// through junctions.
  bool strict_def4 = false;
};

/// Forward pass with injective interning in place of MLP and AGG.
/// Messages: nodes->node (neighbor state with edge state), fragments->node,
/// nodes->fragment, fragments->fragment over the higher-level graph.
/// Readout: histogram over the union of node, edge and fragment colors.
Fingerprint fragnet_forward_hash(const Graph& g, const Fragmentation& fr, std::size_t layers, ColorInterner& interner,
                                 const FragnetOptions& options = {});

/// Both graphs with one interner until the joint partition stops growing;
/// fingerprints are comparable.
std::array<Fingerprint, 2> fragnet_joint(const Graph& g1, const Fragmentation& f1, const Graph& g2,
                                         const Fragmentation& f2, const FragnetOptions& options = {});

/// First layer t >= 1 whose combined partition of nodes, fragments and edges
/// has as many cells as layer t - 1.
std::size_t fragnet_stable_layers(const Graph& g, const Fragmentation& fr, const FragnetOptions& options = {});

}  // namespace fragwl

#endif  // FRAGWL_FRAGNET_HPP
