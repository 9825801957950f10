#ifndef FRAGWL_GRAPH_HPP
#define FRAGWL_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fragwl {

using NodeId = std::int32_t;
using Label = std::int64_t;

struct Edge {
  NodeId u;
  NodeId v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge labels keyed by (min, max) endpoint pair.
using EdgeLabelMap = std::map<std::pair<NodeId, NodeId>, Label>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected, simple, node-labeled graph with optional edge labels.
/// Immutable after construction; build through build_graph().
///
/// Edges without an explicit label carry label 0.
class Graph {
 public:
  Graph() = default;

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  /// Edge labels parallel to neighbors(v).
  std::span<const Label> neighbor_edge_labels(NodeId v) const { return adjacency_labels_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }

  Label label(NodeId v) const { return labels_.at(v); }
  std::span<const Label> labels() const noexcept { return labels_; }

  bool has_edge_labels() const noexcept { return has_edge_labels_; }
  bool adjacent(NodeId u, NodeId v) const;
  /// Label of edge {u,v}; nullopt when the edge does not exist.
  std::optional<Label> edge_label(NodeId u, NodeId v) const;

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;
  EdgeLabelMap edge_label_map() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::span<const Edge>, std::vector<Label>, const EdgeLabelMap*);

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::vector<Label>> adjacency_labels_;
  std::vector<Label> labels_;
  std::size_t num_edges_ = 0;
  bool has_edge_labels_ = false;
};

/// Symmetrizes and deduplicates `edges`. Throws GraphError on out-of-range ids,
/// self-loops, a label count that differs from the node count implied by
/// `node_labels`, or conflicting labels for the same edge.
Graph build_graph(std::span<const Edge> edges, std::vector<Label> node_labels,
                  const EdgeLabelMap* edge_labels = nullptr);

inline Graph build_graph(std::span<const Edge> edges, std::vector<Label> node_labels,
                         const EdgeLabelMap& edge_labels) {
  return build_graph(edges, std::move(node_labels), &edge_labels);
}

/// Unlabeled convenience: n nodes with label 0.
Graph build_unlabeled(std::size_t n, std::span<const Edge> edges);

/// Induced subgraph on `nodes`; ids renumbered by ascending original id.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Graph with node v renamed to perm[v].
Graph permute(const Graph& g, std::span<const NodeId> perm);

/// Same structure with every node label set to zero and edge labels dropped.
Graph strip_labels(const Graph& g);

/// Disjoint union; nodes of b are shifted by a.size().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components as sorted node lists, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

inline constexpr std::size_t kBruteForceNodeLimit = 10;

/// Label-, edge- and edge-label-preserving bijection g1 -> g2, found by
/// backtracking over refinement-compatible candidates. No size cap; callers
/// are expected to keep inputs small or structured.
std::optional<std::vector<NodeId>> find_isomorphism(const Graph& g1, const Graph& g2);

/// Exhaustive isomorphism test restricted to graphs of at most
/// kBruteForceNodeLimit nodes. Throws GraphError above the limit.
bool is_isomorphic_bruteforce(const Graph& g1, const Graph& g2);

struct CanonicalCode {
  std::string code;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Lexicographically minimal (labels, adjacency, edge label) string over all
/// orderings compatible with the canonical refined partition.
/// Throws GraphError above kBruteForceNodeLimit nodes.
CanonicalCode canonical_code(const Graph& g);

/// Canonically ordered stable partition: rank[v] is the index of v's cell
/// in an isomorphism-invariant cell order.
std::vector<int> refined_ranks(const Graph& g);

}  // namespace fragwl

#endif  // FRAGWL_GRAPH_HPP
