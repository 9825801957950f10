#ifndef FRAGWL_AUGMENT_HPP
#define FRAGWL_AUGMENT_HPP

#include <map>
#include <memory>
#include <vector>

#include <json.hpp>

#include "fragwl/fragmentation.hpp"
#include "fragwl/graph.hpp"
#include "fragwl/interner.hpp"

namespace fragwl {

enum class NodeKind : std::int64_t { Original = 0, FragmentNode = 1, EdgeNode = 2, GraphNode = 3 };

std::string to_string(NodeKind k);

/// Graph with representation nodes appended after the n original nodes.
///
/// Labels of non-original nodes are local to their kind: a fragment node is
/// labelled by its type id, edge and graph nodes by 0. Refinement combines
/// kind and label, which keeps every added label fresh with respect to the
/// source vocabulary.
struct AugmentedGraph {
  Graph graph;
  std::vector<NodeKind> node_kind;
  std::map<NodeId, Fragment> frag_of;
  std::shared_ptr<const Graph> origin;

  std::size_t num_original() const { return origin ? origin->size() : 0; }
};

/// Same graph; label of v becomes intern(X_v, sorted fragment types at v).
Graph augment_nf(const Graph& g, const Fragmentation& fr, ColorInterner& interner);

AugmentedGraph augment_fr(const Graph& g, const Fragmentation& fr);

/// FR plus fragment-fragment edges for intersecting fragments. Unless
/// `strict` is set, a direct edge between f and k is dropped when every node
/// of f n k carries a junction; the junction node connects them instead.
AugmentedGraph augment_hlg(const Graph& g, const Fragmentation& fr, bool strict = false);

AugmentedGraph augment_er(const Graph& g);
AugmentedGraph augment_gr(const Graph& g);

/// Original-tagged nodes and the edges among them.
Graph restrict_to_original(const AugmentedGraph& a);

/// Graph JSON plus "node_kind" and "frag_of".
nlohmann::json augmented_to_json(const AugmentedGraph& a);

}  // namespace fragwl

#endif  // FRAGWL_AUGMENT_HPP
