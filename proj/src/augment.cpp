#include "fragwl/augment.hpp"

#include <algorithm>
#include <set>

#include "fragwl/graph_json.hpp"

namespace fragwl {

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Original: return "original";
    case NodeKind::FragmentNode: return "fragment";
    case NodeKind::EdgeNode: return "edge";
    case NodeKind::GraphNode: return "graph";
  }
  return "?";
}

namespace {

void check_fragments(const Graph& g, const Fragmentation& fr) {
  for (const Fragment& f : fr.fragments) {
    if (f.nodes.empty()) throw GraphError("empty fragment");
    for (NodeId v : f.nodes) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
        throw GraphError("fragment references unknown node " + std::to_string(v));
      }
    }
  }
}

Label fragment_label(const Fragment& f) { return f.type_id * 4 + static_cast<Label>(f.frag_class); }

/// Mutable edge list with labels, turned into an AugmentedGraph at the end.
struct Builder {
  std::vector<Edge> edges;
  EdgeLabelMap edge_labels;
  std::vector<Label> labels;
  std::vector<NodeKind> kinds;
  bool labelled = false;

  explicit Builder(const Graph& g) : labels(g.labels().begin(), g.labels().end()),
                                     kinds(g.size(), NodeKind::Original) {
    edges = g.edges();
    labelled = g.has_edge_labels();
    if (labelled) edge_labels = g.edge_label_map();
  }

  NodeId add_node(NodeKind kind, Label label) {
    labels.push_back(label);
    kinds.push_back(kind);
    return static_cast<NodeId>(labels.size() - 1);
  }

  void add_edge(NodeId u, NodeId v) {
    edges.push_back({std::min(u, v), std::max(u, v)});
    if (labelled) edge_labels[{std::min(u, v), std::max(u, v)}] = 0;
  }

  AugmentedGraph finish(const Graph& g) {
    AugmentedGraph a;
    a.graph = labelled ? build_graph(edges, std::move(labels), &edge_labels) : build_graph(edges, std::move(labels));
    a.node_kind = std::move(kinds);
    a.origin = std::make_shared<const Graph>(g);
    return a;
  }
};

}  // namespace

Graph augment_nf(const Graph& g, const Fragmentation& fr, ColorInterner& interner) {
  check_fragments(g, fr);
  std::vector<std::vector<std::int64_t>> types(g.size());
  for (const Fragment& f : fr.fragments) {
    for (NodeId v : f.nodes) types[v].push_back(fragment_label(f));
  }
  std::vector<Label> labels(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::sort(types[v].begin(), types[v].end());
    std::vector<std::int64_t> key{tag(KeyTag::NfLabel), g.label(static_cast<NodeId>(v))};
    key.insert(key.end(), types[v].begin(), types[v].end());
    labels[v] = interner.intern(key);
  }
  const auto edges = g.edges();
  if (g.has_edge_labels()) return build_graph(edges, std::move(labels), g.edge_label_map());
  return build_graph(edges, std::move(labels));
}

AugmentedGraph augment_fr(const Graph& g, const Fragmentation& fr) {
  check_fragments(g, fr);
  Builder b(g);
  std::vector<std::pair<NodeId, const Fragment*>> added;
  for (const Fragment& f : fr.fragments) {
    const NodeId id = b.add_node(NodeKind::FragmentNode, fragment_label(f));
    for (NodeId v : f.nodes) b.add_edge(id, v);
    added.emplace_back(id, &f);
  }
  AugmentedGraph a = b.finish(g);
  for (const auto& [id, f] : added) a.frag_of.emplace(id, *f);
  return a;
}

AugmentedGraph augment_hlg(const Graph& g, const Fragmentation& fr, bool strict) {
  check_fragments(g, fr);
  Builder b(g);
  std::vector<NodeId> ids;
  for (const Fragment& f : fr.fragments) {
    const NodeId id = b.add_node(NodeKind::FragmentNode, fragment_label(f));
    for (NodeId v : f.nodes) b.add_edge(id, v);
    ids.push_back(id);
  }
  std::vector<bool> junction(g.size(), false);
  for (const Fragment& f : fr.fragments) {
    if (f.frag_class == FragmentClass::Junction) junction[f.nodes.front()] = true;
  }
  std::vector<std::vector<std::size_t>> containing(g.size());
  for (std::size_t i = 0; i < fr.fragments.size(); ++i) {
    for (NodeId v : fr.fragments[i].nodes) containing[v].push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> linked;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& here = containing[v];
    for (std::size_t x = 0; x < here.size(); ++x) {
      for (std::size_t y = x + 1; y < here.size(); ++y) {
        const Fragment& f = fr.fragments[here[x]];
        const Fragment& k = fr.fragments[here[y]];
        const bool via_junction = f.frag_class == FragmentClass::Junction || k.frag_class == FragmentClass::Junction;
        if (!strict && junction[v] && !via_junction) continue;
        linked.insert({here[x], here[y]});
      }
    }
  }
  for (const auto& [x, y] : linked) b.add_edge(ids[x], ids[y]);
  AugmentedGraph a = b.finish(g);
  for (std::size_t i = 0; i < ids.size(); ++i) a.frag_of.emplace(ids[i], fr.fragments[i]);
  return a;
}

AugmentedGraph augment_er(const Graph& g) {
  Builder b(g);
  for (const Edge& e : g.edges()) {
    const NodeId id = b.add_node(NodeKind::EdgeNode, 0);
    b.add_edge(id, e.u);
    b.add_edge(id, e.v);
  }
  return b.finish(g);
}

AugmentedGraph augment_gr(const Graph& g) {
  Builder b(g);
  const NodeId id = b.add_node(NodeKind::GraphNode, 0);
  for (std::size_t v = 0; v < g.size(); ++v) b.add_edge(id, static_cast<NodeId>(v));
  return b.finish(g);
}

Graph restrict_to_original(const AugmentedGraph& a) {
  std::vector<NodeId> nodes;
  for (std::size_t v = 0; v < a.node_kind.size(); ++v) {
    if (a.node_kind[v] == NodeKind::Original) nodes.push_back(static_cast<NodeId>(v));
  }
  return induced_subgraph(a.graph, nodes);
}

nlohmann::json augmented_to_json(const AugmentedGraph& a) {
  nlohmann::json j = graph_to_json(a.graph);
  std::vector<std::string> kinds;
  for (NodeKind k : a.node_kind) kinds.push_back(to_string(k));
  j["node_kind"] = kinds;
  nlohmann::json frags = nlohmann::json::object();
  for (const auto& [id, f] : a.frag_of) {
    frags[std::to_string(id)] = {{"nodes", f.nodes}, {"class", to_string(f.frag_class)}, {"type_id", f.type_id}};
  }
  j["frag_of"] = std::move(frags);
  return j;
}

}  // namespace fragwl
