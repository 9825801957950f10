#include "fragwl/fragnet.hpp"

#include <algorithm>
#include <unordered_set>

#include "fragwl/augment.hpp"

namespace fragwl {

namespace {

struct Topology {
  const Graph* g = nullptr;
  const Fragmentation* fr = nullptr;
  std::vector<Edge> edges;
  std::vector<Label> edge_labels;
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> incident;  // (neighbor, edge index)
  std::vector<std::vector<std::size_t>> frags_at;
  std::vector<std::vector<std::size_t>> frag_adj;
};

Topology prepare(const Graph& g, const Fragmentation& fr, const FragnetOptions& options) {
  Topology t;
  t.g = &g;
  t.fr = &fr;
  t.edges = g.edges();
  t.incident.resize(g.size());
  t.frags_at.resize(g.size());
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const Edge& e = t.edges[i];
    t.edge_labels.push_back(options.use_edge_labels ? g.edge_label(e.u, e.v).value_or(0) : 0);
    t.incident[e.u].emplace_back(e.v, i);
    t.incident[e.v].emplace_back(e.u, i);
  }
  for (std::size_t i = 0; i < fr.fragments.size(); ++i) {
    for (NodeId v : fr.fragments[i].nodes) t.frags_at[v].push_back(i);
  }
  // Fragment-fragment adjacency is exactly the higher-level graph's.
  const AugmentedGraph hlg = augment_hlg(g, fr, options.strict_def4);
  const auto n = static_cast<NodeId>(g.size());
  t.frag_adj.resize(fr.fragments.size());
  for (std::size_t i = 0; i < fr.fragments.size(); ++i) {
    for (NodeId w : hlg.graph.neighbors(n + static_cast<NodeId>(i))) {
      if (w >= n) t.frag_adj[i].push_back(static_cast<std::size_t>(w - n));
    }
  }
  return t;
}

FragnetState initial_state(const Topology& t, ColorInterner& interner, const FragnetOptions& options) {
  FragnetState s;
  for (std::size_t v = 0; v < t.g->size(); ++v) {
    s.h_v.push_back(interner.intern({tag(KeyTag::FragnetNodeInit), t.g->label(static_cast<NodeId>(v))}));
  }
  for (const Fragment& f : t.fr->fragments) {
    s.h_f.push_back(interner.intern(
        {tag(KeyTag::FragnetFragmentInit), static_cast<std::int64_t>(f.frag_class), f.type_id}));
  }
  if (options.use_edge_channel) {
    for (Label l : t.edge_labels) s.h_e.push_back(interner.intern({tag(KeyTag::FragnetEdgeInit), l}));
  }
  return s;
}

Color aggregate(KeyTag tg, std::vector<Color>& items, ColorInterner& interner) {
  std::sort(items.begin(), items.end());
  std::vector<std::int64_t> key{tag(tg)};
  key.insert(key.end(), items.begin(), items.end());
  return interner.intern(key);
}

FragnetState step(const Topology& t, const FragnetState& s, ColorInterner& interner, const FragnetOptions& options) {
  FragnetState next;
  next.layer = s.layer + 1;
  std::vector<Color> items;
  for (std::size_t v = 0; v < t.g->size(); ++v) {
    items.clear();
    for (const auto& [u, e] : t.incident[v]) {
      const Color edge_state = options.use_edge_channel ? s.h_e[e] : interner.intern({tag(KeyTag::FragnetEdgeInit), t.edge_labels[e]});
      items.push_back(interner.intern({tag(KeyTag::FragnetEdgeMessage), s.h_v[u], edge_state}));
    }
    const Color from_nodes = aggregate(KeyTag::FragnetNodeFromNodes, items, interner);
    items.clear();
    for (std::size_t f : t.frags_at[v]) items.push_back(s.h_f[f]);
    const Color from_frags = aggregate(KeyTag::FragnetNodeFromFragments, items, interner);
    next.h_v.push_back(interner.intern({tag(KeyTag::FragnetNodeUpdate), s.h_v[v], from_nodes, from_frags}));
  }
  for (std::size_t f = 0; f < t.fr->fragments.size(); ++f) {
    items.clear();
    for (NodeId v : t.fr->fragments[f].nodes) items.push_back(s.h_v[v]);
    const Color from_nodes = aggregate(KeyTag::FragnetFragmentFromNodes, items, interner);
    items.clear();
    for (std::size_t k : t.frag_adj[f]) items.push_back(s.h_f[k]);
    const Color from_frags = aggregate(KeyTag::FragnetFragmentFromFragments, items, interner);
    next.h_f.push_back(interner.intern({tag(KeyTag::FragnetFragmentUpdate), s.h_f[f], from_nodes, from_frags}));
  }
  if (options.use_edge_channel) {
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      const Color a = s.h_v[t.edges[e].u], b = s.h_v[t.edges[e].v];
      next.h_e.push_back(interner.intern({tag(KeyTag::FragnetEdgeUpdate), s.h_e[e], std::min(a, b), std::max(a, b)}));
    }
  }
  return next;
}

void collect(const FragnetState& s, std::vector<Color>& out) {
  out.insert(out.end(), s.h_v.begin(), s.h_v.end());
  out.insert(out.end(), s.h_e.begin(), s.h_e.end());
  out.insert(out.end(), s.h_f.begin(), s.h_f.end());
}

Fingerprint readout(const FragnetState& s) {
  std::vector<Color> all;
  collect(s, all);
  return make_fingerprint(all, s.layer);
}

std::size_t cells(const std::vector<const FragnetState*>& states) {
  std::vector<Color> all;
  for (const auto* s : states) collect(*s, all);
  return std::unordered_set<Color>(all.begin(), all.end()).size();
}

}  // namespace

Fingerprint fragnet_forward_hash(const Graph& g, const Fragmentation& fr, std::size_t layers, ColorInterner& interner,
                                 const FragnetOptions& options) {
  if (layers < 1) throw std::invalid_argument("fragnet: at least one layer required");
  const Topology t = prepare(g, fr, options);
  FragnetState s = initial_state(t, interner, options);
  for (std::size_t l = 0; l < layers; ++l) s = step(t, s, interner, options);
  return readout(s);
}

std::array<Fingerprint, 2> fragnet_joint(const Graph& g1, const Fragmentation& f1, const Graph& g2,
                                         const Fragmentation& f2, const FragnetOptions& options) {
  ColorInterner interner;
  const Topology t1 = prepare(g1, f1, options);
  const Topology t2 = prepare(g2, f2, options);
  FragnetState s1 = initial_state(t1, interner, options);
  FragnetState s2 = initial_state(t2, interner, options);
  std::size_t count = cells({&s1, &s2});
  while (true) {
    s1 = step(t1, s1, interner, options);
    s2 = step(t2, s2, interner, options);
    const std::size_t next = cells({&s1, &s2});
    if (next == count) break;
    count = next;
  }
  return {readout(s1), readout(s2)};
}

std::size_t fragnet_stable_layers(const Graph& g, const Fragmentation& fr, const FragnetOptions& options) {
  ColorInterner interner;
  const Topology t = prepare(g, fr, options);
  FragnetState s = initial_state(t, interner, options);
  std::size_t count = cells({&s});
  while (true) {
    s = step(t, s, interner, options);
    const std::size_t next = cells({&s});
    if (next == count) return s.layer;
    count = next;
  }
}

}  // namespace fragwl
