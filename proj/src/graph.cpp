#include "fragwl/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace fragwl {

namespace {

std::pair<NodeId, NodeId> key_of(NodeId u, NodeId v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

bool Graph::adjacent(NodeId u, NodeId v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Label> Graph::edge_label(NodeId u, NodeId v) const {
  const auto& nb = adjacency_.at(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return adjacency_labels_[u][static_cast<std::size_t>(it - nb.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (static_cast<NodeId>(u) < v) out.push_back({static_cast<NodeId>(u), v});
    }
  }
  return out;
}

EdgeLabelMap Graph::edge_label_map() const {
  EdgeLabelMap out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t i = 0; i < adjacency_[u].size(); ++i) {
      NodeId v = adjacency_[u][i];
      if (static_cast<NodeId>(u) < v) out[{static_cast<NodeId>(u), v}] = adjacency_labels_[u][i];
    }
  }
  return out;
}

Graph build_graph(std::span<const Edge> edges, std::vector<Label> node_labels,
                  const EdgeLabelMap* edge_labels) {
  const auto n = static_cast<NodeId>(node_labels.size());
  std::map<std::pair<NodeId, NodeId>, Label> unique;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a node outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError("self-loop at node " + std::to_string(e.u));
    unique.emplace(key_of(e.u, e.v), 0);
  }
  bool labeled = false;
  if (edge_labels != nullptr) {
    std::map<std::pair<NodeId, NodeId>, Label> seen;
    for (const auto& [uv, lab] : *edge_labels) {
      const auto [prev, fresh] = seen.emplace(key_of(uv.first, uv.second), lab);
      if (!fresh && prev->second != lab) {
        throw GraphError("conflicting labels for edge " + std::to_string(uv.first) + "-" + std::to_string(uv.second));
      }
      auto it = unique.find(key_of(uv.first, uv.second));
      if (it == unique.end()) {
        throw GraphError("edge label given for missing edge " + std::to_string(uv.first) + "-" +
                         std::to_string(uv.second));
      }
      if (lab < 0) throw GraphError("edge labels must be nonnegative");
      it->second = lab;
      labeled = true;
    }
  }
  for (Label lab : node_labels) {
    if (lab < 0) throw GraphError("node labels must be nonnegative");
  }

  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  g.adjacency_labels_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [uv, lab] : unique) {
    g.adjacency_[uv.first].push_back(uv.second);
    g.adjacency_[uv.second].push_back(uv.first);
  }
  for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
    auto& nb = g.adjacency_[v];
    std::sort(nb.begin(), nb.end());
    auto& labs = g.adjacency_labels_[v];
    labs.reserve(nb.size());
    for (NodeId w : nb) labs.push_back(unique.at(key_of(static_cast<NodeId>(v), w)));
  }
  g.labels_ = std::move(node_labels);
  g.num_edges_ = unique.size();
  g.has_edge_labels_ = labeled;
  return g;
}

Graph build_unlabeled(std::size_t n, std::span<const Edge> edges) {
  return build_graph(edges, std::vector<Label>(n, 0));
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<NodeId> index(g.size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    NodeId v = sorted[i];
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
      throw GraphError("induced_subgraph: unknown node " + std::to_string(v));
    }
    index[v] = static_cast<NodeId>(i);
  }
  std::vector<Edge> edges;
  EdgeLabelMap labels;
  std::vector<Label> node_labels;
  for (NodeId v : sorted) {
    node_labels.push_back(g.label(v));
    auto nb = g.neighbors(v);
    auto lab = g.neighbor_edge_labels(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] > v && index[nb[i]] >= 0) {
        edges.push_back({index[v], index[nb[i]]});
        if (g.has_edge_labels()) labels[{index[v], index[nb[i]]}] = lab[i];
      }
    }
  }
  return build_graph(edges, std::move(node_labels), g.has_edge_labels() ? &labels : nullptr);
}

Graph permute(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.size()) throw GraphError("permute: permutation size mismatch");
  std::vector<Label> labels(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) labels.at(perm[v]) = g.label(static_cast<NodeId>(v));
  std::vector<Edge> edges;
  EdgeLabelMap elabels;
  for (const auto& [uv, lab] : g.edge_label_map()) {
    NodeId a = perm[uv.first], b = perm[uv.second];
    edges.push_back({a, b});
    elabels[key_of(a, b)] = lab;
  }
  return build_graph(edges, std::move(labels), g.has_edge_labels() ? &elabels : nullptr);
}

Graph strip_labels(const Graph& g) {
  auto edges = g.edges();
  return build_unlabeled(g.size(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<NodeId>(a.size());
  std::vector<Label> labels(a.labels().begin(), a.labels().end());
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Edge> edges = a.edges();
  EdgeLabelMap elabels = a.edge_label_map();
  for (const auto& [uv, lab] : b.edge_label_map()) {
    edges.push_back({uv.first + shift, uv.second + shift});
    elabels[{uv.first + shift, uv.second + shift}] = lab;
  }
  bool labeled = a.has_edge_labels() || b.has_edge_labels();
  return build_graph(edges, std::move(labels), labeled ? &elabels : nullptr);
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<NodeId>> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<NodeId> members;
    std::queue<NodeId> q;
    q.push(static_cast<NodeId>(s));
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      members.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = static_cast<int>(out.size());
          q.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<int> refined_ranks(const Graph& g) {
  const std::size_t n = g.size();
  // Initial ranks: position of the label among the sorted distinct labels.
  std::vector<Label> distinct(g.labels().begin(), g.labels().end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> rank(n);
  for (std::size_t v = 0; v < n; ++v) {
    rank[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), g.label(v)) -
                               distinct.begin());
  }
  std::size_t cells = distinct.size();
  while (true) {
    std::vector<std::vector<std::int64_t>> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto nb = g.neighbors(static_cast<NodeId>(v));
      auto lab = g.neighbor_edge_labels(static_cast<NodeId>(v));
      std::vector<std::pair<std::int64_t, std::int64_t>> ms;
      ms.reserve(nb.size());
      for (std::size_t i = 0; i < nb.size(); ++i) ms.emplace_back(rank[nb[i]], lab[i]);
      std::sort(ms.begin(), ms.end());
      auto& key = keys[v];
      key.push_back(rank[v]);
      for (auto [r, l] : ms) {
        key.push_back(r);
        key.push_back(l);
      }
    }
    std::vector<std::vector<std::int64_t>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v) {
      rank[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                 sorted.begin());
    }
    if (sorted.size() == cells) break;
    cells = sorted.size();
  }
  return rank;
}

std::optional<std::vector<NodeId>> find_isomorphism(const Graph& g1, const Graph& g2) {
  const std::size_t n = g1.size();
  if (n != g2.size() || g1.num_edges() != g2.num_edges()) return std::nullopt;
  if (n == 0) return std::vector<NodeId>{};

  // Colors refined on the disjoint union are comparable across both graphs.
  const Graph both = disjoint_union(g1, g2);
  const std::vector<int> color = refined_ranks(both);
  {
    std::vector<int> c1(color.begin(), color.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<int> c2(color.begin() + static_cast<std::ptrdiff_t>(n), color.end());
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (c1 != c2) return std::nullopt;
  }

  std::vector<std::size_t> cell_size(both.size(), 0);
  for (std::size_t v = 0; v < n; ++v) ++cell_size[color[v]];

  // Order g1 nodes: smallest cell first, then prefer nodes adjacent to the
  // already-ordered prefix so consistency checks bite early.
  std::vector<NodeId> order;
  std::vector<bool> placed(n, false);
  std::vector<int> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    NodeId best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0) {
        best = static_cast<NodeId>(v);
        continue;
      }
      auto better = [&](std::size_t a, std::size_t b) {
        if (links[a] != links[b]) return links[a] > links[b];
        if (cell_size[color[a]] != cell_size[color[b]]) return cell_size[color[a]] < cell_size[color[b]];
        return a < b;
      };
      if (better(v, static_cast<std::size_t>(best))) best = static_cast<NodeId>(v);
    }
    placed[best] = true;
    order.push_back(best);
    for (NodeId w : g1.neighbors(best)) ++links[w];
  }

  std::vector<std::vector<NodeId>> candidates(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (color[v] == color[n + w]) candidates[v].push_back(static_cast<NodeId>(w));
    }
  }

  std::vector<NodeId> map(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](NodeId v, NodeId w, std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) {
      NodeId u = order[i];
      auto e1 = g1.edge_label(v, u);
      auto e2 = g2.edge_label(w, map[u]);
      if (e1.has_value() != e2.has_value()) return false;
      if (e1 && *e1 != *e2) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    NodeId v = order[depth];
    for (NodeId w : candidates[v]) {
      if (used[w] || !consistent(v, w, depth)) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

bool is_isomorphic_bruteforce(const Graph& g1, const Graph& g2) {
  if (g1.size() > kBruteForceNodeLimit || g2.size() > kBruteForceNodeLimit) {
    throw GraphError("is_isomorphic_bruteforce: graphs limited to " +
                     std::to_string(kBruteForceNodeLimit) + " nodes");
  }
  return find_isomorphism(g1, g2).has_value();
}

CanonicalCode canonical_code(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kBruteForceNodeLimit) {
    throw GraphError("canonical_code: graphs limited to " + std::to_string(kBruteForceNodeLimit) +
                     " nodes");
  }
  const std::vector<int> rank = refined_ranks(g);
  std::vector<int> position_cell;  // cell index of each position
  {
    std::vector<int> sorted = rank;
    std::sort(sorted.begin(), sorted.end());
    position_cell = sorted;
  }

  // Twins (same label, same neighborhood up to each other, same edge labels)
  // are interchangeable by an automorphism; only one per class is branched on.
  auto twins = [&](NodeId a, NodeId b) {
    if (g.label(a) != g.label(b) || rank[a] != rank[b]) return false;
    std::vector<std::pair<NodeId, Label>> na, nb;
    for (std::size_t i = 0; i < g.neighbors(a).size(); ++i) {
      if (g.neighbors(a)[i] != b) na.emplace_back(g.neighbors(a)[i], g.neighbor_edge_labels(a)[i]);
    }
    for (std::size_t i = 0; i < g.neighbors(b).size(); ++i) {
      if (g.neighbors(b)[i] != a) nb.emplace_back(g.neighbors(b)[i], g.neighbor_edge_labels(b)[i]);
    }
    return na == nb;
  };

  std::vector<std::int64_t> best;
  std::vector<std::int64_t> current;
  std::vector<NodeId> placed;
  std::vector<bool> used(n, false);
  bool have_best = false;

  auto token_for = [&](NodeId v, std::vector<std::int64_t>& out) {
    out.push_back(g.label(v));
    for (NodeId u : placed) {
      auto lab = g.edge_label(v, u);
      out.push_back(lab ? *lab + 1 : 0);
    }
  };

  auto dfs = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    const int cell = position_cell[pos];
    std::vector<NodeId> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || rank[v] != cell) continue;
      const auto nv = static_cast<NodeId>(v);
      bool redundant = false;
      for (NodeId t : tried) {
        if (twins(t, nv)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(nv);

      const std::size_t mark = current.size();
      token_for(nv, current);
      if (have_best) {
        // Compare the prefix with the incumbent; prune when strictly greater.
        auto cmp = std::lexicographical_compare_three_way(
            current.begin(), current.end(), best.begin(),
            best.begin() + static_cast<std::ptrdiff_t>(current.size()));
        if (cmp > 0) {
          current.resize(mark);
          continue;
        }
      }
      used[v] = true;
      placed.push_back(nv);
      self(self, pos + 1);
      placed.pop_back();
      used[v] = false;
      current.resize(mark);
    }
  };
  dfs(dfs, 0);

  CanonicalCode out;
  out.code = std::to_string(n) + ":";
  for (std::int64_t x : best) {
    out.code += std::to_string(x);
    out.code.push_back(',');
  }
  return out;
}

}  // namespace fragwl
