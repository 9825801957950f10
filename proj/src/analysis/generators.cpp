#include <algorithm>
#include <numeric>
#include <set>

#include "fragwl/analysis.hpp"

namespace fragwl {

Graph random_graph(std::size_t n, double p, std::size_t num_labels, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Label> pick(0, static_cast<Label>(std::max<std::size_t>(num_labels, 1) - 1));
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
  }
  std::vector<Label> labels(n);
  for (auto& l : labels) l = pick(rng);
  return build_graph(edges, std::move(labels));
}

Graph random_regular(std::size_t n, std::size_t d, Rng& rng) {
  if (d >= n || (n * d) % 2 != 0) {
    throw std::invalid_argument("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " nodes");
  }
  // Start from a circulant and randomize with degree-preserving double-edge swaps.
  std::set<std::pair<NodeId, NodeId>> edges;
  auto key = [](NodeId a, NodeId b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= d / 2; ++j) edges.insert(key(static_cast<NodeId>(i), static_cast<NodeId>((i + j) % n)));
    if (d % 2 == 1) edges.insert(key(static_cast<NodeId>(i), static_cast<NodeId>((i + n / 2) % n)));
  }
  std::vector<std::pair<NodeId, NodeId>> list(edges.begin(), edges.end());
  std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
  const std::size_t swaps = 10 * list.size();
  for (std::size_t s = 0; s < swaps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    auto [a, b] = list[i];
    auto [c, e] = list[j];
    if (std::bernoulli_distribution(0.5)(rng)) std::swap(c, e);
    if (a == c || a == e || b == c || b == e) continue;
    const auto n1 = key(a, c), n2 = key(b, e);
    if (edges.contains(n1) || edges.contains(n2)) continue;
    edges.erase(list[i]);
    edges.erase(list[j]);
    edges.insert(n1);
    edges.insert(n2);
    list[i] = n1;
    list[j] = n2;
  }
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return build_unlabeled(n, out);
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : jumps) {
      const std::size_t k = (i + j) % n;
      if (k != i) edges.push_back({static_cast<NodeId>(std::min(i, k)), static_cast<NodeId>(std::max(i, k))});
    }
  }
  return build_unlabeled(n, edges);
}

Graph with_labels(const Graph& g, std::vector<Label> labels) {
  const auto edges = g.edges();
  if (g.has_edge_labels()) return build_graph(edges, std::move(labels), g.edge_label_map());
  return build_graph(edges, std::move(labels));
}

Graph random_relabeling(const Graph& g, Rng& rng) {
  std::vector<NodeId> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(g, perm);
}

Graph random_molecular(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_molecular needs at least one node");
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::size_t> parent(n, 0), depth(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    std::vector<std::size_t> open;
    for (std::size_t u = 0; u < v; ++u) {
      if (degree[u] < 3) open.push_back(u);
    }
    const std::size_t u = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    ++degree[u];
    ++degree[v];
    parent[v] = u;
    depth[v] = depth[u] + 1;
  }
  auto tree_distance = [&](std::size_t a, std::size_t b) {
    std::size_t d = 0;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        a = parent[a];
      } else {
        b = parent[b];
      }
      ++d;
    }
    return d;
  };
  const std::size_t closures = std::uniform_int_distribution<std::size_t>(0, n / 6)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::set<std::pair<std::size_t, std::size_t>> added;
  for (std::size_t tries = 0; added.size() < closures && tries < 50 * n; ++tries) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b || degree[a] >= 4 || degree[b] >= 4) continue;
    const std::size_t dist = tree_distance(a, b);
    if (dist < 4 || dist > 6) continue;
    if (a > b) std::swap(a, b);
    if (!added.insert({a, b}).second) continue;
    edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b)});
    ++degree[a];
    ++degree[b];
  }
  std::discrete_distribution<Label> element({70.0, 15.0, 15.0});
  std::vector<Label> labels(n);
  for (auto& l : labels) l = element(rng);
  return build_graph(edges, std::move(labels));
}

}  // namespace fragwl
