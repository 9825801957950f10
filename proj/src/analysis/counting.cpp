#include <algorithm>
#include <numeric>

#include "fragwl/analysis.hpp"

namespace fragwl {

namespace {

/// Calls visit(subset) for every m-subset of 0..n-1 in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t m, Visit&& visit) {
  if (m > n) return;
  std::vector<NodeId> subset(m);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    visit(static_cast<const std::vector<NodeId>&>(subset));
    std::size_t i = m;
    while (i > 0 && subset[i - 1] == static_cast<NodeId>(n - m + i - 1)) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t j = i; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < g.size(); ++v) d.push_back(g.degree(static_cast<NodeId>(v)));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::uint64_t count_induced_subgraphs(const Graph& g, const Graph& pattern) {
  if (pattern.size() > kCountingPatternLimit) {
    throw std::invalid_argument("pattern has " + std::to_string(pattern.size()) + " nodes; limit is " +
                                std::to_string(kCountingPatternLimit));
  }
  if (pattern.size() == 0) return 1;
  const CanonicalCode target = canonical_code(pattern);
  const auto degrees = degree_sequence(pattern);
  std::uint64_t count = 0;
  for_each_subset(g.size(), pattern.size(), [&](const std::vector<NodeId>& s) {
    const Graph sub = induced_subgraph(g, s);
    if (sub.num_edges() != pattern.num_edges() || degree_sequence(sub) != degrees) return;
    if (canonical_code(sub) == target) ++count;
  });
  return count;
}

std::vector<std::vector<NodeId>> induced_cycles_bruteforce(const Graph& g, std::size_t max_length) {
  std::vector<std::vector<NodeId>> out;
  for (std::size_t c = 3; c <= std::min(max_length, g.size()); ++c) {
    for_each_subset(g.size(), c, [&](const std::vector<NodeId>& s) {
      const Graph sub = induced_subgraph(g, s);
      if (sub.num_edges() != c) return;
      for (std::size_t v = 0; v < c; ++v) {
        if (sub.degree(static_cast<NodeId>(v)) != 2) return;
      }
      if (connected_components(sub).size() == 1) out.push_back(s);
    });
  }
  return out;
}

}  // namespace fragwl
