#include <gtest/gtest.h>

#include <set>

#include "fragwl/graph.hpp"
#include "fragwl/graph_json.hpp"
#include "test_util.hpp"

using namespace fragwl;
using fragwl::testing::graph_of;
using fragwl::testing::random_perm;

TEST(BuildGraph, Triangle) {
  const Graph g = graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(BuildGraph, SingleNode) {
  const Graph g = build_graph({}, {0});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(BuildGraph, SymmetrizesDuplicates) {
  const Graph g = graph_of(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(BuildGraph, Errors) {
  const std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_THROW(build_graph(out_of_range, {0, 0}), GraphError);
  const std::vector<Edge> negative{{-1, 0}};
  EXPECT_THROW(build_graph(negative, {0, 0}), GraphError);
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(build_graph(loop, {0, 0}), GraphError);
  const std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(build_graph(e, {0}), GraphError);
  EdgeLabelMap conflicting{{{0, 1}, 1}, {{1, 0}, 2}};
  EXPECT_THROW(build_graph(e, {0, 0}, conflicting), GraphError);
}

TEST(BuildGraph, EdgeLabels) {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const Graph g = build_graph(e, {0, 0, 0}, EdgeLabelMap{{{1, 2}, 2}});
  EXPECT_TRUE(g.has_edge_labels());
  EXPECT_EQ(g.edge_label(0, 1), 0);
  EXPECT_EQ(g.edge_label(2, 1), 2);
  EXPECT_EQ(g.edge_label(0, 2), std::nullopt);
}

TEST(Isomorphism, Examples) {
  const Graph c3 = make_cycle(3);
  EXPECT_TRUE(is_isomorphic_bruteforce(c3, c3));
  EXPECT_FALSE(is_isomorphic_bruteforce(c3, make_path(3)));
  EXPECT_FALSE(is_isomorphic_bruteforce(make_cycle(6), make_named_graph("two_c3")));
}

TEST(Isomorphism, RespectsLabels) {
  const Graph p = make_path(3);
  EXPECT_FALSE(is_isomorphic_bruteforce(with_labels(p, {1, 0, 0}), with_labels(p, {0, 1, 0})));
  EXPECT_TRUE(is_isomorphic_bruteforce(with_labels(p, {1, 0, 0}), with_labels(p, {0, 0, 1})));
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const Graph a = build_graph(e, {0, 0, 0}, EdgeLabelMap{{{0, 1}, 2}});
  const Graph b = build_graph(e, {0, 0, 0}, EdgeLabelMap{{{1, 2}, 2}});
  const Graph c = build_graph(e, {0, 0, 0}, EdgeLabelMap{{{1, 2}, 3}});
  EXPECT_TRUE(is_isomorphic_bruteforce(a, b));
  EXPECT_FALSE(is_isomorphic_bruteforce(a, c));
}

TEST(Isomorphism, SizeLimit) {
  EXPECT_THROW(is_isomorphic_bruteforce(make_cycle(11), make_cycle(11)), GraphError);
  EXPECT_THROW(canonical_code(make_cycle(11)), GraphError);
  EXPECT_TRUE(find_isomorphism(make_rook4x4(), make_rook4x4()).has_value());
}

TEST(CanonicalCode, Examples) {
  const Graph a = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const Graph b = graph_of(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_NE(canonical_code(a), canonical_code(make_path(5)));
}

TEST(CanonicalCode, LabeledPathRelabelings) {
  const Graph abba = with_labels(make_path(4), {0, 1, 1, 0});
  std::vector<NodeId> perm{0, 1, 2, 3};
  std::set<CanonicalCode> codes;
  do {
    codes.insert(canonical_code(permute(abba, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(codes.size(), 1u);
  EXPECT_NE(canonical_code(abba), canonical_code(with_labels(make_path(4), {1, 0, 0, 1})));
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), 3, rng);
    const auto perm = random_perm(n, rng);
    ASSERT_EQ(canonical_code(g), canonical_code(permute(g, perm))) << "graph " << i;
  }
}

TEST(CanonicalCode, AgreesWithBruteForce) {
  Rng rng(12);
  std::vector<Graph> corpus;
  for (int i = 0; i < 120; ++i) {
    // Few labels and a narrow edge density so that collisions are frequent.
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 6)(rng);
    corpus.push_back(random_graph(n, 0.5, 1, rng));
  }
  std::size_t isomorphic_pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const bool iso = is_isomorphic_bruteforce(corpus[i], corpus[j]);
      ASSERT_EQ(iso, canonical_code(corpus[i]) == canonical_code(corpus[j]));
      ASSERT_EQ(iso, find_isomorphism(corpus[i], corpus[j]).has_value());
      isomorphic_pairs += iso;
    }
  }
  EXPECT_GT(isomorphic_pairs, 0u);
}

TEST(FindIsomorphism, MappingIsValid) {
  Rng rng(13);
  const Graph g = random_graph(9, 0.4, 2, rng);
  const auto perm = random_perm(9, rng);
  const Graph h = permute(g, perm);
  const auto m = find_isomorphism(g, h);
  ASSERT_TRUE(m.has_value());
  for (const Edge& e : g.edges()) EXPECT_TRUE(h.adjacent((*m)[e.u], (*m)[e.v]));
  for (NodeId v = 0; v < 9; ++v) EXPECT_EQ(g.label(v), h.label((*m)[v]));
}

TEST(InducedSubgraph, Examples) {
  const std::vector<NodeId> s{0, 1, 2};
  const Graph k = induced_subgraph(make_complete(4), s);
  EXPECT_EQ(k.num_edges(), 3u);
  const Graph p = induced_subgraph(make_cycle(6), s);
  EXPECT_TRUE(is_isomorphic_bruteforce(p, make_path(3)));
  const std::vector<NodeId> alt{0, 2, 4};
  EXPECT_EQ(induced_subgraph(make_cycle(6), alt).num_edges(), 0u);
  const std::vector<NodeId> bad{0, 9};
  EXPECT_THROW(induced_subgraph(make_cycle(6), bad), GraphError);
}

TEST(InducedSubgraph, WholeVertexSetRoundTrip) {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(8, 0.4, 2, rng);
    std::vector<NodeId> all(8);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(is_isomorphic_bruteforce(induced_subgraph(g, all), g));
  }
}

TEST(GraphOps, UnionAndComponents) {
  const Graph u = disjoint_union(make_cycle(3), make_path(2));
  EXPECT_EQ(u.size(), 5u);
  EXPECT_EQ(u.num_edges(), 4u);
  const auto comps = connected_components(u);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[1], (std::vector<NodeId>{3, 4}));
}

TEST(GraphOps, StripLabels) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = strip_labels(build_graph(e, {3, 4}, EdgeLabelMap{{{0, 1}, 2}}));
  EXPECT_EQ(g.label(0), 0);
  EXPECT_FALSE(g.has_edge_labels());
}

TEST(GraphJson, RoundTrip) {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const Graph g = build_graph(e, {5, 0, 7}, EdgeLabelMap{{{1, 2}, 2}});
  const auto j = graph_to_json(g);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(graph_from_json(graph_to_json(make_cycle(5))), make_cycle(5));
}

TEST(GraphJson, ParsesLinesAndArrays) {
  const std::string one = graph_to_json(make_cycle(4)).dump();
  EXPECT_EQ(parse_graphs_json(one + "\n" + one + "\n").size(), 2u);
  EXPECT_EQ(parse_graphs_json("[" + one + "," + one + "," + one + "]").size(), 3u);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 5]]})")), GraphError);
}
