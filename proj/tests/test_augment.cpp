#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "fragwl/analysis.hpp"
#include "fragwl/augment.hpp"
#include "fragwl/smiles.hpp"
#include "test_util.hpp"

using namespace fragwl;

namespace {

std::vector<NodeId> nodes_of_kind(const AugmentedGraph& a, NodeKind k) {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < a.node_kind.size(); ++v) {
    if (a.node_kind[v] == k) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

std::size_t fragment_fragment_edges(const AugmentedGraph& a) {
  std::size_t k = 0;
  for (const Edge& e : a.graph.edges()) {
    k += a.node_kind[e.u] == NodeKind::FragmentNode && a.node_kind[e.v] == NodeKind::FragmentNode;
  }
  return k;
}

std::vector<Label> sorted_labels(const Graph& g) {
  std::vector<Label> out(g.labels().begin(), g.labels().end());
  std::sort(out.begin(), out.end());
  return out;
}

Graph skeleton(const std::string& smiles) { return strip_labels(parse_smiles(smiles)); }

}  // namespace

TEST(AugmentNf, TriangleIsSymmetric) {
  ColorInterner interner;
  const Graph c3 = make_cycle(3);
  const Graph nf = augment_nf(c3, fragment_all_cycles(c3, 3), interner);
  EXPECT_EQ(nf.size(), 3u);
  EXPECT_EQ(nf.num_edges(), 3u);
  EXPECT_EQ(nf.label(0), nf.label(1));
  EXPECT_EQ(nf.label(1), nf.label(2));
}

TEST(AugmentNf, EmptyFragmentationWrapsLabels) {
  ColorInterner interner;
  const Graph p3 = with_labels(make_path(3), {0, 1, 0});
  const Graph nf = augment_nf(p3, Fragmentation{}, interner);
  EXPECT_EQ(nf.label(0), nf.label(2));
  EXPECT_NE(nf.label(0), nf.label(1));
  EXPECT_EQ(nf.edges(), p3.edges());
}

TEST(AugmentNf, TrianglesVersusHexagon) {
  ColorInterner interner;
  const Graph a = make_named_graph("two_c3"), b = make_cycle(6);
  const Graph na = augment_nf(a, fragment_all_cycles(a, 3), interner);
  const Graph nb = augment_nf(b, fragment_all_cycles(b, 3), interner);
  EXPECT_NE(sorted_labels(na), sorted_labels(nb));
}

TEST(AugmentNf, LabelIsInjectiveInFeatureAndTypes) {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    ColorInterner interner;
    const Graph g = random_graph(9, 0.45, 2, rng);
    const Fragmentation fr = fragment_all_cycles(g, 5);
    const Graph nf = augment_nf(g, fr, interner);
    std::vector<std::vector<TypeId>> types(g.size());
    for (const auto& f : fr.fragments) {
      for (NodeId v : f.nodes) types[v].push_back(f.type_id);
    }
    for (auto& t : types) std::sort(t.begin(), t.end());
    for (NodeId u = 0; u < 9; ++u) {
      for (NodeId v = 0; v < 9; ++v) {
        const bool same_key = g.label(u) == g.label(v) && types[u] == types[v];
        ASSERT_EQ(same_key, nf.label(u) == nf.label(v));
      }
    }
  }
}

TEST(AugmentNf, UnknownNodeThrows) {
  ColorInterner interner;
  Fragmentation bad;
  bad.fragments.push_back({{0, 9}, FragmentClass::Path, make_type_id(FragmentFamily::Path, 2)});
  EXPECT_THROW(augment_nf(make_cycle(6), bad, interner), GraphError);
  EXPECT_THROW(augment_fr(make_cycle(6), bad), GraphError);
  EXPECT_THROW(augment_hlg(make_cycle(6), bad), GraphError);
}

TEST(AugmentFr, Examples) {
  const Graph c6 = make_cycle(6);
  const AugmentedGraph a = augment_fr(c6, fragment_rings(c6));
  EXPECT_EQ(a.graph.size(), 7u);
  EXPECT_EQ(a.graph.num_edges(), 12u);
  EXPECT_EQ(a.graph.degree(6), 6u);
  EXPECT_EQ(a.node_kind[6], NodeKind::FragmentNode);
  ASSERT_EQ(a.frag_of.count(6), 1u);
  EXPECT_EQ(a.frag_of.at(6).size(), 6u);

  const AugmentedGraph empty = augment_fr(c6, Fragmentation{});
  EXPECT_EQ(empty.graph.size(), 6u);
  EXPECT_EQ(empty.graph.edges(), c6.edges());
  EXPECT_EQ(nodes_of_kind(empty, NodeKind::Original).size(), 6u);

  const Graph k4 = make_complete(4);
  const AugmentedGraph t = augment_fr(k4, fragment_all_cycles(k4, 3));
  EXPECT_EQ(t.graph.size(), 8u);
  for (NodeId f : nodes_of_kind(t, NodeKind::FragmentNode)) EXPECT_EQ(t.graph.degree(f), 3u);
  EXPECT_EQ(fragment_fragment_edges(t), 0u);
}

TEST(AugmentHlg, NaphthaleneRingsAdjacent) {
  const Graph g = skeleton("c1ccc2ccccc2c1");
  const AugmentedGraph a = augment_hlg(g, fragment_rings_paths(g));
  const auto frags = nodes_of_kind(a, NodeKind::FragmentNode);
  ASSERT_EQ(frags.size(), 2u);
  EXPECT_TRUE(a.graph.adjacent(frags[0], frags[1]));
}

TEST(AugmentHlg, DisjointTrianglesNotAdjacent) {
  const Graph g = make_named_graph("two_c3");
  EXPECT_EQ(fragment_fragment_edges(augment_hlg(g, fragment_all_cycles(g, 3))), 0u);
}

TEST(AugmentHlg, StarRoutesThroughJunction) {
  const Graph g = skeleton("CC(C)(C)C");
  const Fragmentation fr = fragment_rings_paths(g);
  const AugmentedGraph a = augment_hlg(g, fr);
  NodeId junction = -1;
  std::vector<NodeId> paths;
  for (const auto& [id, f] : a.frag_of) {
    if (f.frag_class == FragmentClass::Junction) {
      junction = id;
    } else {
      paths.push_back(id);
    }
  }
  ASSERT_GE(junction, 0);
  ASSERT_EQ(paths.size(), 4u);
  for (NodeId p : paths) EXPECT_TRUE(a.graph.adjacent(p, junction));
  EXPECT_EQ(fragment_fragment_edges(a), 4u);

  const AugmentedGraph strict = augment_hlg(g, fr, true);
  EXPECT_EQ(fragment_fragment_edges(strict), 4u + 6u);
}

TEST(AugmentHlg, ContainsFrAndIntersections) {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const Graph g = i % 2 ? random_molecular(14, rng) : random_graph(9, 0.4, 2, rng);
    for (const Scheme& s : {Scheme::rings_paths(), Scheme::all_cycles(4)}) {
      const Fragmentation fr = s.apply(g);
      const AugmentedGraph fra = augment_fr(g, fr);
      for (bool strict : {false, true}) {
        const AugmentedGraph hlg = augment_hlg(g, fr, strict);
        ASSERT_EQ(hlg.graph.size(), fra.graph.size());
        for (const Edge& e : fra.graph.edges()) ASSERT_TRUE(hlg.graph.adjacent(e.u, e.v));
        for (const auto& [a, fa] : hlg.frag_of) {
          for (const auto& [b, fb] : hlg.frag_of) {
            if (a >= b) continue;
            std::vector<NodeId> common;
            std::set_intersection(fa.nodes.begin(), fa.nodes.end(), fb.nodes.begin(), fb.nodes.end(),
                                  std::back_inserter(common));
            if (common.empty()) {
              ASSERT_FALSE(hlg.graph.adjacent(a, b));
            } else if (strict) {
              ASSERT_TRUE(hlg.graph.adjacent(a, b));
            }
          }
        }
      }
    }
  }
}

TEST(AugmentEr, Examples) {
  const AugmentedGraph c3 = augment_er(make_cycle(3));
  EXPECT_EQ(c3.graph.size(), 6u);
  EXPECT_EQ(c3.graph.num_edges(), 9u);
  const Graph edgeless = build_graph({}, {0, 1});
  EXPECT_EQ(augment_er(edgeless).graph, edgeless);
  const AugmentedGraph p3 = augment_er(make_path(3));
  EXPECT_EQ(p3.graph.size(), 5u);
  for (NodeId e : nodes_of_kind(p3, NodeKind::EdgeNode)) EXPECT_EQ(p3.graph.degree(e), 2u);
}

TEST(AugmentGr, Examples) {
  const AugmentedGraph c6 = augment_gr(make_cycle(6));
  EXPECT_EQ(c6.graph.size(), 7u);
  EXPECT_EQ(c6.graph.degree(6), 6u);
  EXPECT_EQ(c6.node_kind[6], NodeKind::GraphNode);
  const AugmentedGraph one = augment_gr(build_graph({}, {0}));
  EXPECT_EQ(one.graph.size(), 2u);
  EXPECT_EQ(one.graph.num_edges(), 1u);
  const AugmentedGraph tc = augment_gr(make_named_graph("two_c3"));
  EXPECT_EQ(tc.graph.degree(6), 6u);
  EXPECT_EQ(connected_components(tc.graph).size(), 1u);
}

TEST(Augment, RestrictRecoversOriginal) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const Graph g = i % 2 ? parse_smiles("CC(=O)Nc1ccc(O)cc1") : random_graph(9, 0.4, 3, rng);
    const Fragmentation fr = fragment_rings_paths(g);
    for (const AugmentedGraph& a : {augment_fr(g, fr), augment_hlg(g, fr), augment_hlg(g, fr, true), augment_er(g),
                                    augment_gr(g)}) {
      ASSERT_EQ(restrict_to_original(a), g);
      ASSERT_EQ(a.num_original(), g.size());
      ASSERT_EQ(a.node_kind.size(), a.graph.size());
    }
  }
}

TEST(Augment, EdgeLabelsOnAddedEdges) {
  const Graph g = parse_smiles("C1CCCCC1");
  const AugmentedGraph a = augment_fr(g, fragment_rings(g));
  EXPECT_TRUE(a.graph.has_edge_labels());
  EXPECT_EQ(a.graph.edge_label(0, 6), 0);
  EXPECT_EQ(a.graph.edge_label(0, 1), static_cast<Label>(BondOrder::Single));
}

TEST(Augment, Json) {
  const Graph c6 = make_cycle(6);
  const auto j = augmented_to_json(augment_hlg(c6, fragment_rings(c6)));
  EXPECT_EQ(j["n"], 7);
  EXPECT_EQ(j["node_kind"][6], "fragment");
  EXPECT_EQ(j["node_kind"][0], "original");
  EXPECT_EQ(j["frag_of"]["6"]["class"], "ring");
  EXPECT_EQ(j["frag_of"]["6"]["nodes"].size(), 6u);
}
