#include <gtest/gtest.h>

#include <cmath>

#include "fragwl/analysis.hpp"
#include "fragwl/graph_json.hpp"
#include "test_util.hpp"

using namespace fragwl;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Mean round-trip length s -> v -> s of a simple random walk.
double monte_carlo_commute(const Graph& g, NodeId s, NodeId v, std::size_t walks, std::uint64_t seed) {
  Rng rng(seed);
  std::uint64_t steps = 0;
  for (std::size_t w = 0; w < walks; ++w) {
    NodeId at = s;
    for (NodeId target : {v, s}) {
      while (at != target) {
        const auto nbrs = g.neighbors(at);
        at = nbrs[std::uniform_int_distribution<std::size_t>(0, nbrs.size() - 1)(rng)];
        ++steps;
      }
    }
  }
  return static_cast<double>(steps) / static_cast<double>(walks);
}

// Effective resistance by grounding s and solving the reduced Laplacian.
double grounded_commute(const Graph& g, NodeId s, NodeId v) {
  if (s == v) return 0.0;
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    lap(e.u, e.u) += 1;
    lap(e.v, e.v) += 1;
    lap(e.u, e.v) -= 1;
    lap(e.v, e.u) -= 1;
  }
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i != s) keep.push_back(i);
  }
  Eigen::MatrixXd reduced(n - 1, n - 1);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) reduced(a, b) = lap(keep[a], keep[b]);
  }
  const auto idx = static_cast<Eigen::Index>(std::find(keep.begin(), keep.end(), v) - keep.begin());
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n - 1);
  rhs(idx) = 1;
  const Eigen::VectorXd x = reduced.ldlt().solve(rhs);
  return 2.0 * static_cast<double>(g.num_edges()) * x(idx);
}

std::uint64_t induced_p3_closed_form(const Graph& g) {
  std::uint64_t wedges = 0;
  for (NodeId v = 0; v < static_cast<NodeId>(g.size()); ++v) wedges += binomial(g.degree(v), 2);
  return wedges - 3 * count_induced_subgraphs(g, make_cycle(3));
}

}  // namespace

TEST(Counting, Examples) {
  EXPECT_EQ(count_induced_subgraphs(make_complete(4), make_cycle(3)), 4u);
  EXPECT_EQ(count_induced_subgraphs(make_cycle(6), make_cycle(3)), 0u);
  EXPECT_THROW(count_induced_subgraphs(make_cycle(12), make_cycle(9)), std::invalid_argument);
}

TEST(Counting, ClosedForms) {
  for (std::size_t n = 3; n <= 7; ++n) {
    EXPECT_EQ(count_induced_subgraphs(make_complete(n), make_cycle(3)), binomial(n, 3));
    EXPECT_EQ(count_induced_subgraphs(make_complete(n), make_path(3)), 0u);
  }
  for (std::size_t n = 4; n <= 12; ++n) {
    EXPECT_EQ(count_induced_subgraphs(make_cycle(n), make_cycle(3)), 0u);
    EXPECT_EQ(count_induced_subgraphs(make_cycle(n), make_path(3)), n);
    if (n <= kCountingPatternLimit) {
      EXPECT_EQ(count_induced_subgraphs(make_cycle(n), make_cycle(n)), 1u);
    }
  }
}

TEST(Counting, InducedWedgesOracle) {
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(std::uniform_int_distribution<std::size_t>(3, 11)(rng), 0.4, 1, rng);
    ASSERT_EQ(count_induced_subgraphs(g, make_path(3)), induced_p3_closed_form(g)) << "graph " << i;
  }
}

TEST(Counting, RespectsLabels) {
  const Graph g = with_labels(make_cycle(4), {1, 0, 1, 0});
  EXPECT_EQ(count_induced_subgraphs(g, with_labels(make_path(3), {1, 0, 1})), 2u);
  EXPECT_EQ(count_induced_subgraphs(g, with_labels(make_path(3), {0, 1, 0})), 2u);
  EXPECT_EQ(count_induced_subgraphs(g, with_labels(make_path(3), {1, 1, 0})), 0u);
}

TEST(Counting, InducedCyclesOracle) {
  const auto k4 = induced_cycles_bruteforce(make_complete(4), 6);
  EXPECT_EQ(k4.size(), 4u);
  EXPECT_EQ(induced_cycles_bruteforce(make_cycle(6), 5).size(), 0u);
  EXPECT_EQ(induced_cycles_bruteforce(make_cycle(6), 6).size(), 1u);
}

TEST(NamedGraphs, StronglyRegularPair) {
  const Graph rook = make_named_graph("rook4x4"), shrikhande = make_named_graph("shrikhande");
  const SrgParameters srg{16, 6, 2, 2};
  EXPECT_EQ(srg_parameters(rook), srg);
  EXPECT_EQ(srg_parameters(shrikhande), srg);
  EXPECT_EQ(rook.num_edges(), 48u);
  EXPECT_EQ(shrikhande.num_edges(), 48u);
  EXPECT_FALSE(find_isomorphism(rook, shrikhande).has_value());
  EXPECT_EQ(count_induced_subgraphs(rook, make_cycle(5)), 0u);
  EXPECT_GT(count_induced_subgraphs(shrikhande, make_cycle(5)), 0u);
  EXPECT_FALSE(srg_parameters(make_complete(5)).has_value());
  EXPECT_FALSE(srg_parameters(make_path(4)).has_value());
  EXPECT_EQ(srg_parameters(make_cycle(5)), (SrgParameters{5, 2, 0, 1}));
}

TEST(NamedGraphs, Constructors) {
  const Graph t = make_named_graph("two_rings_path(6,6,4)");
  EXPECT_EQ(t.size(), 16u);
  EXPECT_EQ(t.num_edges(), 17u);
  EXPECT_EQ(connected_components(t).size(), 1u);
  EXPECT_TRUE(t.adjacent(0, 12));
  EXPECT_TRUE(t.adjacent(15, 6));
  EXPECT_EQ(make_named_graph("k(5)").num_edges(), 10u);
  EXPECT_EQ(make_named_graph("cycle(7)"), make_cycle(7));
  EXPECT_EQ(make_named_graph("path(3)").num_edges(), 2u);
  EXPECT_EQ(make_named_graph("c6"), make_cycle(6));
  EXPECT_EQ(connected_components(make_named_graph("two_c3")).size(), 2u);
  EXPECT_THROW(make_named_graph("petersen"), std::invalid_argument);
  EXPECT_THROW(make_named_graph("cycle(2)"), std::invalid_argument);
  EXPECT_THROW(make_named_graph("two_rings_path(6,6)"), std::invalid_argument);
}

TEST(Generators, Shapes) {
  Rng rng(72);
  for (int i = 0; i < 50; ++i) {
    const Graph r = random_regular(10, 3, rng);
    for (NodeId v = 0; v < 10; ++v) ASSERT_EQ(r.degree(v), 3u);
    const Graph m = random_molecular(25, rng);
    ASSERT_EQ(m.size(), 25u);
    ASSERT_EQ(connected_components(m).size(), 1u);
    for (NodeId v = 0; v < 25; ++v) ASSERT_LE(m.degree(v), 4u);
  }
  EXPECT_EQ(circulant(8, {1, 2}).num_edges(), 16u);
  EXPECT_THROW(random_regular(7, 3, rng), std::invalid_argument);
  EXPECT_THROW(with_labels(make_cycle(3), {0, 1}), GraphError);
  Rng a(5), b(5);
  EXPECT_EQ(random_graph(9, 0.5, 3, a), random_graph(9, 0.5, 3, b));
}

TEST(Commute, Examples) {
  const CommuteProfile p2 = commute_times(make_path(2), 0);
  EXPECT_NEAR(p2.commute[1], 2.0, 1e-9);
  EXPECT_NEAR(p2.commute[0], 0.0, 1e-9);
  const CommuteProfile c4 = commute_times(make_cycle(4), 0);
  EXPECT_NEAR(c4.commute[2], 8.0, 1e-9);
  EXPECT_NEAR(c4.commute[1], 6.0, 1e-9);
  EXPECT_EQ(c4.num_original, 4u);
  EXPECT_NEAR(c4.max_original(), 8.0, 1e-9);
}

TEST(Commute, MatchesGroundedSolve) {
  Rng rng(73);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_molecular(std::uniform_int_distribution<std::size_t>(2, 20)(rng), rng);
    const auto s = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng));
    const CommuteProfile p = commute_times(g, s);
    for (NodeId v = 0; v < static_cast<NodeId>(g.size()); ++v) {
      ASSERT_NEAR(p.commute[v], grounded_commute(g, s, v), 1e-6 * (1 + p.commute[v]));
    }
  }
}

TEST(Commute, SymmetricInEndpoints) {
  const Graph g = make_two_rings_path(6, 6, 4);
  for (NodeId a : {0, 3, 9, 14}) {
    const CommuteProfile pa = commute_times(g, a);
    for (NodeId b : {1, 7, 12}) EXPECT_NEAR(pa.commute[b], commute_times(g, b).commute[a], 1e-7);
  }
}

TEST(Commute, MonteCarloOracle) {
  const std::pair<Graph, NodeId> cases[] = {{make_path(2), 1}, {make_cycle(4), 2}, {make_complete(5), 3},
                                            {make_path(5), 4}};
  std::uint64_t seed = 74;
  for (const auto& [g, v] : cases) {
    const double exact = commute_times(g, 0).commute[v];
    const double estimate = monte_carlo_commute(g, 0, v, 1000000, seed++);
    EXPECT_NEAR(estimate, exact, 0.01 * exact) << "graph with " << g.size() << " nodes";
  }
}

TEST(Commute, AugmentedReachGraph) {
  const Graph g = make_two_rings_path(6, 6, 4);
  const AugmentedGraph hlg = augment_hlg(g, fragment_rings_paths(g));
  const CommuteProfile p = commute_times(hlg, 3);
  EXPECT_EQ(p.reach_graph.size(), hlg.graph.size());
  EXPECT_EQ(p.num_original, 16u);
  EXPECT_EQ(p.commute.size(), hlg.graph.size());
  const double none = commute_times(augment_hlg(g, Fragmentation{}), 3).max_original();
  const double rings = commute_times(augment_hlg(g, fragment_rings(g)), 3).max_original();
  EXPECT_NEAR(none, 272.0, 1e-6);
  EXPECT_NEAR(rings, 382.8, 1e-6);
  EXPECT_LT(p.max_original(), rings);
  EXPECT_LT(p.max_original(), none);
}

TEST(Commute, Errors) {
  try {
    commute_times(make_named_graph("two_c3"), 0);
    FAIL() << "expected DisconnectedGraphError";
  } catch (const DisconnectedGraphError& e) {
    ASSERT_EQ(e.components().size(), 2u);
    EXPECT_EQ(e.components()[1], (std::vector<NodeId>{3, 4, 5}));
  }
  EXPECT_THROW(commute_times(make_cycle(4), 9), std::invalid_argument);
}

TEST(LaplacianPinv, FloatAndDouble) {
  const Graph c5 = make_cycle(5);
  const Eigen::MatrixXd d = laplacian_pseudoinverse<double>(c5);
  const Eigen::MatrixXf f = laplacian_pseudoinverse<float>(c5, 1e-5f);
  EXPECT_NEAR((d.cast<float>() - f).cwiseAbs().maxCoeff(), 0.0f, 1e-4f);
  EXPECT_NEAR(d.rowwise().sum().cwiseAbs().maxCoeff(), 0.0, 1e-9);
}

TEST(WitnessSearch, KnownPairFirst) {
  WitnessQuery q;
  q.weak = WlTest::WL;
  q.strong = WlTest::NF;
  q.options.scheme = Scheme::all_cycles(3);
  const auto r = witness_search(q);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.examined, 1u);
  EXPECT_TRUE(is_isomorphic_bruteforce(r.witness->first, make_named_graph("two_c3")));
  EXPECT_TRUE(is_isomorphic_bruteforce(r.witness->second, make_cycle(6)));
}

TEST(WitnessSearch, FindsFrHlgPairDeterministically) {
  WitnessQuery q;
  q.weak = WlTest::FR;
  q.strong = WlTest::HLG;
  q.options.scheme = Scheme::all_cycles(3);
  q.budget = 100000;
  const auto a = witness_search(q);
  const auto b = witness_search(q);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.examined, b.examined);
  EXPECT_EQ(a.witness->first, b.witness->first);
  EXPECT_EQ(a.witness->second, b.witness->second);
  EXPECT_LE(a.witness->first.size(), 10u);
  EXPECT_EQ(distinguish(a.witness->first, a.witness->second, WlTest::FR, q.options).outcome,
            Outcome::Indistinguishable);
  EXPECT_EQ(distinguish(a.witness->first, a.witness->second, WlTest::HLG, q.options).outcome,
            Outcome::Distinguished);

  const auto j = witness_to_json(*a.witness, q);
  const WitnessRecord rec = witness_record_from_json(j);
  EXPECT_EQ(rec.first, a.witness->first);
  EXPECT_EQ(rec.weak, WlTest::FR);
  EXPECT_EQ(rec.strong, WlTest::HLG);
  EXPECT_EQ(rec.scheme, "all_cycles:3");
}

TEST(WitnessSearch, BudgetAndLimits) {
  WitnessQuery q;
  q.weak = WlTest::HLG;
  q.strong = WlTest::WL;
  q.options.scheme = Scheme::all_cycles(3);
  q.budget = 500;
  const auto r = witness_search(q);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_GE(r.examined, 500u);
  q.max_n = 11;
  EXPECT_THROW(witness_search(q), std::invalid_argument);
}

TEST(WitnessFixtures, PinnedPairsStillSeparate) {
  const auto records = read_witness_fixtures(FRAGWL_FIXTURE_DIR "/witnesses.jsonl");
  ASSERT_EQ(records.size(), 3u);
  const std::pair<WlTest, WlTest> steps[] = {{WlTest::WL, WlTest::NF}, {WlTest::NF, WlTest::FR},
                                             {WlTest::FR, WlTest::HLG}};
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    EXPECT_EQ(rec.weak, steps[i].first);
    EXPECT_EQ(rec.strong, steps[i].second);
    EXPECT_LE(rec.first.size(), 10u);
    DistinguishOptions o;
    o.scheme = Scheme::parse(rec.scheme);
    o.strict_def4 = rec.strict_def4;
    o.use_edge_labels = rec.use_edge_labels;
    EXPECT_EQ(distinguish(rec.first, rec.second, rec.weak, o).outcome, Outcome::Indistinguishable) << rec.generator;
    EXPECT_EQ(distinguish(rec.first, rec.second, rec.strong, o).outcome, Outcome::Distinguished) << rec.generator;
    EXPECT_FALSE(find_isomorphism(rec.first, rec.second).has_value());
  }
  EXPECT_THROW(read_witness_fixtures("/nonexistent/witnesses.jsonl"), std::runtime_error);
}

TEST(SelfVocabularyWitness, SeparatesHardPairs) {
  const Theorem1Report srg = theorem1_witness(make_rook4x4(), make_shrikhande());
  EXPECT_FALSE(srg.isomorphic);
  EXPECT_EQ(srg.wl, Outcome::Indistinguishable);
  EXPECT_EQ(srg.fwl2, Outcome::Indistinguishable);
  EXPECT_EQ(srg.nf_self_vocabulary, Outcome::Distinguished);
  EXPECT_EQ(srg.fr_self_vocabulary, Outcome::Distinguished);
  EXPECT_EQ(srg.hlg_self_vocabulary, Outcome::Distinguished);

  Rng rng(75);
  const Graph c6 = make_cycle(6);
  const Theorem1Report iso = theorem1_witness(c6, random_relabeling(c6, rng));
  EXPECT_TRUE(iso.isomorphic);
  for (Outcome o : {iso.wl, iso.fwl2, iso.nf_self_vocabulary, iso.fr_self_vocabulary, iso.hlg_self_vocabulary}) {
    EXPECT_EQ(o, Outcome::Indistinguishable);
  }

  const Theorem1Report small = theorem1_witness(make_named_graph("two_c3"), c6);
  EXPECT_EQ(small.nf_self_vocabulary, Outcome::Distinguished);
  EXPECT_EQ(small.wl, Outcome::Indistinguishable);
}
