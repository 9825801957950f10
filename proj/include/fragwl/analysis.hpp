#ifndef FRAGWL_ANALYSIS_HPP
#define FRAGWL_ANALYSIS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "fragwl/augment.hpp"
#include "fragwl/fragmentation.hpp"
#include "fragwl/graph.hpp"
#include "fragwl/wl.hpp"

namespace fragwl {

inline constexpr std::size_t kCountingPatternLimit = 8;

/// Node subsets S with G[S] isomorphic to `pattern` (labels respected).
/// Throws std::invalid_argument for patterns above kCountingPatternLimit.
std::uint64_t count_induced_subgraphs(const Graph& g, const Graph& pattern);

/// Every node set inducing a cycle of length 3..max_length, by subset
/// enumeration. Sorted like chordless_cycles.
std::vector<std::vector<NodeId>> induced_cycles_bruteforce(const Graph& g, std::size_t max_length);

/// Moore-Penrose pseudoinverse of the combinatorial Laplacian by symmetric
/// eigendecomposition. Eigenvalues below `tol` are treated as zero.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> laplacian_pseudoinverse(const Graph& g, Scalar tol = Scalar(1e-9)) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = static_cast<Eigen::Index>(g.size());
  Matrix lap = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    lap(e.u, e.u) += Scalar(1);
    lap(e.v, e.v) += Scalar(1);
    lap(e.u, e.v) -= Scalar(1);
    lap(e.v, e.u) -= Scalar(1);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(lap);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  auto inv = values.unaryExpr([tol](Scalar x) { return x > tol ? Scalar(1) / x : Scalar(0); });
  return vectors * inv.asDiagonal() * vectors.transpose();
}

struct CommuteProfile {
  NodeId source = 0;
  std::vector<double> commute;  // one entry per reach-graph node
  Graph reach_graph;
  std::size_t num_original = 0;

  /// Largest commute time from the source to an original node.
  double max_original() const;
};

class DisconnectedGraphError : public std::invalid_argument {
 public:
  DisconnectedGraphError(const std::string& what, std::vector<std::vector<NodeId>> components)
      : std::invalid_argument(what), components_(std::move(components)) {}
  const std::vector<std::vector<NodeId>>& components() const { return components_; }

 private:
  std::vector<std::vector<NodeId>> components_;
};

/// commute(s, v) = 2|E| (L+_ss + L+_vv - 2 L+_sv). Throws
/// DisconnectedGraphError listing the components when g is disconnected.
CommuteProfile commute_times(const Graph& g, NodeId source);
CommuteProfile commute_times(const AugmentedGraph& g, NodeId source);

/// rook4x4, shrikhande, c6, two_c3, two_rings_path(r1,r2,plen), k(n),
/// cycle(n), path(n). Throws std::invalid_argument for anything else.
Graph make_named_graph(const std::string& name);

Graph make_cycle(std::size_t n);
Graph make_path(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_rook4x4();
Graph make_shrikhande();
/// Ring A is nodes 0..r1-1, ring B r1..r1+r2-1, the path the remaining
/// nodes; the path joins node 0 of A to node r1 of B.
Graph make_two_rings_path(std::size_t r1, std::size_t r2, std::size_t plen);

struct SrgParameters {
  std::size_t n, k, lambda, mu;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};
/// Parameters when g is strongly regular (and neither complete nor edgeless).
std::optional<SrgParameters> srg_parameters(const Graph& g);

using Rng = std::mt19937_64;

Graph random_graph(std::size_t n, double p, std::size_t num_labels, Rng& rng);
/// d-regular graph: a circulant randomized by degree-preserving edge swaps.
Graph random_regular(std::size_t n, std::size_t d, Rng& rng);
Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps);
Graph with_labels(const Graph& g, std::vector<Label> labels);
Graph random_relabeling(const Graph& g, Rng& rng);
/// Connected graph with max degree 4: random tree plus a few ring closures
/// of length 5..7, carbon/nitrogen/oxygen-like labels.
Graph random_molecular(std::size_t n, Rng& rng);

struct WitnessQuery {
  WlTest weak = WlTest::WL;
  WlTest strong = WlTest::NF;
  DistinguishOptions options;
  std::size_t max_n = 10;
  std::size_t budget = 1000000;
  std::uint64_t seed = 1;
};

struct Witness {
  Graph first;
  Graph second;
  std::string generator;
  std::size_t examined = 0;
};

struct WitnessSearchResult {
  std::optional<Witness> witness;
  std::size_t examined = 0;
};

/// Known pair first, then seeded structured and random generators, until a
/// pair is indistinguishable by `weak` and distinguished by `strong`.
WitnessSearchResult witness_search(const WitnessQuery& query);

/// {"first", "second", "weak", "strong", "scheme", "generator"} plus outcomes.
nlohmann::json witness_to_json(const Witness& w, const WitnessQuery& q);

/// One line of a witness fixtures file.
struct WitnessRecord {
  Graph first;
  Graph second;
  WlTest weak = WlTest::WL;
  WlTest strong = WlTest::NF;
  std::string scheme;
  bool strict_def4 = false;
  bool use_edge_labels = true;
  std::string generator;
};

WitnessRecord witness_record_from_json(const nlohmann::json& j);
/// JSON-lines file of witness_to_json records.
std::vector<WitnessRecord> read_witness_fixtures(const std::filesystem::path& path);

struct Theorem1Report {
  Outcome wl = Outcome::Indistinguishable;
  Outcome fwl2 = Outcome::Indistinguishable;
  Outcome nf_self_vocabulary = Outcome::Indistinguishable;
  Outcome fr_self_vocabulary = Outcome::Indistinguishable;
  Outcome hlg_self_vocabulary = Outcome::Indistinguishable;
  bool isomorphic = false;
};

/// Runs the fragment tests with the vocabulary {g1, g2} itself.
Theorem1Report theorem1_witness(const Graph& g1, const Graph& g2);

}  // namespace fragwl

#endif  // FRAGWL_ANALYSIS_HPP
