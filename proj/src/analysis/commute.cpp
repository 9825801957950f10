#include <algorithm>

#include "fragwl/analysis.hpp"

namespace fragwl {

double CommuteProfile::max_original() const {
  double best = 0.0;
  for (std::size_t v = 0; v < num_original && v < commute.size(); ++v) best = std::max(best, commute[v]);
  return best;
}

namespace {

CommuteProfile solve(const Graph& reach, NodeId source, std::size_t num_original) {
  if (source < 0 || static_cast<std::size_t>(source) >= reach.size()) {
    throw std::invalid_argument("commute source " + std::to_string(source) + " out of range");
  }
  auto components = connected_components(reach);
  if (components.size() > 1) {
    std::string what = "reach graph is disconnected (" + std::to_string(components.size()) + " components:";
    for (const auto& c : components) what += " " + std::to_string(c.size());
    throw DisconnectedGraphError(what + " nodes)", std::move(components));
  }
  const Eigen::MatrixXd pinv = laplacian_pseudoinverse<double>(reach);
  const double scale = 2.0 * static_cast<double>(reach.num_edges());
  CommuteProfile p;
  p.source = source;
  p.num_original = num_original;
  p.commute.resize(reach.size());
  for (std::size_t v = 0; v < reach.size(); ++v) {
    const auto vi = static_cast<Eigen::Index>(v);
    const double r = pinv(source, source) + pinv(vi, vi) - 2.0 * pinv(source, vi);
    p.commute[v] = static_cast<NodeId>(v) == source ? 0.0 : scale * std::max(r, 0.0);
  }
  p.reach_graph = reach;
  return p;
}

}  // namespace

CommuteProfile commute_times(const Graph& g, NodeId source) { return solve(g, source, g.size()); }

CommuteProfile commute_times(const AugmentedGraph& g, NodeId source) {
  return solve(g.graph, source, g.num_original());
}

}  // namespace fragwl
