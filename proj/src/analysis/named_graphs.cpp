#include <regex>
#include <sstream>

#include "fragwl/analysis.hpp"

namespace fragwl {

Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n)});
  return build_unlabeled(n, edges);
}

Graph make_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 node");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  return build_unlabeled(n, edges);
}

Graph make_complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least 1 node");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
  }
  return build_unlabeled(n, edges);
}

Graph make_rook4x4() {
  std::vector<Edge> edges;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      if (a / 4 == b / 4 || a % 4 == b % 4) edges.push_back({a, b});
    }
  }
  return build_unlabeled(16, edges);
}

Graph make_shrikhande() {
  std::vector<Edge> edges;
  const int gens[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      const int di = (b / 4 - a / 4 + 4) % 4, dj = (b % 4 - a % 4 + 4) % 4;
      for (const auto& g : gens) {
        if (g[0] == di && g[1] == dj) {
          edges.push_back({a, b});
          break;
        }
      }
    }
  }
  return build_unlabeled(16, edges);
}

Graph make_two_rings_path(std::size_t r1, std::size_t r2, std::size_t plen) {
  if (r1 < 3 || r2 < 3) throw std::invalid_argument("two_rings_path: rings need at least 3 nodes");
  std::vector<Edge> edges;
  auto id = [](std::size_t x) { return static_cast<NodeId>(x); };
  for (std::size_t i = 0; i < r1; ++i) edges.push_back({id(i), id((i + 1) % r1)});
  for (std::size_t i = 0; i < r2; ++i) edges.push_back({id(r1 + i), id(r1 + (i + 1) % r2)});
  const std::size_t base = r1 + r2;
  NodeId prev = 0;
  for (std::size_t i = 0; i < plen; ++i) {
    edges.push_back({prev, id(base + i)});
    prev = id(base + i);
  }
  edges.push_back({prev, id(r1)});
  return build_unlabeled(base + plen, edges);
}

Graph make_named_graph(const std::string& name) {
  if (name == "rook4x4") return make_rook4x4();
  if (name == "shrikhande") return make_shrikhande();
  if (name == "c6") return make_cycle(6);
  if (name == "two_c3") return disjoint_union(make_cycle(3), make_cycle(3));
  static const std::regex call(R"(^([a-z_]+)\(([0-9,\s]*)\)$)");
  std::smatch m;
  if (std::regex_match(name, m, call)) {
    std::vector<std::size_t> args;
    std::stringstream ss(m[2].str());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) throw std::invalid_argument("empty argument in " + name);
      args.push_back(std::stoul(tok));
    }
    const std::string fn = m[1].str();
    if (fn == "two_rings_path" && args.size() == 3) return make_two_rings_path(args[0], args[1], args[2]);
    if (fn == "k" && args.size() == 1) return make_complete(args[0]);
    if (fn == "cycle" && args.size() == 1) return make_cycle(args[0]);
    if (fn == "path" && args.size() == 1) return make_path(args[0]);
  }
  throw std::invalid_argument("unknown named graph: " + name +
                              " (expected rook4x4, shrikhande, c6, two_c3, two_rings_path(r1,r2,plen), k(n), "
                              "cycle(n) or path(n))");
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
  const std::size_t n = g.size();
  if (n < 2) return std::nullopt;
  const std::size_t k = g.degree(0);
  std::optional<std::size_t> lambda, mu;
  for (std::size_t a = 0; a < n; ++a) {
    if (g.degree(static_cast<NodeId>(a)) != k) return std::nullopt;
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t common = 0;
      for (NodeId w : g.neighbors(static_cast<NodeId>(a))) common += g.adjacent(w, static_cast<NodeId>(b)) ? 1 : 0;
      auto& slot = g.adjacent(static_cast<NodeId>(a), static_cast<NodeId>(b)) ? lambda : mu;
      if (slot && *slot != common) return std::nullopt;
      slot = common;
    }
  }
  if (!lambda || !mu) return std::nullopt;
  return SrgParameters{n, k, *lambda, *mu};
}

}  // namespace fragwl
