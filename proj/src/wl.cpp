#include "fragwl/wl.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace fragwl {

Fingerprint make_fingerprint(std::span<const Color> colors, std::size_t rounds) {
  std::map<Color, std::size_t> counts;
  for (Color c : colors) ++counts[c];
  Fingerprint fp;
  fp.histogram.assign(counts.begin(), counts.end());
  fp.rounds = rounds;
  return fp;
}

nlohmann::json fingerprint_to_json(const Fingerprint& fp) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [c, n] : fp.histogram) hist.push_back({c, n});
  return {{"histogram", std::move(hist)}, {"rounds", fp.rounds}};
}

namespace {

std::size_t distinct(const std::vector<std::vector<Color>>& colorings) {
  std::unordered_set<Color> seen;
  for (const auto& cs : colorings) seen.insert(cs.begin(), cs.end());
  return seen.size();
}

}  // namespace

std::vector<Color> initial_colors(const Graph& g, std::span<const NodeKind> kinds, ColorInterner& interner) {
  std::vector<Color> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto kind = kinds.empty() ? NodeKind::Original : kinds[v];
    out[v] = interner.intern({tag(KeyTag::WlInit), static_cast<std::int64_t>(kind), g.label(static_cast<NodeId>(v))});
  }
  return out;
}

std::vector<Coloring> wl_refine_joint(const std::vector<const Graph*>& graphs,
                                      std::vector<std::vector<Color>> initial, ColorInterner& interner,
                                      const WlOptions& options) {
  std::vector<Coloring> out(graphs.size());
  std::vector<std::vector<Color>> current = std::move(initial);
  for (std::size_t i = 0; i < graphs.size(); ++i) out[i].history.push_back(current[i]);
  std::size_t count = distinct(current);

  std::vector<std::int64_t> key;
  std::vector<std::pair<Color, Label>> nbrs;
  for (std::size_t round = 1;; ++round) {
    std::vector<std::vector<Color>> next(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = *graphs[i];
      next[i].resize(g.size());
      for (std::size_t v = 0; v < g.size(); ++v) {
        const auto ns = g.neighbors(static_cast<NodeId>(v));
        const auto ls = g.neighbor_edge_labels(static_cast<NodeId>(v));
        nbrs.clear();
        for (std::size_t j = 0; j < ns.size(); ++j) {
          nbrs.emplace_back(current[i][ns[j]], options.use_edge_labels ? ls[j] : 0);
        }
        std::sort(nbrs.begin(), nbrs.end());
        key.assign({tag(KeyTag::WlRound), current[i][v]});
        for (const auto& [c, l] : nbrs) {
          key.push_back(c);
          key.push_back(l);
        }
        next[i][v] = interner.intern(key);
      }
    }
    const std::size_t next_count = distinct(next);
    current = std::move(next);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      out[i].history.push_back(current[i]);
      out[i].round = round;
    }
    if (next_count == count) break;
    count = next_count;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) out[i].colors = current[i];
  return out;
}

Coloring wl_refine(const Graph& g, ColorInterner& interner, const WlOptions& options) {
  return std::move(wl_refine_joint({&g}, {initial_colors(g, {}, interner)}, interner, options).front());
}

Coloring wl_refine(const AugmentedGraph& g, ColorInterner& interner, const WlOptions& options) {
  return std::move(
      wl_refine_joint({&g.graph}, {initial_colors(g.graph, g.node_kind, interner)}, interner, options).front());
}

std::vector<Fingerprint> fwl2_refine_joint(const std::vector<const Graph*>& graphs, ColorInterner& interner,
                                           const FwlOptions& options) {
  std::vector<std::vector<Color>> current(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = *graphs[i];
    const std::size_t n = g.size();
    if (n > options.node_cap) {
      throw std::invalid_argument("fwl2: graph with " + std::to_string(n) + " nodes exceeds cap of " +
                                  std::to_string(options.node_cap));
    }
    current[i].resize(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        std::int64_t atp = 0;  // equal
        std::int64_t elab = 0;
        if (u != v) {
          const auto e = g.edge_label(static_cast<NodeId>(u), static_cast<NodeId>(v));
          atp = e ? 1 : 2;
          if (e && options.use_edge_labels) elab = *e;
        }
        current[i][u * n + v] = interner.intern(
            {tag(KeyTag::FwlInit), g.label(static_cast<NodeId>(u)), g.label(static_cast<NodeId>(v)), atp, elab});
      }
    }
  }
  std::size_t count = distinct(current);
  std::size_t rounds = 0;
  std::vector<std::int64_t> key;
  std::vector<std::pair<Color, Color>> pairs;
  while (true) {
    ++rounds;
    std::vector<std::vector<Color>> next(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const std::size_t n = graphs[i]->size();
      const auto& c = current[i];
      next[i].resize(n * n);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          pairs.clear();
          for (std::size_t w = 0; w < n; ++w) pairs.emplace_back(c[u * n + w], c[w * n + v]);
          std::sort(pairs.begin(), pairs.end());
          key.assign({tag(KeyTag::FwlRound), c[u * n + v]});
          for (const auto& [a, b] : pairs) {
            key.push_back(a);
            key.push_back(b);
          }
          next[i][u * n + v] = interner.intern(key);
        }
      }
    }
    const std::size_t next_count = distinct(next);
    current = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  std::vector<Fingerprint> out;
  for (const auto& c : current) out.push_back(make_fingerprint(c, rounds));
  return out;
}

Fingerprint fwl2_refine(const Graph& g, ColorInterner& interner, const FwlOptions& options) {
  return fwl2_refine_joint({&g}, interner, options).front();
}

std::string to_string(WlTest t) {
  switch (t) {
    case WlTest::WL: return "wl";
    case WlTest::FWL2: return "fwl2";
    case WlTest::NF: return "nf";
    case WlTest::FR: return "fr";
    case WlTest::HLG: return "hlg";
    case WlTest::ER: return "er";
    case WlTest::GR: return "gr";
  }
  return "?";
}

WlTest parse_wl_test(const std::string& text) {
  std::string s;
  for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s.size() > 3 && s.ends_with("-wl") && s != "fwl2") s.resize(s.size() - 3);
  for (WlTest t : {WlTest::WL, WlTest::FWL2, WlTest::NF, WlTest::FR, WlTest::HLG, WlTest::ER, WlTest::GR}) {
    if (s == to_string(t)) return t;
  }
  throw std::invalid_argument("unknown test: " + text + " (expected wl, fwl2, nf, fr, hlg, er or gr)");
}

bool needs_scheme(WlTest t) { return t == WlTest::NF || t == WlTest::FR || t == WlTest::HLG; }

std::string to_string(Outcome o) { return o == Outcome::Distinguished ? "distinguished" : "indistinguishable"; }

DistinguishResult distinguish_with(const Graph& g1, const Fragmentation& f1, const Graph& g2,
                                   const Fragmentation& f2, WlTest test, const DistinguishOptions& options) {
  ColorInterner interner;
  DistinguishResult r;
  r.test = test;
  const WlOptions wl{options.use_edge_labels};

  auto run_plain = [&](const Graph& a, const Graph& b) {
    auto cs = wl_refine_joint({&a, &b}, {initial_colors(a, {}, interner), initial_colors(b, {}, interner)},
                              interner, wl);
    r.rounds = cs[0].round;
    r.fingerprints = {make_fingerprint(cs[0].colors, cs[0].round), make_fingerprint(cs[1].colors, cs[1].round)};
  };
  auto run_aug = [&](const AugmentedGraph& a, const AugmentedGraph& b) {
    auto cs = wl_refine_joint({&a.graph, &b.graph},
                              {initial_colors(a.graph, a.node_kind, interner),
                               initial_colors(b.graph, b.node_kind, interner)},
                              interner, wl);
    r.rounds = cs[0].round;
    r.fingerprints = {make_fingerprint(cs[0].colors, cs[0].round), make_fingerprint(cs[1].colors, cs[1].round)};
  };

  switch (test) {
    case WlTest::WL: run_plain(g1, g2); break;
    case WlTest::FWL2: {
      auto fps = fwl2_refine_joint({&g1, &g2}, interner, FwlOptions{options.use_edge_labels, options.fwl_node_cap});
      r.rounds = fps[0].rounds;
      r.fingerprints = {fps[0], fps[1]};
      break;
    }
    case WlTest::NF: run_plain(augment_nf(g1, f1, interner), augment_nf(g2, f2, interner)); break;
    case WlTest::FR: run_aug(augment_fr(g1, f1), augment_fr(g2, f2)); break;
    case WlTest::HLG:
      run_aug(augment_hlg(g1, f1, options.strict_def4), augment_hlg(g2, f2, options.strict_def4));
      break;
    case WlTest::ER: run_aug(augment_er(g1), augment_er(g2)); break;
    case WlTest::GR: run_aug(augment_gr(g1), augment_gr(g2)); break;
  }
  r.outcome = r.fingerprints[0] == r.fingerprints[1] ? Outcome::Indistinguishable : Outcome::Distinguished;
  return r;
}

DistinguishResult distinguish(const Graph& g1, const Graph& g2, WlTest test, const DistinguishOptions& options) {
  if (!needs_scheme(test)) return distinguish_with(g1, {}, g2, {}, test, options);
  return distinguish_with(g1, options.scheme.apply(g1), g2, options.scheme.apply(g2), test, options);
}

nlohmann::json result_to_json(const DistinguishResult& r) {
  return {{"test", to_string(r.test)},
          {"outcome", to_string(r.outcome)},
          {"rounds", r.rounds},
          {"fingerprints", {fingerprint_to_json(r.fingerprints[0]), fingerprint_to_json(r.fingerprints[1])}}};
}

bool at_most_as_strong(WlTest weaker, WlTest stronger) {
  auto wl_class = [](WlTest t) { return t == WlTest::WL || t == WlTest::ER || t == WlTest::GR; };
  if (wl_class(weaker)) return true;
  if (weaker == stronger) return true;
  auto chain = [](WlTest t) {
    switch (t) {
      case WlTest::NF: return 1;
      case WlTest::FR: return 2;
      case WlTest::HLG: return 3;
      default: return -1;
    }
  };
  const int a = chain(weaker), b = chain(stronger);
  return a > 0 && b > 0 && a <= b;
}

HierarchyMatrix hierarchy_matrix(const std::vector<std::pair<Graph, Graph>>& pairs, const std::vector<WlTest>& tests,
                                 const DistinguishOptions& options) {
  HierarchyMatrix m;
  m.tests = tests;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Graph& a = pairs[p].first;
    const Graph& b = pairs[p].second;
    const Fragmentation fa = options.scheme.apply(a);
    const Fragmentation fb = options.scheme.apply(b);
    std::vector<Outcome> row;
    for (WlTest t : tests) row.push_back(distinguish_with(a, fa, b, fb, t, options).outcome);
    for (std::size_t i = 0; i < tests.size(); ++i) {
      for (std::size_t j = 0; j < tests.size(); ++j) {
        if (i == j || !at_most_as_strong(tests[i], tests[j])) continue;
        if (row[i] == Outcome::Distinguished && row[j] == Outcome::Indistinguishable) {
          m.violations.push_back("pair " + std::to_string(p) + ": " + to_string(tests[i]) + " distinguishes but " +
                                 to_string(tests[j]) + " does not");
        }
      }
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace fragwl
