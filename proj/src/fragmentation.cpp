#include "fragwl/fragmentation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <set>

namespace fragwl {

std::string to_string(FragmentClass c) {
  switch (c) {
    case FragmentClass::Ring: return "ring";
    case FragmentClass::Path: return "path";
    case FragmentClass::Junction: return "junction";
  }
  return "?";
}

FragmentClass fragment_class_from_string(const std::string& s) {
  if (s == "ring") return FragmentClass::Ring;
  if (s == "path") return FragmentClass::Path;
  if (s == "junction") return FragmentClass::Junction;
  throw std::invalid_argument("unknown fragment class: " + s);
}

std::string type_name(TypeId id) {
  const auto n = std::to_string(type_payload(id));
  switch (type_family(id)) {
    case FragmentFamily::Cycle: return "ring" + n;
    case FragmentFamily::Path: return "path" + n;
    case FragmentFamily::Junction: return "junction";
    case FragmentFamily::Clique: return "clique" + n;
    case FragmentFamily::Vocabulary: return "vocab" + n;
  }
  return "type" + std::to_string(id);
}

bool Fragment::contains(NodeId v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

std::size_t Fragmentation::count(FragmentClass c) const {
  return static_cast<std::size_t>(std::count_if(fragments.begin(), fragments.end(),
                                                [c](const Fragment& f) { return f.frag_class == c; }));
}

namespace {

void sort_fragments(std::vector<Fragment>& frags) {
  std::sort(frags.begin(), frags.end(), [](const Fragment& a, const Fragment& b) {
    if (a.frag_class != b.frag_class) return a.frag_class < b.frag_class;
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    return a.type_id < b.type_id;
  });
}

Fragment make_fragment(std::vector<NodeId> nodes, FragmentClass cls, FragmentFamily family) {
  std::sort(nodes.begin(), nodes.end());
  const auto size = static_cast<std::int64_t>(nodes.size());
  return Fragment{std::move(nodes), cls, make_type_id(family, family == FragmentFamily::Junction ? 1 : size)};
}

/// Edge-incidence vectors over GF(2).
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : g_(g) {
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) index_[{edges[i].u, edges[i].v}] = i;
    words_ = (edges.size() + 63) / 64;
  }
  std::size_t index(NodeId u, NodeId v) const { return index_.at({std::min(u, v), std::max(u, v)}); }
  std::size_t words() const { return words_; }

  /// Incidence vector of the induced edges on a (chordless) cycle node set.
  std::vector<std::uint64_t> cycle_vector(const std::vector<NodeId>& nodes) const {
    std::vector<std::uint64_t> bits(words_, 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (g_.adjacent(nodes[i], nodes[j])) {
          const std::size_t e = index(nodes[i], nodes[j]);
          bits[e / 64] |= std::uint64_t{1} << (e % 64);
        }
      }
    }
    return bits;
  }

 private:
  const Graph& g_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> index_;
  std::size_t words_ = 0;
};

/// XOR basis keyed by highest set bit.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t words) : rows_(words * 64) {}

  /// Reduces v against the basis; returns true if v is independent.
  bool independent(std::vector<std::uint64_t> v) const { return reduce(v) >= 0; }

  bool insert(std::vector<std::uint64_t> v) {
    const long pivot = reduce(v);
    if (pivot < 0) return false;
    rows_[static_cast<std::size_t>(pivot)] = std::move(v);
    ++rank_;
    return true;
  }

  std::size_t rank() const { return rank_; }

 private:
  static long highest_bit(const std::vector<std::uint64_t>& v) {
    for (std::size_t w = v.size(); w-- > 0;) {
      if (v[w] != 0) return static_cast<long>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[w])));
    }
    return -1;
  }

  long reduce(std::vector<std::uint64_t>& v) const {
    while (true) {
      const long h = highest_bit(v);
      if (h < 0) return -1;
      const auto& row = rows_[static_cast<std::size_t>(h)];
      if (!row) return h;
      for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= (*row)[w];
    }
  }

  std::vector<std::optional<std::vector<std::uint64_t>>> rows_;
  std::size_t rank_ = 0;
};

}  // namespace

std::vector<std::vector<NodeId>> chordless_cycles(const Graph& g, std::size_t max_length,
                                                  std::size_t budget) {
  std::vector<std::vector<NodeId>> out;
  const auto n = static_cast<NodeId>(g.size());
  std::vector<NodeId> path;
  std::vector<int> blocked(g.size(), 0);  // adjacency count to interior path nodes

  // Path s, v1, ..., vk is kept induced; s is the minimum of the cycle and the
  // orientation is fixed by v1 < last.
  auto extend = [&](auto&& self, NodeId s) -> void {
    const NodeId last = path.back();
    for (NodeId w : g.neighbors(last)) {
      if (w <= s || blocked[w] > 0) continue;
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      if (g.adjacent(w, s)) {
        if (path.size() >= 2 && path[1] < w && path.size() + 1 <= max_length) {
          std::vector<NodeId> cyc = path;
          cyc.push_back(w);
          std::sort(cyc.begin(), cyc.end());
          out.push_back(std::move(cyc));
          if (out.size() > budget) {
            throw BudgetExceeded("cycle enumeration exceeded budget of " + std::to_string(budget));
          }
        }
        continue;
      }
      if (path.size() + 1 >= max_length) continue;  // no room to close later
      // `last` becomes interior: its other neighbors may no longer join.
      if (path.size() >= 2) {
        for (NodeId x : g.neighbors(last)) ++blocked[x];
      }
      path.push_back(w);
      self(self, s);
      path.pop_back();
      if (path.size() >= 2) {
        for (NodeId x : g.neighbors(last)) --blocked[x];
      }
    }
  };

  for (NodeId s = 0; s < n; ++s) {
    for (NodeId v1 : g.neighbors(s)) {
      if (v1 <= s) continue;
      path = {s, v1};
      extend(extend, s);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::vector<NodeId>> minimal_rings(const Graph& g, std::size_t budget) {
  const std::size_t components = connected_components(g).size();
  const std::size_t cyclomatic = g.num_edges() + components - g.size();
  if (cyclomatic == 0) return {};

  const auto candidates = chordless_cycles(g, g.size(), budget);
  EdgeIndex index(g);
  Gf2Basis basis(index.words());
  std::vector<std::vector<NodeId>> rings;

  // A cycle is relevant iff it is independent of all strictly shorter cycles;
  // chordless cycles of each length span every cycle of that length.
  std::size_t i = 0;
  while (i < candidates.size() && basis.rank() < cyclomatic) {
    const std::size_t len = candidates[i].size();
    std::size_t j = i;
    while (j < candidates.size() && candidates[j].size() == len) ++j;
    const Gf2Basis shorter = basis;
    for (std::size_t c = i; c < j; ++c) {
      auto vec = index.cycle_vector(candidates[c]);
      if (shorter.independent(vec)) {
        rings.push_back(candidates[c]);
        basis.insert(std::move(vec));
      }
    }
    i = j;
  }
  return rings;
}

Fragmentation fragment_rings(const Graph& g, std::size_t budget) {
  Fragmentation fr;
  fr.scheme = "rings";
  for (auto& ring : minimal_rings(g, budget)) {
    fr.fragments.push_back(make_fragment(std::move(ring), FragmentClass::Ring, FragmentFamily::Cycle));
  }
  sort_fragments(fr.fragments);
  return fr;
}

Fragmentation fragment_rings_paths(const Graph& g, std::size_t budget) {
  Fragmentation fr = fragment_rings(g, budget);
  fr.scheme = "rings_paths";

  std::set<std::pair<NodeId, NodeId>> covered;
  for (const Fragment& ring : fr.fragments) {
    for (std::size_t a = 0; a < ring.nodes.size(); ++a) {
      for (std::size_t b = a + 1; b < ring.nodes.size(); ++b) {
        if (g.adjacent(ring.nodes[a], ring.nodes[b])) covered.insert({ring.nodes[a], ring.nodes[b]});
      }
    }
  }

  // Remainder graph of ring-uncovered edges.
  std::vector<std::vector<NodeId>> rem(g.size());
  for (const Edge& e : g.edges()) {
    if (!covered.contains({e.u, e.v})) {
      rem[e.u].push_back(e.v);
      rem[e.v].push_back(e.u);
    }
  }
  std::set<std::pair<NodeId, NodeId>> visited;
  auto mark = [&](NodeId a, NodeId b) { visited.insert({std::min(a, b), std::max(a, b)}); };
  auto seen = [&](NodeId a, NodeId b) { return visited.contains({std::min(a, b), std::max(a, b)}); };

  auto walk = [&](NodeId start, NodeId first) {
    std::vector<NodeId> nodes{start};
    NodeId prev = start, cur = first;
    mark(prev, cur);
    while (rem[cur].size() == 2 && cur != start) {
      nodes.push_back(cur);
      NodeId next = rem[cur][0] == prev ? rem[cur][1] : rem[cur][0];
      if (seen(cur, next)) break;
      mark(cur, next);
      prev = cur;
      cur = next;
    }
    if (cur != start) nodes.push_back(cur);
    fr.fragments.push_back(make_fragment(std::move(nodes), FragmentClass::Path, FragmentFamily::Path));
  };

  for (std::size_t v = 0; v < g.size(); ++v) {
    if (rem[v].empty() || rem[v].size() == 2) continue;
    for (NodeId w : rem[v]) {
      if (!seen(static_cast<NodeId>(v), w)) walk(static_cast<NodeId>(v), w);
    }
  }
  // Closed runs of remainder-degree-two nodes cannot occur when the rings span
  // the cycle space, but keep the decomposition total.
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (NodeId w : rem[v]) {
      if (!seen(static_cast<NodeId>(v), w)) walk(static_cast<NodeId>(v), w);
    }
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(static_cast<NodeId>(v)) == 0) {
      fr.fragments.push_back(make_fragment({static_cast<NodeId>(v)}, FragmentClass::Path, FragmentFamily::Path));
    }
  }

  std::vector<int> membership(g.size(), 0);
  for (const Fragment& f : fr.fragments) {
    for (NodeId v : f.nodes) ++membership[v];
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (membership[v] >= 3) {
      fr.fragments.push_back(
          make_fragment({static_cast<NodeId>(v)}, FragmentClass::Junction, FragmentFamily::Junction));
    }
  }
  sort_fragments(fr.fragments);
  return fr;
}

Fragmentation fragment_all_cycles(const Graph& g, std::size_t k, std::size_t budget) {
  if (k < 3) throw std::invalid_argument("all_cycles requires k >= 3");
  Fragmentation fr;
  fr.scheme = "all_cycles:" + std::to_string(k);
  for (auto& cyc : chordless_cycles(g, k, budget)) {
    fr.fragments.push_back(make_fragment(std::move(cyc), FragmentClass::Ring, FragmentFamily::Cycle));
  }
  sort_fragments(fr.fragments);
  return fr;
}

Fragmentation fragment_cliques(const Graph& g, std::size_t k, std::size_t budget) {
  if (k < 2) throw std::invalid_argument("cliques requires k >= 2");
  Fragmentation fr;
  fr.scheme = "cliques:" + std::to_string(k);
  std::size_t found = 0;

  auto bron_kerbosch = [&](auto&& self, std::vector<NodeId>& r, std::vector<NodeId> p,
                           std::vector<NodeId> x) -> void {
    if (p.empty() && x.empty()) {
      if (++found > budget) {
        throw BudgetExceeded("clique enumeration exceeded budget of " + std::to_string(budget));
      }
      if (r.size() >= 2 && r.size() <= k) {
        fr.fragments.push_back(make_fragment(r, FragmentClass::Ring, FragmentFamily::Clique));
      }
      return;
    }
    // Pivot: vertex of P u X with the most neighbors in P.
    NodeId pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (NodeId u : *set) {
        std::size_t c = 0;
        for (NodeId w : p) c += g.adjacent(u, w) ? 1 : 0;
        if (pivot < 0 || c > best) {
          pivot = u;
          best = c;
        }
      }
    }
    std::vector<NodeId> branch;
    for (NodeId v : p) {
      if (!g.adjacent(pivot, v)) branch.push_back(v);
    }
    for (NodeId v : branch) {
      std::vector<NodeId> np, nx;
      for (NodeId w : p) {
        if (g.adjacent(v, w)) np.push_back(w);
      }
      for (NodeId w : x) {
        if (g.adjacent(v, w)) nx.push_back(w);
      }
      r.push_back(v);
      self(self, r, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };

  std::vector<NodeId> r;
  std::vector<NodeId> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  if (!all.empty()) bron_kerbosch(bron_kerbosch, r, all, {});
  sort_fragments(fr.fragments);
  return fr;
}

Fragmentation fragment_vocabulary(const Graph& g, const std::vector<Graph>& vocabulary,
                                  std::size_t budget) {
  Fragmentation fr;
  fr.scheme = "vocabulary";
  std::vector<const Graph*> unique;
  for (const Graph& v : vocabulary) {
    bool dup = false;
    for (const Graph* u : unique) {
      if (find_isomorphism(*u, v)) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(&v);
  }

  std::size_t examined = 0;
  for (std::size_t idx = 0; idx < unique.size(); ++idx) {
    const Graph& pattern = *unique[idx];
    const std::size_t m = pattern.size();
    if (m == 0 || m > g.size()) continue;
    const FragmentClass cls = pattern.num_edges() >= m ? FragmentClass::Ring : FragmentClass::Path;
    std::vector<int> degrees;
    for (std::size_t v = 0; v < m; ++v) degrees.push_back(static_cast<int>(pattern.degree(static_cast<NodeId>(v))));
    std::sort(degrees.begin(), degrees.end());

    std::vector<NodeId> subset(m);
    std::iota(subset.begin(), subset.end(), 0);
    const auto n = static_cast<NodeId>(g.size());
    while (true) {
      if (++examined > budget) {
        throw BudgetExceeded("vocabulary matching exceeded budget of " + std::to_string(budget));
      }
      Graph sub = induced_subgraph(g, subset);
      if (sub.num_edges() == pattern.num_edges()) {
        std::vector<int> sd;
        for (std::size_t v = 0; v < m; ++v) sd.push_back(static_cast<int>(sub.degree(static_cast<NodeId>(v))));
        std::sort(sd.begin(), sd.end());
        if (sd == degrees && find_isomorphism(sub, pattern)) {
          fr.fragments.push_back(Fragment{subset, cls,
                                          make_type_id(FragmentFamily::Vocabulary, static_cast<std::int64_t>(idx))});
        }
      }
      // Next combination in lexicographic order.
      std::size_t i = m;
      while (i > 0 && subset[i - 1] == n - static_cast<NodeId>(m - i + 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < m; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  sort_fragments(fr.fragments);
  return fr;
}

Scheme Scheme::parse(const std::string& text) {
  auto with_k = [&](const std::string& prefix, std::size_t min_k) -> std::optional<std::size_t> {
    if (text.rfind(prefix + ":", 0) != 0) return std::nullopt;
    const std::string num = text.substr(prefix.size() + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("scheme parameter must be an integer: " + text);
    }
    const std::size_t k = std::stoul(num);
    if (k < min_k) throw std::invalid_argument("scheme parameter too small: " + text);
    return k;
  };
  if (text == "rings_paths") return rings_paths();
  if (text == "rings") return rings();
  if (text == "none") return none();
  if (auto k = with_k("all_cycles", 3)) return all_cycles(*k);
  if (auto k = with_k("cliques", 2)) return cliques(*k);
  throw std::invalid_argument("unknown scheme: " + text +
                              " (expected rings_paths, rings, all_cycles:K, cliques:K or none)");
}

std::string Scheme::name() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::RingsPaths: return "rings_paths";
    case Kind::Rings: return "rings";
    case Kind::AllCycles: return "all_cycles:" + std::to_string(k);
    case Kind::Cliques: return "cliques:" + std::to_string(k);
    case Kind::Vocabulary: return "vocabulary";
  }
  return "?";
}

Fragmentation Scheme::apply(const Graph& g) const {
  switch (kind) {
    case Kind::None: return Fragmentation{{}, "none"};
    case Kind::RingsPaths: return fragment_rings_paths(g, budget);
    case Kind::Rings: return fragment_rings(g, budget);
    case Kind::AllCycles: return fragment_all_cycles(g, k, budget);
    case Kind::Cliques: return fragment_cliques(g, k, budget);
    case Kind::Vocabulary: return fragment_vocabulary(g, vocabulary, budget);
  }
  throw std::logic_error("unhandled scheme kind");
}

nlohmann::json fragmentation_to_json(const Fragmentation& fr) {
  nlohmann::json frags = nlohmann::json::array();
  for (const Fragment& f : fr.fragments) {
    frags.push_back({{"nodes", f.nodes}, {"class", to_string(f.frag_class)}, {"type_id", f.type_id}});
  }
  return {{"scheme", fr.scheme}, {"fragments", std::move(frags)}};
}

Fragmentation fragmentation_from_json(const nlohmann::json& j) {
  Fragmentation fr;
  fr.scheme = j.at("scheme").get<std::string>();
  for (const auto& f : j.at("fragments")) {
    Fragment frag;
    frag.nodes = f.at("nodes").get<std::vector<NodeId>>();
    std::sort(frag.nodes.begin(), frag.nodes.end());
    frag.frag_class = fragment_class_from_string(f.at("class").get<std::string>());
    frag.type_id = f.at("type_id").get<TypeId>();
    fr.fragments.push_back(std::move(frag));
  }
  return fr;
}

VocabStats vocab_stats(const std::vector<Graph>& corpus, const Scheme& scheme) {
  if (corpus.empty()) throw std::invalid_argument("vocab_stats: empty corpus");
  std::map<TypeId, VocabEntry> counts;
  std::vector<Fragmentation> frs;
  frs.reserve(corpus.size());
  VocabStats stats;
  for (const Graph& g : corpus) {
    frs.push_back(scheme.apply(g));
    for (const Fragment& f : frs.back().fragments) {
      auto [it, inserted] = counts.try_emplace(f.type_id, VocabEntry{f.type_id, f.frag_class, f.size(), 0});
      ++it->second.count;
      ++stats.size_histogram[f.frag_class][f.size()];
    }
  }
  for (const auto& [id, entry] : counts) stats.vocab.push_back(entry);
  std::sort(stats.vocab.begin(), stats.vocab.end(), [](const VocabEntry& a, const VocabEntry& b) {
    return a.count != b.count ? a.count > b.count : a.type_id < b.type_id;
  });

  std::map<TypeId, std::size_t> rank;
  for (std::size_t i = 0; i < stats.vocab.size(); ++i) rank[stats.vocab[i].type_id] = i;
  std::vector<std::size_t> first_covered(stats.vocab.size() + 1, 0);
  std::size_t atoms = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const std::size_t n = corpus[gi].size();
    atoms += n;
    std::vector<std::size_t> best(n, stats.vocab.size());
    for (const Fragment& f : frs[gi].fragments) {
      for (NodeId v : f.nodes) best[v] = std::min(best[v], rank.at(f.type_id));
    }
    for (std::size_t b : best) ++first_covered[b];
  }
  std::size_t covered = 0;
  for (std::size_t k = 0; k < stats.vocab.size(); ++k) {
    covered += first_covered[k];
    stats.coverage_curve.push_back(atoms == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(atoms));
  }
  stats.coverage = atoms == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(atoms);
  return stats;
}

}  // namespace fragwl
