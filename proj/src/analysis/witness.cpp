#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "fragwl/analysis.hpp"
#include "fragwl/graph_json.hpp"

namespace fragwl {

namespace {

struct Candidate {
  Graph first;
  Graph second;
  std::string generator;
};

struct Sample {
  Graph graph;
  std::string generator;
};

/// Seeded stream of batches of small graphs: recolorings of a circulant,
/// regular or random base graph, or random graphs sharing size and degree.
class SampleGenerator {
 public:
  SampleGenerator(std::size_t max_n, std::uint64_t seed) : max_n_(std::max<std::size_t>(max_n, 6)), rng_(seed) {}

  /// One family draw: graphs sharing size, degree or base structure.
  std::vector<Sample> batch(std::size_t count) {
    std::vector<Sample> out;
    const std::size_t kind = kSchedule[counter_++ % kSchedule.size()];
    const std::size_t n = std::uniform_int_distribution<std::size_t>(6, max_n_)(rng_);
    const std::size_t ones = std::uniform_int_distribution<std::size_t>(1, n / 2)(rng_);
    switch (kind) {
      case 0: {
        const std::size_t count_jumps = std::uniform_int_distribution<std::size_t>(1, 3)(rng_);
        const Graph base = circulant(n, jumps(n, count_jumps));
        for (std::size_t i = 0; i < count; ++i) out.push_back({with_labels(base, coloring(n, ones)), "circulant_colored"});
        break;
      }
      case 1: {
        const Graph base = random_regular(n, regular_degree(n), rng_);
        for (std::size_t i = 0; i < count; ++i) out.push_back({with_labels(base, coloring(n, ones)), "regular_colored"});
        break;
      }
      case 2: {
        const std::size_t d = regular_degree(n);
        for (std::size_t i = 0; i < count; ++i) out.push_back({random_regular(n, d, rng_), "regular"});
        break;
      }
      case 3: {
        const double p = std::uniform_real_distribution<double>(0.3, 0.7)(rng_);
        const Graph base = random_graph(n, p, 1, rng_);
        for (std::size_t i = 0; i < count; ++i) out.push_back({with_labels(base, coloring(n, ones)), "gnp_colored"});
        break;
      }
      default: {
        const double p = std::uniform_real_distribution<double>(0.3, 0.7)(rng_);
        for (std::size_t i = 0; i < count; ++i) out.push_back({random_graph(n, p, 2, rng_), "gnp"});
        break;
      }
    }
    return out;
  }

 private:
  // Circulant recolorings are drawn most often: they are vertex-transitive,
  // so colorings with equal counts frequently collide under the weak test.
  static constexpr std::array<std::size_t, 8> kSchedule = {0, 1, 0, 2, 0, 3, 0, 4};

  std::size_t regular_degree(std::size_t n) {
    while (true) {
      const std::size_t d = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(n - 2, 6))(rng_);
      if ((n * d) % 2 == 0) return d;
    }
  }

  std::vector<Label> coloring(std::size_t n, std::size_t ones) {
    std::vector<Label> labels(n, 0);
    std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(ones), 1);
    std::shuffle(labels.begin(), labels.end(), rng_);
    return labels;
  }

  std::vector<std::size_t> jumps(std::size_t n, std::size_t count) {
    std::vector<std::size_t> all(n / 2);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(std::min(count, all.size()));
    return all;
  }

  std::size_t max_n_;
  Rng rng_;
  std::size_t counter_ = 0;
};

bool separates(const Graph& a, const Fragmentation& fa, const Graph& b, const Fragmentation& fb, const WitnessQuery& q) {
  if (distinguish_with(a, fa, b, fb, q.weak, q.options).outcome != Outcome::Indistinguishable) return false;
  return distinguish_with(a, fa, b, fb, q.strong, q.options).outcome == Outcome::Distinguished;
}

Fragmentation fragment_for(const Graph& g, const WitnessQuery& q) {
  return needs_scheme(q.weak) || needs_scheme(q.strong) ? q.options.scheme.apply(g) : Fragmentation{};
}

/// Stable weak-test colors of every sample from one joint refinement, so
/// equal histograms mean pairwise weak-indistinguishability.
std::vector<Fingerprint> weak_fingerprints(const std::vector<Sample>& samples,
                                           const std::vector<Fragmentation>& frs, const WitnessQuery& q) {
  ColorInterner interner;
  std::vector<Graph> graphs;
  std::vector<std::vector<NodeKind>> kinds;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Graph& g = samples[i].graph;
    switch (q.weak) {
      case WlTest::WL: graphs.push_back(g); kinds.emplace_back(); break;
      case WlTest::NF: graphs.push_back(augment_nf(g, frs[i], interner)); kinds.emplace_back(); break;
      default: {
        AugmentedGraph a = q.weak == WlTest::FR    ? augment_fr(g, frs[i])
                           : q.weak == WlTest::HLG ? augment_hlg(g, frs[i], q.options.strict_def4)
                           : q.weak == WlTest::ER  ? augment_er(g)
                                                   : augment_gr(g);
        graphs.push_back(std::move(a.graph));
        kinds.push_back(std::move(a.node_kind));
      }
    }
  }
  std::vector<const Graph*> ptrs;
  std::vector<std::vector<Color>> init;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ptrs.push_back(&graphs[i]);
    init.push_back(initial_colors(graphs[i], kinds[i], interner));
  }
  const auto colorings = wl_refine_joint(ptrs, std::move(init), interner, WlOptions{q.options.use_edge_labels});
  std::vector<Fingerprint> out;
  for (const auto& c : colorings) out.push_back(make_fingerprint(c.colors, 0));
  return out;
}

inline constexpr std::size_t kBatchSize = 48;

}  // namespace

WitnessSearchResult witness_search(const WitnessQuery& query) {
  WitnessSearchResult result;
  std::vector<Candidate> known = {
      {disjoint_union(make_cycle(3), make_cycle(3)), make_cycle(6), "known:two_c3_vs_c6"}};
  for (auto& c : known) {
    if (result.examined >= query.budget) return result;
    if (c.first.size() > query.max_n) continue;
    ++result.examined;
    if (separates(c.first, fragment_for(c.first, query), c.second, fragment_for(c.second, query), query)) {
      result.witness = Witness{std::move(c.first), std::move(c.second), c.generator, result.examined};
      return result;
    }
  }
  if (query.max_n < 6) return result;
  if (query.max_n > kBruteForceNodeLimit) {
    throw std::invalid_argument("witness_search: max_n above " + std::to_string(kBruteForceNodeLimit));
  }

  // Batches are refined jointly; every pair inside a batch counts as examined.
  SampleGenerator gen(query.max_n, query.seed);
  for (std::size_t draws = 0; result.examined < query.budget && draws < query.budget; ++draws) {
    std::vector<Sample> batch;
    {
      // Isomorphic copies can never separate; keep one per class.
      std::set<CanonicalCode> seen;
      for (Sample& s : gen.batch(kBatchSize)) {
        if (seen.insert(canonical_code(s.graph)).second) batch.push_back(std::move(s));
      }
    }
    if (batch.size() < 2) continue;
    std::size_t size = batch.size();
    while (size > 1 && result.examined + size * (size - 1) / 2 > query.budget) --size;
    if (size < 2) break;
    batch.resize(size);
    std::vector<Fragmentation> frs;
    for (const Sample& s : batch) frs.push_back(fragment_for(s.graph, query));

    std::vector<Fingerprint> fps;
    if (query.weak == WlTest::FWL2) {
      fps.resize(batch.size());  // no joint shortcut; fall back to pairwise checks
    } else {
      fps = weak_fingerprints(batch, frs, query);
    }
    std::map<std::vector<std::pair<Color, std::size_t>>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < batch.size(); ++i) buckets[fps[i].histogram].push_back(i);

    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto& bucket = buckets[fps[i].histogram];
      for (std::size_t j : bucket) {
        if (j <= i) continue;
        if (separates(batch[i].graph, frs[i], batch[j].graph, frs[j], query)) {
          result.examined += i * batch.size() - i * (i + 1) / 2 + (j - i);
          result.witness = Witness{batch[i].graph, batch[j].graph,
                                   batch[i].generator + "+" + batch[j].generator, result.examined};
          return result;
        }
      }
    }
    result.examined += batch.size() * (batch.size() - 1) / 2;
  }
  return result;
}

nlohmann::json witness_to_json(const Witness& w, const WitnessQuery& q) {
  return {{"weak", to_string(q.weak)},
          {"strong", to_string(q.strong)},
          {"scheme", q.options.scheme.name()},
          {"strict_def4", q.options.strict_def4},
          {"use_edge_labels", q.options.use_edge_labels},
          {"generator", w.generator},
          {"examined", w.examined},
          {"seed", q.seed},
          {"weak_outcome", to_string(Outcome::Indistinguishable)},
          {"strong_outcome", to_string(Outcome::Distinguished)},
          {"first", graph_to_json(w.first)},
          {"second", graph_to_json(w.second)}};
}

WitnessRecord witness_record_from_json(const nlohmann::json& j) {
  try {
    WitnessRecord r;
    r.first = graph_from_json(j.at("first"));
    r.second = graph_from_json(j.at("second"));
    r.weak = parse_wl_test(j.at("weak").get<std::string>());
    r.strong = parse_wl_test(j.at("strong").get<std::string>());
    r.scheme = j.at("scheme").get<std::string>();
    r.strict_def4 = j.value("strict_def4", false);
    r.use_edge_labels = j.value("use_edge_labels", true);
    r.generator = j.value("generator", std::string());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed witness record: ") + e.what());
  }
}

std::vector<WitnessRecord> read_witness_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<WitnessRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw GraphError(path.string() + ":" + std::to_string(lineno) + ": invalid JSON");
    out.push_back(witness_record_from_json(j));
  }
  return out;
}

Theorem1Report theorem1_witness(const Graph& g1, const Graph& g2) {
  Theorem1Report r;
  r.isomorphic = find_isomorphism(g1, g2).has_value();
  DistinguishOptions opts;
  opts.scheme = Scheme::from_vocabulary({g1, g2});
  const Fragmentation f1 = opts.scheme.apply(g1);
  const Fragmentation f2 = opts.scheme.apply(g2);
  r.wl = distinguish_with(g1, f1, g2, f2, WlTest::WL, opts).outcome;
  r.fwl2 = distinguish_with(g1, f1, g2, f2, WlTest::FWL2, opts).outcome;
  r.nf_self_vocabulary = distinguish_with(g1, f1, g2, f2, WlTest::NF, opts).outcome;
  r.fr_self_vocabulary = distinguish_with(g1, f1, g2, f2, WlTest::FR, opts).outcome;
  r.hlg_self_vocabulary = distinguish_with(g1, f1, g2, f2, WlTest::HLG, opts).outcome;
  return r;
}

}  // namespace fragwl
