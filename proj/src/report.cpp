#include "fragwl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "fragwl/analysis.hpp"
#include "fragwl/augment.hpp"
#include "fragwl/graph_json.hpp"
#include "fragwl/smiles.hpp"
#include "fragwl/wl.hpp"

namespace fragwl {

namespace {

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct HierarchyRow {
  Graph first;
  Graph second;
  std::string source;
  std::optional<WlTest> weak, strong;
  Scheme scheme;
  bool strict_def4 = false;
};

Report hierarchy(const ReportOptions& o) {
  Report report;
  const Scheme default_scheme = Scheme::parse(o.scheme.value_or("all_cycles:3"));
  std::vector<HierarchyRow> rows;
  if (o.witnesses) {
    for (auto& rec : read_witness_fixtures(*o.witnesses)) {
      rows.push_back({std::move(rec.first), std::move(rec.second), rec.generator, rec.weak, rec.strong,
                      Scheme::parse(rec.scheme), rec.strict_def4});
    }
    report.notes.push_back("pairs from " + o.witnesses->string());
  } else {
    const std::pair<WlTest, WlTest> steps[] = {
        {WlTest::WL, WlTest::NF}, {WlTest::NF, WlTest::FR}, {WlTest::FR, WlTest::HLG}};
    for (const auto& [weak, strong] : steps) {
      WitnessQuery q;
      q.weak = weak;
      q.strong = strong;
      q.options.scheme = default_scheme;
      q.options.strict_def4 = o.strict_def4;
      q.options.use_edge_labels = o.use_edge_labels;
      q.budget = o.budget;
      q.seed = o.seed;
      auto found = witness_search(q);
      if (!found.witness) {
        report.failures.push_back("no " + to_string(weak) + "/" + to_string(strong) + " witness within " +
                                  std::to_string(o.budget) + " pairs");
        continue;
      }
      report.notes.push_back(to_string(weak) + "/" + to_string(strong) + " witness after " +
                             std::to_string(found.examined) + " pairs");
      rows.push_back({std::move(found.witness->first), std::move(found.witness->second), found.witness->generator,
                      weak, strong, default_scheme, o.strict_def4});
    }
  }
  Rng rng(o.seed);
  const Graph c6 = make_cycle(6);
  rows.push_back({c6, random_relabeling(c6, rng), "control:isomorphic", std::nullopt, std::nullopt, default_scheme,
                  o.strict_def4});

  const std::vector<WlTest> tests = {WlTest::WL, WlTest::NF, WlTest::FR, WlTest::HLG};
  std::ostringstream csv;
  csv << "pair,source,scheme,weak,strong,n1,n2,wl,nf,fr,hlg\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const HierarchyRow& r = rows[i];
    DistinguishOptions opts;
    opts.scheme = r.scheme;
    opts.strict_def4 = r.strict_def4;
    opts.use_edge_labels = o.use_edge_labels;
    const HierarchyMatrix m = hierarchy_matrix({{r.first, r.second}}, tests, opts);
    for (const auto& v : m.violations) report.failures.push_back("row " + std::to_string(i) + ": " + v);
    const auto& out = m.rows.front();
    csv << i << ',' << r.source << ',' << r.scheme.name() << ',' << (r.weak ? to_string(*r.weak) : "") << ','
        << (r.strong ? to_string(*r.strong) : "") << ',' << r.first.size() << ',' << r.second.size();
    for (Outcome x : out) csv << ',' << to_string(x);
    csv << '\n';
    auto outcome_of = [&](WlTest t) {
      for (std::size_t k = 0; k < tests.size(); ++k) {
        if (tests[k] == t) return out[k];
      }
      return distinguish(r.first, r.second, t, opts).outcome;
    };
    if (r.weak && outcome_of(*r.weak) != Outcome::Indistinguishable) {
      report.failures.push_back("row " + std::to_string(i) + ": weak test " + to_string(*r.weak) + " distinguishes");
    }
    if (r.strong && outcome_of(*r.strong) != Outcome::Distinguished) {
      report.failures.push_back("row " + std::to_string(i) + ": strong test " + to_string(*r.strong) +
                                " does not distinguish");
    }
    if (!r.weak) {
      for (Outcome x : out) {
        if (x != Outcome::Indistinguishable) report.failures.push_back("control row distinguished");
      }
    }
  }
  report.files.push_back({"hierarchy.csv", csv.str()});
  return report;
}

Report commute(const ReportOptions& o) {
  Report report;
  const Graph g = make_named_graph(o.graph);
  const std::pair<const char*, Scheme> variants[] = {
      {"none", Scheme::none()}, {"rings", Scheme::rings()}, {"rings_paths", Scheme::rings_paths()}};
  std::vector<CommuteProfile> profiles;
  for (const auto& [name, scheme] : variants) {
    profiles.push_back(commute_times(augment_hlg(g, scheme.apply(g), o.strict_def4), o.source));
  }
  std::ostringstream csv;
  csv << "node_id,none,rings,rings_paths\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    csv << v;
    for (const auto& p : profiles) csv << ',' << fixed(p.commute[v]);
    csv << '\n';
  }
  report.files.push_back({"commute.csv", csv.str()});
  const double none = profiles[0].max_original(), rings = profiles[1].max_original(),
               rp = profiles[2].max_original();
  report.notes.push_back("max commute from node " + std::to_string(o.source) + ": none " + fixed(none) + ", rings " +
                         fixed(rings) + ", rings_paths " + fixed(rp));
  if (!(rp < rings && rp < none)) report.failures.push_back("rings_paths max commute time is not the smallest");
  return report;
}

struct Corpus {
  std::vector<Graph> graphs;
  std::string name;
  std::size_t errors = 0;
};

Corpus load_corpus(const ReportOptions& o, bool molecular) {
  Corpus c;
  if (o.corpus) {
    const CorpusParse parsed = parse_corpus(*o.corpus);
    for (const auto& e : parsed.graphs) c.graphs.push_back(e.graph);
    c.errors = parsed.errors.size();
    c.name = o.corpus->string();
    return c;
  }
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.synthetic_size; ++i) {
    if (molecular) {
      c.graphs.push_back(random_molecular(std::uniform_int_distribution<std::size_t>(8, 30)(rng), rng));
    } else {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(6, 10)(rng);
      c.graphs.push_back(random_graph(n, std::uniform_real_distribution<double>(0.3, 0.6)(rng), 1, rng));
    }
  }
  c.name = "synthetic";
  return c;
}

Report vocab(const ReportOptions& o) {
  Report report;
  const Corpus corpus = load_corpus(o, true);
  const Scheme scheme = Scheme::parse(o.scheme.value_or("rings_paths"));
  const VocabStats stats = vocab_stats(corpus.graphs, scheme);
  nlohmann::json j;
  j["corpus"] = corpus.name;
  j["scheme"] = scheme.name();
  j["graphs"] = corpus.graphs.size();
  j["parse_errors"] = corpus.errors;
  j["vocabulary_size"] = stats.vocab.size();
  j["coverage"] = stats.coverage;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : stats.vocab) {
    entries.push_back({{"type_id", e.type_id},
                       {"name", type_name(e.type_id)},
                       {"class", to_string(e.frag_class)},
                       {"size", e.size},
                       {"count", e.count}});
  }
  j["vocab"] = std::move(entries);
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [cls, sizes] : stats.size_histogram) {
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [size, count] : sizes) h[std::to_string(size)] = count;
    hist[to_string(cls)] = std::move(h);
  }
  j["size_histogram"] = std::move(hist);
  j["coverage_curve"] = stats.coverage_curve;
  report.files.push_back({"vocab.json", j.dump(2) + "\n"});
  report.notes.push_back(corpus.name + ": " + std::to_string(corpus.graphs.size()) + " graphs, vocabulary size " +
                         std::to_string(stats.vocab.size()) + ", coverage " + fixed(stats.coverage));
  if (corpus.errors > 0) report.notes.push_back(std::to_string(corpus.errors) + " corpus lines failed to parse");
  if (scheme.kind == Scheme::Kind::RingsPaths && stats.coverage != 1.0) {
    report.failures.push_back("rings_paths coverage below 1");
  }
  return report;
}

Report counting(const ReportOptions& o) {
  Report report;
  ReportOptions small = o;
  if (!o.corpus) small.synthetic_size = std::min<std::size_t>(o.synthetic_size, 50);
  const Corpus corpus = load_corpus(small, false);
  const std::pair<const char*, Graph> patterns[] = {{"c3", make_cycle(3)}, {"c4", make_cycle(4)},
                                                    {"c5", make_cycle(5)}, {"c6", make_cycle(6)},
                                                    {"p3", make_path(3)},  {"k4", make_complete(4)}};
  std::ostringstream csv;
  csv << "graph,n,edges";
  for (const auto& [name, p] : patterns) csv << ',' << name;
  csv << ",all_cycles_recovered\n";
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const Graph g = strip_labels(corpus.graphs[i]);
    if (g.size() > 14) {
      ++skipped;
      continue;
    }
    csv << i << ',' << g.size() << ',' << g.num_edges();
    for (const auto& [name, p] : patterns) csv << ',' << count_induced_subgraphs(g, p);
    std::vector<std::vector<NodeId>> frags;
    for (const auto& f : fragment_all_cycles(g, 6).fragments) frags.push_back(f.nodes);
    std::sort(frags.begin(), frags.end());
    auto oracle = induced_cycles_bruteforce(g, 6);
    std::sort(oracle.begin(), oracle.end());
    const bool ok = frags == oracle;
    if (!ok) report.failures.push_back("graph " + std::to_string(i) + ": all_cycles(6) differs from the oracle");
    csv << ',' << (ok ? "yes" : "no") << '\n';
  }
  if (skipped > 0) report.notes.push_back(std::to_string(skipped) + " graphs above 14 nodes skipped");
  report.files.push_back({"counting.csv", csv.str()});
  return report;
}

}  // namespace

std::vector<std::string> report_suites() { return {"hierarchy", "commute", "vocab", "counting"}; }

Report run_report(const std::string& suite, const ReportOptions& options) {
  if (suite == "hierarchy") return hierarchy(options);
  if (suite == "commute") return commute(options);
  if (suite == "vocab") return vocab(options);
  if (suite == "counting") return counting(options);
  throw std::invalid_argument("unknown report suite: " + suite + " (expected hierarchy, commute, vocab or counting)");
}

}  // namespace fragwl
