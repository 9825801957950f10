#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fragwl/analysis.hpp"
#include "fragwl/fragmentation.hpp"
#include "fragwl/graph_json.hpp"
#include "fragwl/report.hpp"
#include "fragwl/smiles.hpp"
#include "fragwl/wl.hpp"

namespace fs = std::filesystem;
using namespace fragwl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedGraph {
  Graph graph;
  std::string source;
};

struct LoadResult {
  std::vector<LoadedGraph> graphs;
  std::vector<std::string> errors;
};

bool is_json_path(const fs::path& p) {
  const auto ext = p.extension().string();
  return ext == ".json" || ext == ".jsonl";
}

/// named:NAME, smiles:SMILES, a JSON graph file, or a SMILES-per-line file.
LoadResult load_graphs(const std::string& spec) {
  LoadResult out;
  try {
    if (spec.rfind("named:", 0) == 0) {
      out.graphs.push_back({make_named_graph(spec.substr(6)), spec});
      return out;
    }
    if (spec.rfind("smiles:", 0) == 0) {
      out.graphs.push_back({parse_smiles(spec.substr(7)), spec.substr(7)});
      return out;
    }
    const fs::path path(spec);
    if (!fs::exists(path)) throw InputError("no such file: " + spec);
    if (is_json_path(path)) {
      for (auto& g : read_graphs_json(path)) out.graphs.push_back({std::move(g), ""});
      return out;
    }
    CorpusParse parsed = parse_corpus(path);
    for (auto& e : parsed.graphs) out.graphs.push_back({std::move(e.graph), e.smiles});
    for (const auto& e : parsed.errors) {
      out.errors.push_back(spec + ":" + std::to_string(e.line) + ": " + e.message);
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return out;
}

Graph load_single(const std::string& spec) {
  LoadResult r = load_graphs(spec);
  if (!r.errors.empty()) throw InputError(r.errors.front());
  if (r.graphs.size() != 1) {
    throw InputError(spec + ": expected exactly one graph, found " + std::to_string(r.graphs.size()));
  }
  return std::move(r.graphs.front().graph);
}

Scheme parse_scheme_arg(const std::string& text) {
  try {
    return Scheme::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

WlTest parse_test_arg(const std::string& text) {
  try {
    return parse_wl_test(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Writes to --out when given, else stdout.
void emit(const std::optional<std::string>& out, const std::string& text) {
  if (!out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*out, std::ios::binary);
  if (!f) throw InputError("cannot write " + *out);
  f << text;
}

struct Flags {
  std::string scheme = "rings_paths";
  std::string test = "wl";
  bool strict_def4 = false;
  bool no_edge_labels = false;
  std::uint64_t seed = 1;
  std::size_t budget = 1000000;
  std::optional<std::string> out;
};

int cmd_fragment(const std::string& input, const Flags& flags) {
  const Scheme scheme = parse_scheme_arg(flags.scheme);
  const LoadResult loaded = load_graphs(input);
  for (const auto& e : loaded.errors) std::cerr << "error: " << e << '\n';
  if (loaded.graphs.empty() && !loaded.errors.empty()) return kExitInput;

  std::string text;
  for (std::size_t i = 0; i < loaded.graphs.size(); ++i) {
    const Fragmentation fr = scheme.apply(loaded.graphs[i].graph);
    const nlohmann::json summary = {{"rings", fr.count(FragmentClass::Ring)},
                                    {"paths", fr.count(FragmentClass::Path)},
                                    {"junctions", fr.count(FragmentClass::Junction)}};
    nlohmann::json line = {{"index", i}, {"fragmentation", fragmentation_to_json(fr)}, {"summary", summary}};
    if (!loaded.graphs[i].source.empty()) line["source"] = loaded.graphs[i].source;
    text += line.dump() + "\n";
    std::cerr << "graph " << i << ": " << fr.count(FragmentClass::Ring) << " rings, "
              << fr.count(FragmentClass::Path) << " paths, " << fr.count(FragmentClass::Junction) << " junctions\n";
  }
  emit(flags.out, text);
  return kExitOk;
}

int cmd_distinguish(const std::string& first, const std::string& second, const std::optional<std::string>& expect,
                    const Flags& flags) {
  const WlTest test = parse_test_arg(flags.test);
  std::optional<Outcome> expected;
  if (expect) {
    if (*expect == "distinguished") {
      expected = Outcome::Distinguished;
    } else if (*expect == "indistinguishable") {
      expected = Outcome::Indistinguishable;
    } else {
      throw UsageError("--expect must be distinguished or indistinguishable");
    }
  }
  DistinguishOptions opts;
  opts.scheme = parse_scheme_arg(flags.scheme);
  opts.strict_def4 = flags.strict_def4;
  opts.use_edge_labels = !flags.no_edge_labels;
  const Graph a = load_single(first);
  const Graph b = load_single(second);
  DistinguishResult r;
  try {
    r = distinguish(a, b, test, opts);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  nlohmann::json j = result_to_json(r);
  if (needs_scheme(test)) j["scheme"] = opts.scheme.name();
  emit(flags.out, j.dump() + "\n");
  std::cerr << to_string(test) << ": " << to_string(r.outcome) << " after " << r.rounds << " rounds\n";
  if (expected) return r.outcome == *expected ? kExitOk : kExitNegative;
  return r.outcome == Outcome::Distinguished ? kExitOk : kExitNegative;
}

int cmd_report(const std::string& suite, const ReportOptions& base, const Flags& flags, bool scheme_given) {
  ReportOptions opts = base;
  opts.seed = flags.seed;
  opts.budget = flags.budget;
  opts.strict_def4 = flags.strict_def4;
  opts.use_edge_labels = !flags.no_edge_labels;
  if (scheme_given) {
    parse_scheme_arg(flags.scheme);
    opts.scheme = flags.scheme;
  }
  std::vector<std::string> missing;
  if (opts.corpus && !fs::exists(*opts.corpus)) missing.push_back("--corpus " + opts.corpus->string());
  if (opts.witnesses && !fs::exists(*opts.witnesses)) missing.push_back("--witnesses " + opts.witnesses->string());
  if (!missing.empty()) {
    for (const auto& m : missing) std::cerr << "error: missing input " << m << '\n';
    return kExitInput;
  }
  Report report;
  try {
    report = run_report(suite, opts);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  } catch (const DisconnectedGraphError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (flags.out) {
    fs::create_directories(*flags.out);
    for (const auto& f : report.files) {
      std::ofstream out(fs::path(*flags.out) / f.name, std::ios::binary);
      if (!out) throw InputError("cannot write " + (fs::path(*flags.out) / f.name).string());
      out << f.content;
    }
  } else {
    for (const auto& f : report.files) std::cout << f.content;
  }
  for (const auto& n : report.notes) std::cerr << n << '\n';
  for (const auto& f : report.failures) std::cerr << "check failed: " << f << '\n';
  return report.failures.empty() ? kExitOk : kExitNegative;
}

int cmd_search(const std::string& weak, const std::string& strong, std::size_t max_n, const Flags& flags) {
  WitnessQuery q;
  q.weak = parse_test_arg(weak);
  q.strong = parse_test_arg(strong);
  q.options.scheme = parse_scheme_arg(flags.scheme);
  q.options.strict_def4 = flags.strict_def4;
  q.options.use_edge_labels = !flags.no_edge_labels;
  q.max_n = max_n;
  q.budget = flags.budget;
  q.seed = flags.seed;
  WitnessSearchResult r;
  try {
    r = witness_search(q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!r.witness) {
    std::cerr << "not found: no " << weak << "/" << strong << " witness in " << r.examined << " pairs\n";
    return kExitNegative;
  }
  emit(flags.out, witness_to_json(*r.witness, q).dump() + "\n");
  std::cerr << "found after " << r.examined << " pairs (" << r.witness->generator << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fragment-WL expressiveness toolkit"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", flags.out, "Write results to this path instead of stdout");
  };
  std::string fragment_input;
  CLI::App* fragment = app.add_subcommand("fragment", "Fragment graphs from a SMILES or JSON file");
  fragment->add_option("input", fragment_input, "File, smiles:S or named:NAME")->required();
  fragment->add_option("--scheme", flags.scheme, "rings_paths | rings | all_cycles:K | cliques:K | none");
  add_common(fragment);

  std::string g1, g2;
  std::optional<std::string> expect;
  CLI::App* dist = app.add_subcommand("distinguish", "Run a WL-variant test on two graphs");
  dist->add_option("first", g1, "File, smiles:S or named:NAME")->required();
  dist->add_option("second", g2, "File, smiles:S or named:NAME")->required();
  dist->add_option("--test", flags.test, "wl | fwl2 | nf | fr | hlg | er | gr");
  dist->add_option("--scheme", flags.scheme, "Fragmentation for nf, fr and hlg");
  dist->add_flag("--strict-def4", flags.strict_def4, "Keep all fragment intersections in the higher-level graph");
  dist->add_flag("--no-edge-labels", flags.no_edge_labels, "Ignore edge labels during refinement");
  dist->add_option("--expect", expect, "distinguished | indistinguishable; exit 1 on mismatch");
  add_common(dist);

  std::string suite;
  ReportOptions report_opts;
  std::optional<std::string> corpus, witnesses;
  CLI::App* report = app.add_subcommand("report", "Emit a report suite: hierarchy, commute, vocab, counting");
  report->add_option("suite", suite, "hierarchy | commute | vocab | counting")->required();
  CLI::Option* report_scheme = report->add_option("--scheme", flags.scheme, "Override the suite's scheme");
  report->add_option("--corpus", corpus, "SMILES corpus (vocab, counting)");
  report->add_option("--witnesses", witnesses, "Witness fixtures JSON-lines (hierarchy)");
  report->add_option("--graph", report_opts.graph, "Named graph for the commute suite");
  report->add_option("--source", report_opts.source, "Source node for the commute suite");
  report->add_option("--synthetic-size", report_opts.synthetic_size, "Graphs in the synthetic corpus");
  report->add_option("--seed", flags.seed, "Seed for every random choice");
  report->add_option("--budget", flags.budget, "Witness search budget in pairs");
  report->add_flag("--strict-def4", flags.strict_def4, "Keep all fragment intersections in the higher-level graph");
  report->add_flag("--no-edge-labels", flags.no_edge_labels, "Ignore edge labels during refinement");
  report->add_option("--out", flags.out, "Directory for report files (default: stdout)");

  std::string weak = "nf", strong = "fr";
  std::size_t max_n = 10;
  CLI::App* search = app.add_subcommand("search", "Search for a pair separating two tests");
  search->add_option("--weak", weak, "Test that must not distinguish");
  search->add_option("--strong", strong, "Test that must distinguish");
  search->add_option("--scheme", flags.scheme, "Fragmentation scheme");
  search->add_option("--max-n", max_n, "Largest graph size (at most 10)");
  search->add_option("--seed", flags.seed, "Random seed");
  search->add_option("--budget", flags.budget, "Maximum number of pairs examined");
  search->add_flag("--strict-def4", flags.strict_def4, "Keep all fragment intersections in the higher-level graph");
  search->add_flag("--no-edge-labels", flags.no_edge_labels, "Ignore edge labels during refinement");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fragment->parsed()) return cmd_fragment(fragment_input, flags);
    if (dist->parsed()) return cmd_distinguish(g1, g2, expect, flags);
    if (report->parsed()) {
      if (corpus) report_opts.corpus = *corpus;
      if (witnesses) report_opts.witnesses = *witnesses;
      return cmd_report(suite, report_opts, flags, report_scheme->count() > 0);
    }
    if (search->parsed()) {
      if (search->get_option("--scheme")->count() == 0) flags.scheme = "all_cycles:3";
      return cmd_search(weak, strong, max_n, flags);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
