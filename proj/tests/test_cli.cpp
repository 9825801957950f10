#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(FRAGWL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

nlohmann::json summary_of(const std::string& smiles) {
  const CliRun r = run("fragment 'smiles:" + smiles + "'");
  EXPECT_EQ(r.code, 0);
  return nlohmann::json::parse(r.out)["summary"];
}

}  // namespace

TEST(CliFragment, SpecExamples) {
  EXPECT_EQ(summary_of("C1CCCCC1"), (nlohmann::json{{"rings", 1}, {"paths", 0}, {"junctions", 0}}));
  EXPECT_EQ(summary_of("CC(C)(C)C"), (nlohmann::json{{"rings", 0}, {"paths", 4}, {"junctions", 1}}));
  EXPECT_EQ(summary_of("c1ccc2ccccc2c1"), (nlohmann::json{{"rings", 2}, {"paths", 0}, {"junctions", 0}}));
}

TEST(CliFragment, FilesAndPartialFailures) {
  const fs::path mixed = temp_file("fragwl_cli_mixed.smi", "C1CCCCC1\nC1CC\nCCO\n");
  const CliRun r = run("fragment " + mixed.string() + " --scheme rings");
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::size_t count = 0;
  for (std::string l; std::getline(lines, l);) {
    const auto j = nlohmann::json::parse(l);
    EXPECT_EQ(j["fragmentation"]["scheme"], "rings");
    ++count;
  }
  EXPECT_EQ(count, 2u);

  const fs::path bad = temp_file("fragwl_cli_bad.smi", "C1CC\n(\n");
  EXPECT_EQ(run("fragment " + bad.string()).code, 3);
  EXPECT_EQ(run("fragment /nonexistent/input.smi").code, 3);
  EXPECT_EQ(run("fragment named:c6 --scheme bogus").code, 2);
  fs::remove(mixed);
  fs::remove(bad);
}

TEST(CliFragment, JsonInputAndOut) {
  const fs::path g = temp_file("fragwl_cli_graph.json", R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})");
  const fs::path out = fs::temp_directory_path() / "fragwl_cli_frag_out.jsonl";
  EXPECT_EQ(run("fragment " + g.string() + " --out " + out.string()).code, 0);
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["summary"]["rings"], 1);
  fs::remove(g);
  fs::remove(out);
}

TEST(CliDistinguish, ExitCodes) {
  const CliRun wl = run("distinguish named:two_c3 named:c6 --test wl");
  EXPECT_EQ(wl.code, 1);
  EXPECT_EQ(nlohmann::json::parse(wl.out)["outcome"], "indistinguishable");
  const CliRun nf = run("distinguish named:two_c3 named:c6 --test nf --scheme all_cycles:3");
  EXPECT_EQ(nf.code, 0);
  EXPECT_EQ(nlohmann::json::parse(nf.out)["outcome"], "distinguished");
  EXPECT_EQ(run("distinguish named:rook4x4 named:shrikhande --test fwl2 --expect indistinguishable").code, 0);
  EXPECT_EQ(run("distinguish named:rook4x4 named:shrikhande --test fwl2 --expect distinguished").code, 1);
  EXPECT_EQ(run("distinguish named:rook4x4 named:shrikhande --test hlg --scheme all_cycles:5").code, 0);
  EXPECT_EQ(run("distinguish smiles:CCO smiles:OCC --test er").code, 1);
}

TEST(CliDistinguish, Errors) {
  EXPECT_EQ(run("distinguish named:c6 named:c6 --test 3wl").code, 2);
  EXPECT_EQ(run("distinguish named:c6").code, 2);
  EXPECT_EQ(run("distinguish named:c6 named:nope").code, 3);
  EXPECT_EQ(run("distinguish smiles:C1CC named:c6").code, 3);
  EXPECT_EQ(run("distinguish named:c6 named:c6 --expect maybe").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(CliReport, SuitesAndOutDir) {
  const fs::path dir = fs::temp_directory_path() / "fragwl_cli_report";
  fs::remove_all(dir);
  EXPECT_EQ(run("report commute --out " + dir.string()).code, 0);
  EXPECT_EQ(slurp(dir / "commute.csv").substr(0, 31), "node_id,none,rings,rings_paths\n");
  EXPECT_EQ(run("report counting --synthetic-size 10 --out " + dir.string()).code, 0);
  EXPECT_TRUE(fs::exists(dir / "counting.csv"));
  EXPECT_EQ(run("report hierarchy --witnesses " FRAGWL_FIXTURE_DIR "/witnesses.jsonl").code, 0);
  EXPECT_EQ(run("report vocab --synthetic-size 100").code, 0);
  EXPECT_EQ(run("report tables").code, 2);
  EXPECT_EQ(run("report vocab --corpus /nonexistent/zinc.smi").code, 3);
  EXPECT_EQ(run("report hierarchy --witnesses /nonexistent/w.jsonl").code, 3);
  EXPECT_EQ(run("report commute --graph two_c3").code, 3);
  fs::remove_all(dir);
}

TEST(CliSearch, KnownPair) {
  const CliRun r = run("search --weak wl --strong nf --scheme all_cycles:3");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["generator"], "known:two_c3_vs_c6");
  EXPECT_EQ(run("search --weak hlg --strong wl --budget 200").code, 1);
  EXPECT_EQ(run("search --max-n 12").code, 2);
}

TEST(CliDeterminism, ByteIdenticalReruns) {
  const std::vector<std::string> commands = {
      "fragment 'smiles:CC(=O)Nc1ccc(O)cc1' --scheme rings_paths",
      "distinguish named:rook4x4 named:shrikhande --test hlg --scheme all_cycles:5",
      "report commute",
      "report vocab --synthetic-size 200 --seed 7",
      "report counting --synthetic-size 20 --seed 3",
      "report hierarchy --witnesses " FRAGWL_FIXTURE_DIR "/witnesses.jsonl",
      "search --weak fr --strong hlg --scheme all_cycles:3 --seed 2 --budget 200000",
  };
  for (const auto& c : commands) {
    const CliRun a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code) << c;
    EXPECT_FALSE(a.out.empty()) << c;
    EXPECT_EQ(a.out, b.out) << c;
  }
}
