#ifndef FRAGWL_REPORT_HPP
#define FRAGWL_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fragwl/fragmentation.hpp"
#include "fragwl/graph.hpp"

namespace fragwl {

struct ReportOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 1000000;
  std::optional<std::filesystem::path> corpus;     // vocab, counting
  std::optional<std::filesystem::path> witnesses;  // hierarchy
  std::string graph = "two_rings_path(6,6,4)";     // commute
  NodeId source = 3;                               // commute
  std::optional<std::string> scheme;               // suite default when unset
  bool strict_def4 = false;
  bool use_edge_labels = true;
  std::size_t synthetic_size = 1000;
};

struct ReportFile {
  std::string name;
  std::string content;
};

struct Report {
  std::vector<ReportFile> files;
  std::vector<std::string> notes;     // human-readable, for stderr
  std::vector<std::string> failures;  // checks that did not hold
};

/// Suites: hierarchy, commute, vocab, counting. Throws std::invalid_argument
/// for an unknown suite and std::runtime_error for unreadable inputs.
Report run_report(const std::string& suite, const ReportOptions& options);

std::vector<std::string> report_suites();

}  // namespace fragwl

#endif  // FRAGWL_REPORT_HPP
