#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

namespace hodge::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSingular = 2,
  kParse = 3,
  kCertificateFailure = 4,
  kBudget = 5,
};

struct RunConfig {
  std::string subcommand;  // jring, hodge, twisted, mhs, deform, gm, certify, paper-check
  std::optional<std::string> poly;
  std::optional<std::size_t> vars;
  std::optional<std::string> pair;
  std::optional<int> degree;
  std::optional<int> p;
  std::optional<long> k;
  long k_min = -3;
  long k_max = 6;
  std::optional<std::string> directions_file;
  std::optional<std::string> paper_table_file;
  bool picard_fuchs = false;
  std::size_t class_index = 0;
  int max_order = 4;
  bool json = false;
};

/// Builds the report for a subcommand. Errors propagate as exceptions.
nlohmann::json build_report(const RunConfig& config);

/// Exit status implied by a finished report (certificate failures and the like).
int report_status(const RunConfig& config, const nlohmann::json& report);

/// Plain-text rendering of a report; every number printed is read from the JSON.
void render_text(const RunConfig& config, const nlohmann::json& report, std::ostream& out);

/// Runs a subcommand end to end, mapping exceptions to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hodge::cli
