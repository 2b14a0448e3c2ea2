#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liecheck/schubert.hpp"
#include "liecheck/weyl.hpp"

namespace liecheck {

inline constexpr const char* kReportVersion = "1.0";

struct RunConfig {
  std::vector<std::pair<char, int>> targets;
  std::set<std::string> checks;       // empty or containing "all" selects everything
  std::optional<Word> word_override;  // replaces the chain word of v
  std::uint64_t budget = kDefaultBudget;
  std::string out;                    // empty: write to stdout
  std::string format = "json";        // json | markdown
  int jobs = 1;
};

const std::vector<std::string>& check_groups();
std::vector<std::pair<char, int>> default_targets();

// Throws ConfigError on invalid targets, groups, budget, format or jobs.
void validate(const RunConfig& cfg);

// Case reports for one target in a fixed order.
std::vector<CaseReport> run_target(char type, int rank, const RunConfig& cfg);

// Targets in parallel, merged in target order.
VerificationReport build_report(const RunConfig& cfg);

std::string to_json(const VerificationReport& r, const std::string& timestamp);
std::string to_markdown(const VerificationReport& r, const std::string& timestamp);
std::string utc_timestamp();

// Writes the report and returns the exit status: 0 all pass, 2 failure,
// 3 budget exceeded, 4 configuration error. Diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& err);

// "1,2,3" (1-based) -> {0,1,2}; ConfigError on malformed input.
Word parse_word(const std::string& s, int rank);
std::pair<char, int> parse_type(const std::string& type, int rank);

}  // namespace liecheck
