// Copyright 2026 The superindex authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUPERINDEX_VERIFY_HPP
#define SUPERINDEX_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superindex/local_index.hpp"

namespace superindex {

// Info checks are reported but never decide the outcome.
enum class Status { Pass, Fail, Info };

std::string_view status_name(Status s);

struct Check {
  std::string id;        // "<suite>.<family>.<case>", unique within a report
  std::string anchor;    // the identity or statement being checked
  std::string value;     // computed exact value
  std::string expected;  // reference value
  Status status = Status::Pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;  // sorted by id
  bool passed() const;
};

struct RunConfig {
  std::optional<SuperType> type;
  std::optional<int> n;
  std::uint64_t seed = 42;
};

// bernoulli, algebra, trace, cocycle, local-index, genera.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws std::invalid_argument for an
// unknown suite or a configuration outside the module limits.
std::vector<SuiteReport> run_suites(std::string_view name, const RunConfig& cfg);

std::string report_text(const std::vector<SuiteReport>& reports);
// Key order and formatting are fixed, so equal reports give equal bytes.
std::string report_json(const std::vector<SuiteReport>& reports, std::string_view suite, const RunConfig& cfg);

// "2n,a,b" as written in type labels (2n|a,b).
SuperType parse_type(std::string_view text);

}  // namespace superindex

#endif
