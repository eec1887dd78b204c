#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rslab/census.hpp"

namespace rslab::cli {

enum class RowStatus { kPass, kFail, kUnknown };

struct ReproRow {
  std::string claim;
  std::string expected;
  std::string computed;
  RowStatus status = RowStatus::kFail;
};

struct ReproConfig {
  CensusOptions census;
  std::uint64_t budget = 100'000'000;  // standalone searches
  int ell = 4;                         // lemma4 only
};

std::vector<std::string> suite_names();
// Throws kInvalidParameter for an unknown suite.
std::vector<ReproRow> run_suite(const std::string& suite, const ReproConfig& cfg);

}  // namespace rslab::cli
