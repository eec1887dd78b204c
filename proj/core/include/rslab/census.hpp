#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rslab/canonical.hpp"
#include "rslab/graph.hpp"
#include "rslab/pattern.hpp"

namespace rslab {

enum class Quantity { kSat, kSsat, kPrsat };

std::string_view to_string(Quantity q);
Quantity parse_quantity(std::string_view text);

// Largest n the census accepts for each quantity.
int census_cutoff(Quantity q);

enum class CensusStatus {
  kExact,    // value is the minimum
  kUnknown,  // some class below the best found value stayed undecided
  kNone,     // no graph on n vertices qualifies
};

std::string_view to_string(CensusStatus s);

struct CensusOptions {
  // Per-graph colouring budget, and the larger one for the second pass over
  // undecided classes.
  std::uint64_t budget = 10'000'000;
  std::uint64_t escalation_budget = 100'000'000;
  int threads = 1;
  // Directory holding census.jsonl. When empty, RSLAB_CACHE is consulted
  // unless use_env_cache is false.
  std::string cache_dir;
  bool use_env_cache = true;
  // Recompute and overwrite an existing record.
  bool force = false;
};

struct CensusRecord {
  int n = 0;
  PatternSpec pattern = PatternSpec::path(2);
  Quantity quantity = Quantity::kSat;
  CensusStatus status = CensusStatus::kNone;
  std::optional<int> value;
  // Every class with fewer edges than lower_bound was decided negatively.
  int lower_bound = 0;
  // Smallest edge count at which a qualifying class was found.
  std::optional<int> upper_bound;
  // Canonical labels of all qualifying classes at upper_bound edges.
  std::vector<CanonicalLabel> witnesses;
  // False when some class at upper_bound edges stayed undecided.
  bool witnesses_complete = true;
  std::uint64_t total_graphs_examined = 0;
  std::uint64_t nodes_used = 0;
  std::uint64_t budget = 0;
  int unknown_classes = 0;
};

// Minimum edge count over isomorphism classes on n vertices with the given
// property, scanning edge counts upward and stopping at the first level with
// a qualifying class. Throws kBudgetExceeded above the cutoff.
CensusRecord run_census(int n, const PatternSpec& h, Quantity q, const CensusOptions& opts = {});

CensusRecord sat_number(int n, const PatternSpec& h, const CensusOptions& opts = {});
CensusRecord ssat_number(int n, const PatternSpec& h, const CensusOptions& opts = {});
CensusRecord prsat_number(int n, const PatternSpec& h, const CensusOptions& opts = {});

// Re-checks each witness: right edge count and passes the verifier.
bool verify_census_record(const CensusRecord& r, std::uint64_t budget);

std::string to_json(const CensusRecord& r);
CensusRecord census_record_from_json(std::string_view text);

// Decides the property for one graph; kUnknown only arises for prsat.
enum class ClassVerdict { kPass, kFail, kUnknown };
ClassVerdict evaluate_class(const Graph& g, const PatternSpec& h, Quantity q,
                            std::uint64_t budget, std::uint64_t* nodes = nullptr);

}  // namespace rslab
