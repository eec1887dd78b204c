#include "rslab/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "rslab/enumeration.hpp"
#include "rslab/error.hpp"
#include "rslab/graph_io.hpp"
#include "rslab/saturation.hpp"

namespace rslab {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr std::string_view kCacheFile = "census.jsonl";

std::string cache_directory(const CensusOptions& opts) {
  if (!opts.cache_dir.empty()) return opts.cache_dir;
  if (opts.use_env_cache) {
    if (const char* env = std::getenv("RSLAB_CACHE"); env != nullptr && *env != '\0') return env;
  }
  return {};
}

bool same_key(const json& j, int n, const PatternSpec& h, Quantity q) {
  return j.value("n", -1) == n && j.value("pattern", "") == h.to_string() &&
         j.value("quantity", "") == to_string(q);
}

std::vector<std::string> read_lines(const fs::path& file) {
  std::vector<std::string> lines;
  std::ifstream in(file);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::optional<CensusRecord> cache_lookup(const std::string& dir, int n, const PatternSpec& h,
                                         Quantity q) {
  if (dir.empty()) return std::nullopt;
  for (const auto& line : read_lines(fs::path(dir) / kCacheFile)) {
    json j = json::parse(line, nullptr, false);
    if (!j.is_discarded() && same_key(j, n, h, q)) return census_record_from_json(line);
  }
  return std::nullopt;
}

void cache_store(const std::string& dir, const CensusRecord& r) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  const fs::path file = fs::path(dir) / kCacheFile;
  std::vector<std::string> kept;
  for (auto& line : read_lines(file)) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !same_key(j, r.n, r.pattern, r.quantity)) kept.push_back(line);
  }
  kept.push_back(to_json(r));
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& line : kept) out << line << '\n';
  }
  fs::rename(tmp, file);
}

struct LevelOutcome {
  std::vector<ClassVerdict> verdicts;
  std::uint64_t nodes = 0;
};

LevelOutcome evaluate_level(const std::vector<Graph>& reps, const std::vector<std::size_t>& which,
                            const PatternSpec& h, Quantity q, std::uint64_t budget, int threads) {
  LevelOutcome out;
  out.verdicts.assign(which.size(), ClassVerdict::kFail);
  std::vector<std::uint64_t> nodes(which.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < which.size();) {
      out.verdicts[i] = evaluate_class(reps[which[i]], h, q, budget, &nodes[i]);
    }
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(which.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto v : nodes) out.nodes += v;
  return out;
}

}  // namespace

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::kSat: return "sat";
    case Quantity::kSsat: return "ssat";
    case Quantity::kPrsat: return "prsat";
  }
  return "?";
}

Quantity parse_quantity(std::string_view text) {
  if (text == "sat") return Quantity::kSat;
  if (text == "ssat") return Quantity::kSsat;
  if (text == "prsat") return Quantity::kPrsat;
  throw Error(ErrorCode::kParseError, "unknown quantity '" + std::string(text) + "'");
}

int census_cutoff(Quantity q) { return q == Quantity::kPrsat ? 8 : 9; }

std::string_view to_string(CensusStatus s) {
  switch (s) {
    case CensusStatus::kExact: return "exact";
    case CensusStatus::kUnknown: return "unknown";
    case CensusStatus::kNone: return "none";
  }
  return "?";
}

ClassVerdict evaluate_class(const Graph& g, const PatternSpec& h, Quantity q,
                            std::uint64_t budget, std::uint64_t* nodes) {
  switch (q) {
    case Quantity::kSat:
      return is_saturated(g, h).holds ? ClassVerdict::kPass : ClassVerdict::kFail;
    case Quantity::kSsat:
      return is_semi_saturated(g, h).holds ? ClassVerdict::kPass : ClassVerdict::kFail;
    case Quantity::kPrsat: {
      SaturationOptions opts;
      opts.search.budget = budget;
      SearchVerdict v = is_properly_rainbow_saturated(g, h, opts);
      if (nodes != nullptr) *nodes = v.nodes_explored;
      if (v.status == Status::kEstablished) return ClassVerdict::kPass;
      return v.status == Status::kRefuted ? ClassVerdict::kFail : ClassVerdict::kUnknown;
    }
  }
  return ClassVerdict::kFail;
}

CensusRecord run_census(int n, const PatternSpec& h, Quantity q, const CensusOptions& opts) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "census needs n >= 1");
  if (n > census_cutoff(q)) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(to_string(q)) + " census is limited to n <= " +
                    std::to_string(census_cutoff(q)));
  }
  if (opts.budget == 0 || opts.threads < 1) {
    throw Error(ErrorCode::kInvalidParameter, "census needs budget > 0 and threads >= 1");
  }
  const std::string dir = cache_directory(opts);
  if (!opts.force) {
    if (auto cached = cache_lookup(dir, n, h, q)) {
      if (!verify_census_record(*cached, std::max(opts.budget, opts.escalation_budget))) {
        throw Error(ErrorCode::kCacheMismatch,
                    "cached census record for " + h.to_string() + " at n=" + std::to_string(n) +
                        " does not verify; rerun with --force to overwrite");
      }
      return *cached;
    }
  }

  CensusRecord r;
  r.n = n;
  r.pattern = h;
  r.quantity = q;
  r.budget = opts.budget;
  std::optional<int> first_unknown;
  GraphEnumerator en(n);
  for (int m = 0; m <= en.max_edges(); ++m) {
    const std::vector<Graph>& reps = en.level(m);
    r.total_graphs_examined += reps.size();
    std::vector<std::size_t> all(reps.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    LevelOutcome level = evaluate_level(reps, all, h, q, opts.budget, opts.threads);
    r.nodes_used += level.nodes;

    std::vector<std::size_t> undecided;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (level.verdicts[i] == ClassVerdict::kUnknown) undecided.push_back(i);
    if (!undecided.empty() && opts.escalation_budget > opts.budget) {
      LevelOutcome retry =
          evaluate_level(reps, undecided, h, q, opts.escalation_budget, opts.threads);
      r.nodes_used += retry.nodes;
      for (std::size_t j = 0; j < undecided.size(); ++j)
        level.verdicts[undecided[j]] = retry.verdicts[j];
    }

    int unknown_here = 0;
    std::vector<CanonicalLabel> passing;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (level.verdicts[i] == ClassVerdict::kUnknown) ++unknown_here;
      if (level.verdicts[i] == ClassVerdict::kPass) passing.push_back(canonical_form(reps[i]));
    }
    r.unknown_classes += unknown_here;
    if (unknown_here > 0 && !first_unknown) first_unknown = m;
    if (!passing.empty()) {
      std::sort(passing.begin(), passing.end());
      r.upper_bound = m;
      r.witnesses = std::move(passing);
      r.witnesses_complete = unknown_here == 0;
      if (first_unknown && *first_unknown < m) {
        r.status = CensusStatus::kUnknown;
        r.lower_bound = *first_unknown;
      } else {
        r.status = CensusStatus::kExact;
        r.value = m;
        r.lower_bound = m;
      }
      break;
    }
  }
  if (!r.upper_bound) {
    r.status = first_unknown ? CensusStatus::kUnknown : CensusStatus::kNone;
    r.lower_bound = first_unknown ? *first_unknown : en.max_edges() + 1;
  }
  cache_store(dir, r);
  return r;
}

CensusRecord sat_number(int n, const PatternSpec& h, const CensusOptions& opts) {
  return run_census(n, h, Quantity::kSat, opts);
}

CensusRecord ssat_number(int n, const PatternSpec& h, const CensusOptions& opts) {
  return run_census(n, h, Quantity::kSsat, opts);
}

CensusRecord prsat_number(int n, const PatternSpec& h, const CensusOptions& opts) {
  return run_census(n, h, Quantity::kPrsat, opts);
}

bool verify_census_record(const CensusRecord& r, std::uint64_t budget) {
  if (r.status == CensusStatus::kExact && (!r.value || r.value != r.upper_bound)) return false;
  if (r.upper_bound.has_value() == r.witnesses.empty()) return false;
  if (r.status == CensusStatus::kNone && r.upper_bound) return false;
  for (const auto& label : r.witnesses) {
    Graph g = from_graph6(label.bytes);
    if (g.order() != r.n || g.size() != *r.upper_bound) return false;
    if (canonical_form(g) != label) return false;
    if (evaluate_class(g, r.pattern, r.quantity, budget) != ClassVerdict::kPass) return false;
  }
  return true;
}

std::string to_json(const CensusRecord& r) {
  json j;
  j["n"] = r.n;
  j["pattern"] = r.pattern.to_string();
  j["quantity"] = std::string(to_string(r.quantity));
  j["status"] = std::string(to_string(r.status));
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound ? json(*r.upper_bound) : json(nullptr);
  json w = json::array();
  for (const auto& label : r.witnesses) w.push_back(label.bytes);
  j["witnesses"] = w;
  j["witnesses_complete"] = r.witnesses_complete;
  j["total_graphs_examined"] = r.total_graphs_examined;
  j["nodes_used"] = r.nodes_used;
  j["budget"] = r.budget;
  j["unknown_classes"] = r.unknown_classes;
  return j.dump();
}

CensusRecord census_record_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    CensusRecord r;
    r.n = j.at("n").get<int>();
    r.pattern = PatternSpec::parse(j.at("pattern").get<std::string>());
    r.quantity = parse_quantity(j.at("quantity").get<std::string>());
    const std::string status = j.at("status").get<std::string>();
    if (status == "exact") {
      r.status = CensusStatus::kExact;
    } else if (status == "unknown") {
      r.status = CensusStatus::kUnknown;
    } else if (status == "none") {
      r.status = CensusStatus::kNone;
    } else {
      throw Error(ErrorCode::kParseError, "unknown census status '" + status + "'");
    }
    if (!j.at("value").is_null()) r.value = j["value"].get<int>();
    r.lower_bound = j.at("lower_bound").get<int>();
    if (!j.at("upper_bound").is_null()) r.upper_bound = j["upper_bound"].get<int>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back({w.get<std::string>()});
    r.witnesses_complete = j.value("witnesses_complete", true);
    r.total_graphs_examined = j.value("total_graphs_examined", std::uint64_t{0});
    r.nodes_used = j.value("nodes_used", std::uint64_t{0});
    r.budget = j.value("budget", std::uint64_t{0});
    r.unknown_classes = j.value("unknown_classes", 0);
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace rslab
