#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "reproduce.hpp"
#include "rslab/census.hpp"
#include "rslab/constructions.hpp"
#include "rslab/error.hpp"
#include "rslab/graph_io.hpp"
#include "rslab/rainbow.hpp"
#include "rslab/saturation.hpp"

namespace rslab::cli {

namespace {

using json = nlohmann::json;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

PatternSpec load_pattern(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    return PatternSpec::explicit_graph(parse_graph(trim(read_text(text.substr(1)))));
  }
  return PatternSpec::parse(text);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kOracleBudgetExceeded:
      return kUndecided;
    case ErrorCode::kConstructionInvalid:
    case ErrorCode::kCacheMismatch:
      return kNegative;
    default:
      return kBadInput;
  }
}

json parsed(const std::string& s) { return json::parse(s); }

struct ConstructArgs {
  std::string family;
  std::optional<int> ell, m, n, k, t, s;
  std::string variant = "sat";
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::kInvalidParameter, std::string("missing --") + flag);
  return *v;
}

int do_construct(const ConstructArgs& a, const std::string& format, const CensusOptions& census,
                 std::ostream& out) {
  Graph g;
  std::optional<EdgeColouring> colouring;
  std::string provenance;
  json params = json::object();
  auto take = [&](GadgetBundle b) {
    g = std::move(b.graph);
    colouring = std::move(b.colouring);
    provenance = std::move(b.provenance);
  };
  if (a.family == "folded-cube") {
    params["ell"] = need(a.ell, "ell");
    take(folded_cube(*a.ell));
  } else if (a.family == "broom-gadget") {
    params["m"] = need(a.m, "m");
    take(broom_gadget(*a.m));
  } else if (a.family == "broom-saturated") {
    params["n"] = need(a.n, "n");
    params["m"] = need(a.m, "m");
    g = broom_saturated(*a.n, *a.m, census);
    provenance = "gadget copies plus a census witness for the remainder";
  } else if (a.family == "caterpillar") {
    params["n"] = need(a.n, "n");
    params["k"] = need(a.k, "k");
    params["ell"] = need(a.ell, "ell");
    take(caterpillar_construction(*a.n, *a.k, *a.ell));
  } else if (a.family == "star-forest") {
    params["n"] = need(a.n, "n");
    params["k"] = need(a.k, "k");
    g = star_forest(*a.n, *a.k);
    provenance = "star forest saturated for the subdivided star on k+1 vertices";
  } else if (a.family == "double-star") {
    params["n"] = need(a.n, "n");
    params["t"] = need(a.t, "t");
    params["s"] = need(a.s, "s");
    params["variant"] = a.variant;
    const auto variant = a.variant == "prsat" ? DoubleStarVariant::kPrsat : DoubleStarVariant::kSat;
    g = double_star_construction(*a.n, *a.t, *a.s, variant);
    provenance = "disjoint union of K_1 + m K_s blocks";
  } else {
    throw Error(ErrorCode::kInvalidParameter, "unknown family '" + a.family + "'");
  }

  if (format == "graph6") {
    out << to_graph6(g) << '\n';
  } else if (format == "dot") {
    out << to_dot(g, colouring ? &*colouring : nullptr);
  } else if (format == "json") {
    json j;
    j["family"] = a.family;
    j["parameters"] = params;
    j["graph6"] = to_graph6(g);
    j["graph"] = colouring ? parsed(to_json(ColouredGraph{g, *colouring})) : parsed(to_json(g));
    j["provenance"] = provenance;
    out << j.dump() << '\n';
  } else {
    out << "family: " << a.family << '\n'
        << "vertices: " << g.order() << '\n'
        << "edges: " << g.size() << '\n';
    if (colouring) out << "colours: " << colouring->colour_count() << '\n';
    out << "graph6: " << to_graph6(g) << '\n' << "provenance: " << provenance << '\n';
  }
  return kOk;
}

int do_verify(const Graph& g, const PatternSpec& h, const std::string& mode, std::uint64_t budget,
              const std::string& format, std::ostream& out) {
  json j;
  int code = kOk;
  std::string summary;
  if (mode == "prsat") {
    SaturationOptions opts;
    opts.search.budget = budget;
    const auto v = is_properly_rainbow_saturated(g, h, opts);
    j = parsed(verdict_to_json(g, v));
    code = v.status == Status::kEstablished ? kOk : v.status == Status::kRefuted ? kNegative : kUndecided;
    summary = std::string(to_string(v.status));
  } else {
    const auto r = mode == "sat" ? is_saturated(g, h) : is_semi_saturated(g, h);
    j = parsed(saturation_to_json(r));
    code = r.holds ? kOk : kNegative;
    summary = r.holds ? "true" : "false";
  }
  j["mode"] = mode;
  j["pattern"] = h.to_string();
  j["graph6"] = to_graph6(g);
  if (format == "text") {
    out << mode << '(' << h.to_string() << ") on " << to_graph6(g) << ": " << summary << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return code;
}

int do_oracle(int n, const PatternSpec& h, Quantity q, const CensusOptions& opts,
              const std::string& format, std::ostream& out) {
  const CensusRecord r = run_census(n, h, q, opts);
  if (format == "json") {
    out << to_json(r) << '\n';
  } else {
    out << to_string(q) << '(' << n << ", " << h.to_string() << ") = ";
    if (r.status == CensusStatus::kExact) {
      out << *r.value << '\n';
    } else if (r.status == CensusStatus::kNone) {
      out << "none\n";
    } else {
      out << "unknown, at least " << r.lower_bound;
      if (r.upper_bound) out << ", at most " << *r.upper_bound;
      out << '\n';
    }
    out << "status: " << to_string(r.status) << '\n'
        << "witnesses: " << r.witnesses.size() << (r.witnesses_complete ? "" : " (incomplete)") << '\n';
    for (const auto& w : r.witnesses) out << "  " << w.bytes << '\n';
    out << "graphs examined: " << r.total_graphs_examined << '\n'
        << "nodes used: " << r.nodes_used << '\n';
    if (r.unknown_classes > 0) out << "undecided classes: " << r.unknown_classes << '\n';
  }
  return r.status == CensusStatus::kUnknown ? kUndecided : kOk;
}

std::string_view row_status(RowStatus s) {
  switch (s) {
    case RowStatus::kPass: return "PASS";
    case RowStatus::kFail: return "FAIL";
    case RowStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

int do_reproduce(const std::string& suite, const ReproConfig& cfg, bool allow_unknown,
                 const std::string& format, std::ostream& out) {
  const auto rows = run_suite(suite, cfg);
  bool ok = true;
  for (const auto& r : rows) {
    if (r.status == RowStatus::kFail) ok = false;
    if (r.status == RowStatus::kUnknown && !allow_unknown) ok = false;
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"claim", r.claim}, {"expected", r.expected}, {"computed", r.computed},
                     {"status", std::string(row_status(r.status))}});
    out << json{{"suite", suite}, {"rows", arr}, {"ok", ok}}.dump() << '\n';
  } else {
    std::size_t w_claim = 5, w_exp = 8;
    for (const auto& r : rows) {
      w_claim = std::max(w_claim, r.claim.size());
      w_exp = std::max(w_exp, r.expected.size());
    }
    out << std::left << std::setw(8) << "status" << std::setw(w_claim + 2) << "claim"
        << std::setw(w_exp + 2) << "expected" << "computed" << '\n';
    for (const auto& r : rows)
      out << std::setw(8) << row_status(r.status) << std::setw(w_claim + 2) << r.claim
          << std::setw(w_exp + 2) << r.expected << r.computed << '\n';
    out << (ok ? "all rows pass" : "some rows did not pass") << '\n';
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Properly rainbow saturation toolkit", "rslab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::uint64_t budget = 0;
  int threads = 1;
  std::string format = "text";
  std::string cache_dir;
  bool force = false;
  const auto formats = CLI::IsMember({"text", "json", "graph6", "dot"});

  auto* construct = app.add_subcommand("construct", "build a graph from one of the constructions");
  ConstructArgs ca;
  construct->add_option("family", ca.family, "folded-cube, broom-gadget, broom-saturated, caterpillar, star-forest, double-star")
      ->required()
      ->check(CLI::IsMember({"folded-cube", "broom-gadget", "broom-saturated", "caterpillar",
                             "star-forest", "double-star"}));
  construct->add_option("--ell", ca.ell, "folded cube / spine parameter");
  construct->add_option("--m", ca.m, "broom pendant count");
  construct->add_option("--n", ca.n, "order");
  construct->add_option("--k", ca.k, "tree order / star size");
  construct->add_option("--t", ca.t, "double star t");
  construct->add_option("--s", ca.s, "double star s");
  construct->add_option("--variant", ca.variant, "double star variant")->check(CLI::IsMember({"sat", "prsat"}));
  construct->add_option("--format", format, "text, json, graph6 or dot")->check(formats);
  construct->add_option("--budget", budget, "per-graph budget for a remainder census");
  construct->add_option("--threads", threads, "census worker threads")->check(CLI::PositiveNumber);
  construct->add_option("--cache-dir", cache_dir, "census cache directory (default $RSLAB_CACHE)");

  auto* verify = app.add_subcommand("verify", "check a graph for sat, ssat or prsat");
  std::string input, graph_text, pattern_text, mode = "prsat";
  verify->add_option("input", input, "graph file (graph6 or JSON), '-' for stdin");
  verify->add_option("--graph", graph_text, "graph given inline as graph6 or JSON");
  verify->add_option("--pattern", pattern_text, "pattern: P5, K1,4, B4,2, T5star, S3,2, cat:..., g6:..., @file")->required();
  verify->add_option("--mode", mode, "sat, ssat or prsat")->check(CLI::IsMember({"sat", "ssat", "prsat"}));
  verify->add_option("--budget", budget, "colouring search node budget per sub-search");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* oracle = app.add_subcommand("oracle", "brute-force census of sat, ssat or prsat");
  int n = 0;
  std::string quantity = "prsat";
  oracle->add_option("--n", n, "order")->required();
  oracle->add_option("--pattern", pattern_text, "pattern")->required();
  oracle->add_option("--quantity", quantity, "sat, ssat or prsat")->check(CLI::IsMember({"sat", "ssat", "prsat"}));
  oracle->add_option("--budget", budget, "per-graph colouring budget");
  oracle->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  oracle->add_option("--cache-dir", cache_dir, "cache directory (default $RSLAB_CACHE)");
  oracle->add_flag("--force", force, "recompute and overwrite a cached record");
  oracle->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* reproduce = app.add_subcommand("reproduce", "regenerate a table of checked claims");
  std::string suite;
  int ell = 4;
  bool allow_unknown = false;
  reproduce->add_option("suite", suite, "formulas, constructions, lemma4 or census")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  reproduce->add_option("--ell", ell, "folded cube parameter for lemma4");
  reproduce->add_option("--budget", budget, "node budget for standalone searches");
  reproduce->add_option("--threads", threads, "census worker threads")->check(CLI::PositiveNumber);
  reproduce->add_option("--cache-dir", cache_dir, "census cache directory (default $RSLAB_CACHE)");
  reproduce->add_flag("--force", force, "recompute cached census records");
  reproduce->add_flag("--allow-unknown", allow_unknown, "do not fail on undecided rows");
  reproduce->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  CensusOptions census;
  census.threads = threads;
  census.cache_dir = cache_dir;
  census.force = force;

  try {
    if (*construct) {
      if (budget > 0) census.budget = budget;
      return do_construct(ca, format, census, out);
    }
    if (*verify) {
      if (verify->count("--format") == 0) format = "json";
      std::string text;
      if (!graph_text.empty()) {
        text = graph_text;
      } else if (!input.empty()) {
        text = read_text(input);
      } else {
        throw Error(ErrorCode::kParseError, "verify needs an input file or --graph");
      }
      const Graph g = parse_graph(trim(text));
      return do_verify(g, load_pattern(pattern_text), mode,
                       budget > 0 ? budget : SearchOptions{}.budget, format, out);
    }
    if (*oracle) {
      // an explicit budget also caps the escalation pass
      if (budget > 0) census.budget = census.escalation_budget = budget;
      return do_oracle(n, load_pattern(pattern_text), parse_quantity(quantity), census, format, out);
    }
    ReproConfig cfg;
    cfg.census = census;
    cfg.ell = ell;
    if (budget > 0) cfg.budget = budget;
    return do_reproduce(suite, cfg, allow_unknown, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  }
}

}  // namespace rslab::cli
