#include "rslab/pattern.hpp"

#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "rslab/error.hpp"
#include "rslab/graph_io.hpp"

namespace rslab {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidParameter, message);
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError,
                "expected an integer in pattern '" + std::string(context) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view context) {
  std::vector<int> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma), context));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

PatternSpec PatternSpec::path(int k) {
  if (k < 2) invalid("path P_k needs k >= 2");
  return {PatternKind::kPath, {k}};
}

PatternSpec PatternSpec::star(int k) {
  if (k < 1) invalid("star K_{1,k} needs k >= 1");
  return {PatternKind::kStar, {k}};
}

PatternSpec PatternSpec::broom(int k, int m) {
  if (k < 1 || m < 1) invalid("broom B_{k,m} needs k, m >= 1");
  return {PatternKind::kBroom, {k, m}};
}

PatternSpec PatternSpec::subdivided_star(int k) {
  if (k < 4) invalid("subdivided star T_k^* needs k >= 4");
  return {PatternKind::kSubdividedStar, {k}};
}

PatternSpec PatternSpec::double_star(int t, int s) {
  if (t < 0 || s < 0) invalid("double star S_{t+1,s+1} needs t, s >= 0");
  return {PatternKind::kDoubleStar, {t, s}};
}

PatternSpec PatternSpec::caterpillar(std::vector<int> leaves) {
  if (leaves.empty()) invalid("caterpillar needs a nonempty spine");
  for (int c : leaves) {
    if (c < 0) invalid("caterpillar leaf counts must be non-negative");
  }
  if (leaves.size() == 1 && leaves[0] == 0) invalid("caterpillar would be K_1");
  return {PatternKind::kCaterpillar, std::move(leaves)};
}

PatternSpec PatternSpec::explicit_graph(const Graph& g) {
  if (g.size() == 0) invalid("explicit pattern needs at least one edge");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      invalid("explicit pattern has isolated vertex " + std::to_string(v));
    }
  }
  PatternSpec p(PatternKind::kExplicit, {});
  p.graph_ = g;
  return p;
}

PatternSpec PatternSpec::parse(std::string_view text) {
  const std::string ctx(text);
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty pattern");
  if (text.starts_with("g6:")) {
    return explicit_graph(from_graph6(text.substr(3)));
  }
  if (text.starts_with("cat:")) {
    std::string_view body = text.substr(4);
    std::optional<int> spine;
    std::vector<int> leaves;
    bool have_leaves = false;
    while (!body.empty()) {
      auto semi = body.find(';');
      std::string_view item = body.substr(0, semi);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorCode::kParseError, "caterpillar fields are key=value: " + ctx);
      }
      std::string_view key = item.substr(0, eq);
      std::string_view value = item.substr(eq + 1);
      if (key == "l" || key == "ell" || key == "\xE2\x84\x93") {
        spine = parse_int(value, ctx);
      } else if (key == "leaves") {
        leaves = parse_int_list(value, ctx);
        have_leaves = true;
      } else {
        throw Error(ErrorCode::kParseError, "unknown caterpillar field in " + ctx);
      }
      if (semi == std::string_view::npos) break;
      body.remove_prefix(semi + 1);
    }
    if (!have_leaves) throw Error(ErrorCode::kParseError, "caterpillar needs leaves=: " + ctx);
    if (spine && *spine != static_cast<int>(leaves.size())) {
      invalid("caterpillar spine length does not match leaves list: " + ctx);
    }
    return caterpillar(std::move(leaves));
  }
  if (text.size() >= 5 && text.front() == 'T' && text.ends_with("star")) {
    return subdivided_star(parse_int(text.substr(1, text.size() - 5), ctx));
  }
  const char head = text.front();
  std::string_view rest = text.substr(1);
  switch (head) {
    case 'P':
      return path(parse_int(rest, ctx));
    case 'K': {
      auto xs = parse_int_list(rest, ctx);
      if (xs.size() != 2 || xs[0] != 1) {
        throw Error(ErrorCode::kParseError, "stars are written K1,k: " + ctx);
      }
      return star(xs[1]);
    }
    case 'B': {
      auto xs = parse_int_list(rest, ctx);
      if (xs.size() != 2) throw Error(ErrorCode::kParseError, "brooms are written Bk,m: " + ctx);
      return broom(xs[0], xs[1]);
    }
    case 'S': {
      auto xs = parse_int_list(rest, ctx);
      if (xs.size() != 2) {
        throw Error(ErrorCode::kParseError, "double stars are written Sa,b: " + ctx);
      }
      return double_star(xs[0] - 1, xs[1] - 1);
    }
    default:
      break;
  }
  throw Error(ErrorCode::kParseError, "unrecognised pattern '" + ctx + "'");
}

int PatternSpec::vertex_count() const {
  switch (kind_) {
    case PatternKind::kPath: return params_[0];
    case PatternKind::kStar: return params_[0] + 1;
    case PatternKind::kBroom: return params_[0] + params_[1];
    case PatternKind::kSubdividedStar: return params_[0];
    case PatternKind::kDoubleStar: return params_[0] + params_[1] + 2;
    case PatternKind::kCaterpillar:
      return static_cast<int>(params_.size()) +
             std::accumulate(params_.begin(), params_.end(), 0);
    case PatternKind::kExplicit: return graph_.order();
  }
  return 0;
}

Graph PatternSpec::realize() const {
  if (kind_ == PatternKind::kExplicit) return graph_;
  const int n = vertex_count();
  std::vector<Edge> e;
  switch (kind_) {
    case PatternKind::kPath:
      for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
      break;
    case PatternKind::kStar:
      for (Vertex v = 1; v < n; ++v) e.push_back({0, v});
      break;
    case PatternKind::kBroom: {
      const int k = params_[0];
      for (Vertex v = 0; v + 1 < k; ++v) e.push_back({v, v + 1});
      for (Vertex v = k; v < n; ++v) e.push_back({0, v});
      break;
    }
    case PatternKind::kSubdividedStar: {
      const int k = params_[0];
      for (Vertex v = 1; v <= k - 2; ++v) e.push_back({0, v});
      e.push_back({1, k - 1});
      break;
    }
    case PatternKind::kDoubleStar: {
      const int t = params_[0];
      e.push_back({0, 1});
      for (Vertex v = 2; v < t + 2; ++v) e.push_back({0, v});
      for (Vertex v = t + 2; v < n; ++v) e.push_back({1, v});
      break;
    }
    case PatternKind::kCaterpillar: {
      const int spine = static_cast<int>(params_.size());
      for (Vertex v = 0; v + 1 < spine; ++v) e.push_back({v, v + 1});
      Vertex next = spine;
      for (Vertex v = 0; v < spine; ++v)
        for (int i = 0; i < params_[v]; ++i) e.push_back({v, next++});
      break;
    }
    case PatternKind::kExplicit:
      break;
  }
  return Graph::build(n, e);
}

std::string PatternSpec::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case PatternKind::kPath: os << 'P' << params_[0]; break;
    case PatternKind::kStar: os << "K1," << params_[0]; break;
    case PatternKind::kBroom: os << 'B' << params_[0] << ',' << params_[1]; break;
    case PatternKind::kSubdividedStar: os << 'T' << params_[0] << "star"; break;
    case PatternKind::kDoubleStar: os << 'S' << params_[0] + 1 << ',' << params_[1] + 1; break;
    case PatternKind::kCaterpillar:
      os << "cat:\xE2\x84\x93=" << params_.size() << ";leaves=";
      for (std::size_t i = 0; i < params_.size(); ++i) os << (i ? "," : "") << params_[i];
      break;
    case PatternKind::kExplicit: os << "g6:" << to_graph6(graph_); break;
  }
  return os.str();
}

}  // namespace rslab
