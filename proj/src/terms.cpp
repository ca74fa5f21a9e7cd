#include "fo2/terms.hpp"

#include <algorithm>
#include <cctype>

namespace fo2 {

Term Term::variable(int index) {
  if (index < 1) throw IndexOutOfRangeError("variable indices start at 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->var = index;
  return Term(std::move(node));
}

Term Term::concat(std::vector<Term> parts) {
  if (parts.empty()) throw IndexOutOfRangeError("empty concatenation");
  std::vector<Term> flat;
  for (auto& part : parts) {
    if (part.kind() == Kind::concat)
      flat.insert(flat.end(), part.parts().begin(), part.parts().end());
    else
      flat.push_back(std::move(part));
  }
  if (flat.size() == 1) return flat.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::concat;
  node->parts = std::move(flat);
  return Term(std::move(node));
}

Term Term::omega(Term body) {
  if (body.kind() == Kind::omega) return body;
  auto node = std::make_shared<Node>();
  node->kind = Kind::omega;
  node->parts.push_back(std::move(body));
  return Term(std::move(node));
}

bool Term::structurally_equal(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::variable:
      return a.var_index() == b.var_index();
    case Kind::omega:
      return a.body() == b.body();
    case Kind::concat: {
      if (a.parts().size() != b.parts().size()) return false;
      for (std::size_t i = 0; i < a.parts().size(); ++i)
        if (!(a.parts()[i] == b.parts()[i])) return false;
      return true;
    }
  }
  return false;
}

void Term::collect_variables(std::vector<int>& out) const {
  switch (kind()) {
    case Kind::variable:
      out.push_back(var_index());
      break;
    default:
      for (const Term& part : parts()) part.collect_variables(out);
  }
}

std::vector<int> Term::variables() const {
  std::vector<int> out;
  collect_variables(out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::variable:
      return "x" + std::to_string(var_index());
    case Kind::omega:
      return "(" + body().to_string() + ")^w";
    case Kind::concat: {
      std::string out;
      for (const Term& part : parts()) {
        if (!out.empty()) out += ' ';
        out += part.to_string();
      }
      return out;
    }
  }
  return {};
}

std::string Identity::to_string() const {
  return left.to_string() + " = " + right.to_string();
}

std::vector<int> Identity::variables() const {
  std::vector<int> out = left.variables();
  std::vector<int> rhs = right.variables();
  out.insert(out.end(), rhs.begin(), rhs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = sequence();
    skip_space();
    if (pos_ < text_.size())
      throw ParseError("unexpected character", pos_ + 1);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    return pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == '(');
  }

  Term sequence() {
    std::vector<Term> factors;
    while (at_factor_start()) factors.push_back(factor());
    if (factors.empty()) {
      skip_space();
      throw ParseError("expected a term", pos_ + 1);
    }
    return Term::concat(std::move(factors));
  }

  Term factor() {
    skip_space();
    if (text_[pos_] == 'x') {
      std::size_t var_pos = pos_;
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        throw ParseError("expected digits after 'x'", var_pos + 1);
      long index;
      try {
        index = std::stol(std::string(text_.substr(start, pos_ - start)));
      } catch (const std::out_of_range&) {
        throw ParseError("variable index too large", var_pos + 1);
      }
      if (index < 1)
        throw ParseError("variable indices start at 1", var_pos + 1);
      if (index > 1'000'000)
        throw ParseError("variable index too large", var_pos + 1);
      return Term::variable(static_cast<int>(index));
    }
    // '('
    std::size_t open = pos_;
    ++pos_;
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unmatched '('", open + 1);
    Term inner = sequence();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')')
      throw ParseError("unmatched '('", open + 1);
    ++pos_;
    skip_space();
    if (pos_ + 1 >= text_.size() || text_[pos_] != '^' || text_[pos_ + 1] != 'w')
      throw ParseError("expected '^w' after ')'", pos_ + 1);
    pos_ += 2;
    return Term::omega(std::move(inner));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

Identity parse_identity(std::string_view line) {
  if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::size_t eq = line.find('=');
  if (eq == std::string_view::npos)
    throw ParseError("identity needs '='", line.size() + 1);
  if (line.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("identity has more than one '='", line.find('=', eq + 1) + 1);
  return Identity{parse_term(line.substr(0, eq)), parse_term(line.substr(eq + 1))};
}

std::vector<Identity> parse_identity_file(std::string_view text) {
  std::vector<Identity> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) out.push_back(parse_identity(line));
    begin = end + 1;
  }
  return out;
}

int eval_term(const Term& t, const FiniteMonoid& m, const Valuation& v) {
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = v.find(t.var_index());
      if (it == v.end()) throw UnboundVariableError(t.var_index());
      if (it->second < 0 || it->second >= m.size())
        throw IndexOutOfRangeError("valuation value out of range");
      return it->second;
    }
    case Term::Kind::omega:
      return m.omega(eval_term(t.body(), m, v));
    case Term::Kind::concat: {
      int acc = m.identity();
      for (const Term& part : t.parts()) acc = m.mul(acc, eval_term(part, m, v));
      return acc;
    }
  }
  throw IllDefinedProductError("unreachable term kind");
}

namespace {

// Post-order compiled form used by the exhaustive check. max_pos is the
// largest position (in the sorted variable list) a node depends on, so a
// node needs recomputation only when the odometer bumps at or below it.
struct CompiledNode {
  Term::Kind kind;
  int var_pos = -1;
  std::vector<int> kids;
  int max_pos = -1;
};

int compile_term(const Term& t, const std::vector<int>& var_positions,
                 std::vector<CompiledNode>& nodes) {
  CompiledNode node;
  node.kind = t.kind();
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = std::lower_bound(var_positions.begin(), var_positions.end(),
                                 t.var_index());
      node.var_pos = static_cast<int>(it - var_positions.begin());
      node.max_pos = node.var_pos;
      break;
    }
    case Term::Kind::omega: {
      int kid = compile_term(t.body(), var_positions, nodes);
      node.kids.push_back(kid);
      node.max_pos = nodes[kid].max_pos;
      break;
    }
    case Term::Kind::concat: {
      for (const Term& part : t.parts()) {
        int kid = compile_term(part, var_positions, nodes);
        node.kids.push_back(kid);
        node.max_pos = std::max(node.max_pos, nodes[kid].max_pos);
      }
      break;
    }
  }
  nodes.push_back(std::move(node));
  return static_cast<int>(nodes.size()) - 1;
}

}  // namespace

IdentityCheck check_identity(const FiniteMonoid& m, const Identity& id,
                             std::uint64_t valuation_budget) {
  const std::vector<int> vars = id.variables();
  const int k = static_cast<int>(vars.size());
  const int n = m.size();

  std::uint64_t needed = 1;
  for (int i = 0; i < k; ++i) {
    if (needed > valuation_budget / std::max(n, 1)) {
      needed = valuation_budget + 1;
      break;
    }
    needed *= static_cast<std::uint64_t>(n);
  }
  if (needed > valuation_budget)
    throw BudgetExceededError("check_identity: valuation space too large",
                              needed, valuation_budget);

  std::vector<CompiledNode> nodes;
  int left_root = compile_term(id.left, vars, nodes);
  int right_root = compile_term(id.right, vars, nodes);

  std::vector<int> values(nodes.size(), 0);
  std::vector<int> assignment(k, 0);

  auto recompute_from = [&](int from_pos) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const CompiledNode& node = nodes[i];
      if (node.max_pos < from_pos) continue;
      switch (node.kind) {
        case Term::Kind::variable:
          values[i] = assignment[node.var_pos];
          break;
        case Term::Kind::omega:
          values[i] = m.omega(values[node.kids[0]]);
          break;
        case Term::Kind::concat: {
          int acc = m.identity();
          for (int kid : node.kids) acc = m.mul(acc, values[kid]);
          values[i] = acc;
          break;
        }
      }
    }
  };

  recompute_from(0);
  for (;;) {
    if (values[left_root] != values[right_root]) {
      Valuation bad;
      for (int i = 0; i < k; ++i) bad[vars[i]] = assignment[i];
      return {false, std::move(bad)};
    }
    // Lexicographic successor: the last position is least significant.
    int pos = k - 1;
    while (pos >= 0 && assignment[pos] == n - 1) assignment[pos--] = 0;
    if (pos < 0) break;
    ++assignment[pos];
    recompute_from(pos);
  }
  return {true, std::nullopt};
}

Identity hierarchy_identity(int n) {
  if (n < 1) throw IndexOutOfRangeError("hierarchy level must be positive");
  Term u = Term::omega(Term::concat({Term::variable(1), Term::variable(2)}));
  Term v = Term::omega(Term::concat({Term::variable(2), Term::variable(1)}));
  for (int i = 1; i < n; ++i) {
    std::vector<Term> prefix_parts;
    for (int j = 1; j <= 2 * i + 1; ++j) prefix_parts.push_back(Term::variable(j));
    Term prefix = Term::omega(Term::concat(std::move(prefix_parts)));

    std::vector<Term> suffix_parts = {Term::variable(2 * i + 2)};
    for (int j = 1; j <= 2 * i; ++j) suffix_parts.push_back(Term::variable(j));
    Term suffix = Term::omega(Term::concat(std::move(suffix_parts)));

    u = Term::concat({prefix, u, suffix});
    v = Term::concat({prefix, v, suffix});
  }
  return Identity{std::move(u), std::move(v)};
}

const std::vector<Identity>& variety_identities(VarietyTag tag) {
  static const std::vector<Identity> j1 = {parse_identity("x1 x1 = x1"),
                                           parse_identity("x1 x2 = x2 x1")};
  static const std::vector<Identity> j = {
      parse_identity("(x1 x2)^w = (x2 x1)^w"),
      parse_identity("(x1)^w = x1 (x1)^w")};
  static const std::vector<Identity> da = {
      parse_identity("(x1 x2)^w (x2 x1)^w (x1 x2)^w = (x1 x2)^w"),
      parse_identity("(x1)^w = x1 (x1)^w")};
  static const std::vector<Identity> ap = {parse_identity("(x1)^w = x1 (x1)^w")};
  switch (tag) {
    case VarietyTag::J1: return j1;
    case VarietyTag::J: return j;
    case VarietyTag::DA: return da;
    case VarietyTag::Ap: return ap;
  }
  throw IndexOutOfRangeError("unknown variety tag");
}

bool variety_membership(const FiniteMonoid& m, VarietyTag tag,
                        std::uint64_t valuation_budget) {
  for (const Identity& id : variety_identities(tag))
    if (!check_identity(m, id, valuation_budget).holds) return false;
  return true;
}

std::optional<VarietyTag> variety_tag_from_name(std::string_view name) {
  if (name == "J1") return VarietyTag::J1;
  if (name == "J") return VarietyTag::J;
  if (name == "DA") return VarietyTag::DA;
  if (name == "Ap") return VarietyTag::Ap;
  return std::nullopt;
}

std::string variety_tag_name(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::J1: return "J1";
    case VarietyTag::J: return "J";
    case VarietyTag::DA: return "DA";
    case VarietyTag::Ap: return "Ap";
  }
  return "?";
}

}  // namespace fo2
