#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fo2/monoid.hpp"

namespace fo2 {

/// Default cap on the number of valuations enumerated by check_identity.
inline constexpr std::uint64_t kDefaultValuationBudget = 1'000'000'000;

/// An omega-term: a tree built from variables x1, x2, ... by concatenation
/// and the unary omega power. Canonical by construction: concatenations are
/// flattened and nested omega powers collapsed, so structural equality is
/// term equivalence under the usual laws.
class Term {
 public:
  enum class Kind { variable, concat, omega };

  static Term variable(int index);
  /// Flattens nested concatenations; a single part is returned unchanged.
  static Term concat(std::vector<Term> parts);
  /// Collapses (t^w)^w to t^w.
  static Term omega(Term body);

  Kind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  const std::vector<Term>& parts() const { return node_->parts; }
  const Term& body() const { return node_->parts.front(); }

  /// Distinct variable indices, sorted ascending.
  std::vector<int> variables() const;
  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.node_ == b.node_ || structurally_equal(a, b);
  }

 private:
  struct Node {
    Kind kind;
    int var = 0;
    std::vector<Term> parts;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool structurally_equal(const Term& a, const Term& b);
  void collect_variables(std::vector<int>& out) const;

  std::shared_ptr<const Node> node_;
};

/// A formal equation between two terms.
struct Identity {
  Term left;
  Term right;
  std::string to_string() const;
  /// Distinct variables of both sides, sorted ascending.
  std::vector<int> variables() const;
};

/// Assignment of monoid elements to variable indices.
using Valuation = std::map<int, int>;

/// Grammar: term := factor+ ; factor := var | "(" term ")" "^w" ;
/// var := "x" digits (indices start at 1). Whitespace separates factors.
Term parse_term(std::string_view text);

/// One line of the form "term = term"; a trailing "#..." comment is ignored.
Identity parse_identity(std::string_view line);

/// Identity file: one identity per line; "#" comments and blank lines.
std::vector<Identity> parse_identity_file(std::string_view text);

/// Recursive evaluation; omega powers use FiniteMonoid::omega.
int eval_term(const Term& t, const FiniteMonoid& m, const Valuation& v);

struct IdentityCheck {
  bool holds;
  /// Lexicographically first failing valuation, in variable-index order.
  std::optional<Valuation> counterexample;
};

/// Exhaustive check over all |M|^(#variables) valuations. Throws
/// BudgetExceededError before starting when that count exceeds the budget.
IdentityCheck check_identity(const FiniteMonoid& m, const Identity& id,
                             std::uint64_t valuation_budget = kDefaultValuationBudget);

/// The pair (u_n, v_n): u_1 = (x1 x2)^w, v_1 = (x2 x1)^w, and
///   u_{n+1} = (x1...x_{2n+1})^w u_n (x_{2n+2} x1...x_{2n})^w,
/// likewise for v. Uses exactly the variables x1..x_{2n}.
Identity hierarchy_identity(int n);

enum class VarietyTag { J1, J, DA, Ap };

/// Defining identities for the tag.
const std::vector<Identity>& variety_identities(VarietyTag tag);

/// Conjunction of check_identity over the tag's identity set.
bool variety_membership(const FiniteMonoid& m, VarietyTag tag,
                        std::uint64_t valuation_budget = kDefaultValuationBudget);

std::optional<VarietyTag> variety_tag_from_name(std::string_view name);
std::string variety_tag_name(VarietyTag tag);

}  // namespace fo2
