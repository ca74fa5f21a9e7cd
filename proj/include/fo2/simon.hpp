#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fo2/monoid.hpp"

namespace fo2 {

/// Default cap on the number of elements a Simon quotient may reach.
inline constexpr int kDefaultQuotientBudget = 100'000;

/// Canonical element of A*/~k: the set of subwords of length <= k of some
/// word, kept as a sorted member list (always containing the empty word).
struct SubwordClass {
  std::string alphabet;  // sorted distinct letters
  int k = 0;
  std::vector<std::string> members;  // sorted length-lexicographically

  bool contains(std::string_view w) const;
  friend bool operator==(const SubwordClass&, const SubwordClass&) = default;
};

/// Length-lexicographic word order (shorter first, then byte-wise).
bool length_lex_less(std::string_view a, std::string_view b);

/// Subwords of w of length <= k, via the prefix recurrence
/// subwords(wa) = subwords(w) united with {ua : u in subwords(w), |u| < k}.
/// The alphabet is inferred from w unless given explicitly.
SubwordClass subword_class(std::string_view w, int k, std::string_view alphabet = {});

/// Same subwords of length <= k on both sides.
bool equivalent_k(std::string_view u, std::string_view v, int k);

/// The quotient monoid A*/~k with its projection morphism; elements are
/// named by a shortest preimage word ("1" for the empty word), the class of
/// the empty word is element 0. Throws BudgetExceededError (carrying the
/// partial element count) when the closure exceeds the budget.
Morphism simon_quotient(const std::string& alphabet, int k,
                        int size_budget = kDefaultQuotientBudget);

}  // namespace fo2
