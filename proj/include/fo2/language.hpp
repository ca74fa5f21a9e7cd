#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fo2/bitset.hpp"
#include "fo2/monoid.hpp"

namespace fo2 {

/// Deterministic complete automaton. delta[state][letter_index] is total.
struct Dfa {
  std::string alphabet;  // ordered letters
  int state_count = 0;
  int initial = 0;
  Bitset accepting;      // universe = state_count
  std::vector<std::vector<int>> delta;

  int step(int state, char letter) const;
  bool accepts(std::string_view word) const;
};

/// Throws IndexOutOfRangeError / EmptyAlphabetError on malformed data.
void validate(const Dfa& d);

/// Compile the tiny regex dialect (literals, concatenation, "|", "*", "+",
/// "?", parentheses, "()" or the two-byte "ε" for the empty word) into the
/// minimal complete DFA with canonical BFS state numbering. The alphabet is
/// inferred from the literals unless `declared_alphabet` is nonempty.
Dfa compile_language(std::string_view regex, std::string_view declared_alphabet = {});

/// Re-minimize and canonicalize an explicit DFA.
Dfa compile_language(const Dfa& d);

/// A language presented by a surjective morphism onto its syntactic monoid
/// together with the accepting element set.
struct RecognizedLanguage {
  Morphism morphism;
  ElementSubset accepting;
  const FiniteMonoid& monoid() const { return morphism.target(); }
};

/// Transition monoid of the minimal complete DFA (re-minimizes first);
/// elements are numbered by BFS from the identity transformation, letters
/// in alphabet order, and named by a shortest preimage word ("1" for the
/// empty word).
RecognizedLanguage syntactic_monoid(const Dfa& d);

/// Membership through the morphism: apply and test the accepting set.
bool recognizes(const RecognizedLanguage& r, std::string_view word);

}  // namespace fo2
