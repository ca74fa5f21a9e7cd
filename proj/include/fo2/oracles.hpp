#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fo2/kernel.hpp"
#include "fo2/language.hpp"
#include "fo2/simon.hpp"

/// Brute-force word-enumeration oracles. Deliberately slow: these quantify
/// over words where the fast paths quantify over monoid elements, and exist
/// to validate every algebraic shortcut. Enumeration order is always
/// length-lexicographic.
namespace fo2::slow {

/// All words over the alphabet of length <= max_len, length-lex order.
std::vector<std::string> enumerate_words(const std::string& alphabet, int max_len);

/// Partition of the words of length <= max_len by two-sided context
/// behavior, contexts also bounded by max_len. Classes are ordered by their
/// first member; members stay in length-lex order. The class count lower
/// bounds the syntactic monoid size and reaches it once max_len suffices.
std::vector<std::vector<std::string>> brute_syntactic_congruence(const Dfa& d,
                                                                 int max_len);

struct SimonClassCount {
  int count = 0;
  std::vector<std::string> representatives;  // first word of each class
  bool stabilized = false;  // count at max_len equals count at max_len - 1
};

/// Distinct subword classes over all words of length <= max_len.
SimonClassCount brute_simon_classes(const std::string& alphabet, int k, int max_len);

/// A suffix split z = prefix . z1 ... zq where the blocks share one letter
/// content that includes the required set.
struct Factorization {
  std::string prefix;
  std::vector<std::string> blocks;
  std::string content;   // common letter content of the blocks, sorted
  std::string required;  // the set B, sorted
};

/// Greedy right-to-left search: grow a suffix of z until it splits into q
/// blocks of equal letter content containing every letter of B. When
/// k_probe > 0 the subword-stability hypothesis (subwords of zb and z agree
/// up to length k_probe for every b in B) is checked first and failure
/// yields an empty optional without searching.
std::optional<Factorization> suffix_factorization(std::string_view z,
                                                  std::string_view B, int q,
                                                  int k_probe = 0);

/// The stability hypothesis above, checked via subword_class.
bool subword_stable(std::string_view z, std::string_view B, int k);

/// Quantifies the arrow-equivalence contexts over words: for every v, w of
/// length <= max_len with psi(v) = src.n1 and psi(w) = tgt.n2, the images
/// phi(v u w) and phi(v u' w) must agree.
bool brute_arrow_equivalence(const PairClosure& pc, KernelObject src,
                             KernelObject tgt, std::string_view u,
                             std::string_view u_prime, int max_len);

}  // namespace fo2::slow
