#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fo2/bitset.hpp"
#include "fo2/monoid.hpp"

namespace fo2 {

/// One letter of a transduced word: (image of the strict prefix, letter,
/// image of the strict suffix).
struct TransducedLetter {
  int prefix_image;
  char letter;
  int suffix_image;
  friend bool operator==(const TransducedLetter&, const TransducedLetter&) = default;
};
using TransducedWord = std::vector<TransducedLetter>;

/// The length-preserving transduction tau_psi; boundary letters take the
/// identity of N as the missing context image.
TransducedWord transduce(const Morphism& psi, std::string_view word);

/// The submonoid of M x N generated by the letter image pairs, with one
/// shortest-found witness word per pair. The fiber of n collects every m
/// with (m, n) present; these are exactly the phi-images available as left
/// or right contexts for words mapping to n under psi.
class PairClosure {
 public:
  /// Both morphisms must share one source alphabet.
  PairClosure(Morphism phi, Morphism psi);

  const Morphism& phi() const { return phi_; }
  const Morphism& psi() const { return psi_; }
  const FiniteMonoid& m() const { return phi_.target(); }
  const FiniteMonoid& n() const { return psi_.target(); }

  int size() const { return static_cast<int>(pairs_.size()); }
  int m_of(int index) const { return pairs_[index].first; }
  int n_of(int index) const { return pairs_[index].second; }
  const std::string& witness(int index) const { return witnesses_[index]; }
  /// -1 when the pair is not realized by any word.
  int index_of(int m, int n) const;
  /// Sorted phi-images paired with n.
  const std::vector<int>& fiber(int n) const { return fibers_[n]; }

 private:
  Morphism phi_;
  Morphism psi_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::string> witnesses_;
  std::vector<int> pair_index_;         // (m * |N| + n) -> index or -1
  std::vector<std::vector<int>> fibers_;
};

/// Object of the kernel category: a pair of elements of N.
struct KernelObject {
  int n1;
  int n2;
  friend bool operator==(const KernelObject&, const KernelObject&) = default;
};

/// Arrow-class equivalence decided through the finite context sets: m1 and
/// m2 are identified when c1*m1*c2 = c1*m2*c2 for every c1 in fiber(src.n1)
/// and c2 in fiber(tgt.n2). Throws InconsistentArrowError when either
/// element is not realized as an arrow from src to tgt.
bool arrows_equivalent(const PairClosure& pc, KernelObject src, KernelObject tgt,
                       int m1, int m2);

/// The loop monoid at one object, together with the quotient data mapping
/// loop-realizable elements of M onto base elements.
struct BaseMonoid {
  FiniteMonoid monoid;
  KernelObject at;
  std::vector<int> class_of_m;            // |M| entries; -1 = not a loop here
  std::vector<int> representative_m;      // class -> representative in M
  std::vector<std::string> representative_witness;
};

/// Builds the base monoid at (P, S); the quotient product is verified to be
/// well defined over all candidate pairs (IllDefinedProductError otherwise,
/// which would indicate a bug).
BaseMonoid base_monoid(const PairClosure& pc, int P, int S);

/// Arrow classes between one ordered object pair.
struct ArrowClasses {
  KernelObject src;
  KernelObject tgt;
  std::vector<int> representative_m;
  std::vector<std::string> representative_witness;
  int count() const { return static_cast<int>(representative_m.size()); }
};

/// Complete finite presentation of the kernel category: base monoids at all
/// |N|^2 objects plus the arrow classes of every nonempty hom set.
struct KernelCategory {
  int n_size = 0;
  std::vector<BaseMonoid> bases;     // indexed n1 * n_size + n2
  std::vector<ArrowClasses> arrows;  // sorted by (src, tgt), nonempty only
};

/// Throws BudgetExceededError when |N|^2 exceeds the object budget.
KernelCategory kernel_category(const PairClosure& pc, int object_budget = 4096);

/// Checks that composing representatives then classifying agrees with
/// classifying first, over all consecutive arrow pairs. Returns the number
/// of composition pairs checked; throws IllDefinedProductError on mismatch.
long long validate_composition(const KernelCategory& kc, const PairClosure& pc);

/// The constructive witness behind the local-global theorem: the powerset
/// monoid over N x N joined with every base monoid, and the homomorphism h
/// mapping a transduced letter (P, a, S) to the loop class of `a` at the
/// object (P, S) when it is one, and to the identity otherwise.
class LocalGlobalWitness {
 public:
  explicit LocalGlobalWitness(const PairClosure& pc);

  /// Value of h on a transduced word, as (visited pair set, one base
  /// element per object).
  struct HValue {
    Bitset visited;
    std::vector<int> base_parts;
    friend bool operator==(const HValue&, const HValue&) = default;
  };
  HValue h_of(const TransducedWord& tw) const;

  /// Whether "psi agrees and h after tau_psi agrees implies phi agrees"
  /// holds for this concrete pair of words.
  bool factorization_check(std::string_view w, std::string_view w_prime) const;

  /// Explicit table for the submonoid of the witness monoid generated by
  /// the h-images of all letters of N x A x N, plus the generator map
  /// sigma -> element indexed by (n1 * |A| + letter) * |N| + n2. The
  /// powerset component makes this explode quickly, hence the budget.
  struct Table {
    FiniteMonoid monoid;
    std::vector<int> letter_image;
  };
  Table tabulate(int size_budget = 50'000) const;

  const BaseMonoid& base_at(int P, int S) const { return bases_[P * n_size_ + S]; }
  int n_size() const { return n_size_; }

 private:
  int h_letter_part(int object, const TransducedLetter& sigma) const;

  Morphism phi_;
  Morphism psi_;
  int n_size_;
  std::vector<BaseMonoid> bases_;
};

LocalGlobalWitness local_global_witness(const PairClosure& pc);

}  // namespace fo2
