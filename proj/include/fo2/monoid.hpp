#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fo2/bitset.hpp"
#include "fo2/errors.hpp"

namespace fo2 {

/// Subset of the elements of a monoid.
using ElementSubset = Bitset;

/// A finite monoid given by its full multiplication table. Elements are
/// dense indices in [0, size); names, when present, are presentation only
/// and never participate in equality.
class FiniteMonoid {
 public:
  /// The one-element monoid.
  FiniteMonoid() : size_(1), table_{0}, identity_(0) {}

  /// Validates associativity and the identity law eagerly (O(size^3)).
  /// Throws IndexOutOfRangeError, NonAssociativeError or BadIdentityError.
  static FiniteMonoid from_table(const std::vector<std::vector<int>>& table,
                                 int identity,
                                 std::vector<std::string> names = {});

  /// Same as from_table but for a row-major flat table.
  static FiniteMonoid from_flat(int size, std::vector<int> flat, int identity,
                                std::vector<std::string> names = {});

  int size() const { return size_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * size_ + b]; }

  /// The unique idempotent a^k with k > 1; always exists in a finite monoid.
  int omega(int a) const;
  bool is_idempotent(int a) const { return mul(a, a) == a; }

  /// All idempotents in index order.
  std::vector<int> idempotents() const;

  /// Two-sided principal ideal MaM as a subset.
  ElementSubset ideal(int a) const;

  const std::vector<int>& flat_table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  bool has_names() const { return !names_.empty(); }
  std::string element_name(int a) const {
    return has_names() ? names_[a] : "#" + std::to_string(a);
  }
  void set_names(std::vector<std::string> names);

  /// Table equality; names are ignored.
  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.size_ == b.size_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  FiniteMonoid(int size, std::vector<int> table, int identity,
               std::vector<std::string> names)
      : size_(size), table_(std::move(table)), identity_(identity),
        names_(std::move(names)) {}

  int size_;
  std::vector<int> table_;  // row-major; row = left factor
  int identity_;
  std::vector<std::string> names_;
};

/// Map from letters to elements, extended to the unique homomorphism from
/// the free monoid over the alphabet.
class Morphism {
 public:
  /// Alphabet must be duplicate-free; images must be valid element indices.
  Morphism(std::string alphabet, FiniteMonoid target,
           std::vector<int> letter_images);

  const std::string& alphabet() const { return alphabet_; }
  const FiniteMonoid& target() const { return target_; }
  const std::vector<int>& letter_images() const { return images_; }

  bool defines(char letter) const { return lookup_[static_cast<unsigned char>(letter)] >= 0; }
  /// Throws UnknownLetterError.
  int image_of_letter(char letter) const;
  /// Product of letter images; the empty word maps to the identity.
  int apply(std::string_view word) const;

 private:
  std::string alphabet_;
  FiniteMonoid target_;
  std::vector<int> images_;
  std::array<int, 256> lookup_;  // letter byte -> image, -1 when undefined
};

/// True iff the letter images generate the whole target monoid.
bool is_surjective(const Morphism& m);

/// Compose a morphism with a monoid homomorphism given element-wise.
/// `hom[x]` must be a valid element of `target` for every x in m.target().
Morphism compose(const Morphism& m, const FiniteMonoid& target,
                 const std::vector<int>& hom);

/// Least submonoid containing the generators, with one shortest-found
/// product witness per member (a word over the generator elements; the
/// identity carries the empty witness).
struct ClosureResult {
  ElementSubset members;
  std::vector<std::vector<int>> witness;  // indexed by element; meaningful on members
  /// Members in breadth-first discovery order (identity first).
  std::vector<int> order;
};
ClosureResult closure(const FiniteMonoid& m, const ElementSubset& generators);

/// Direct product with projection maps back onto the factors.
struct DirectProduct {
  FiniteMonoid monoid;
  std::vector<int> first;   // element -> index in the left factor
  std::vector<int> second;  // element -> index in the right factor
  int pair_index(int a, int b) const { return a * second_size + b; }
  int second_size = 0;
};
DirectProduct direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

/// J-triviality via ideals: distinct elements generate distinct two-sided
/// principal ideals.
bool structural_j_check(const FiniteMonoid& m);

/// For every idempotent e, the submonoid M_e generated by
/// {m : e in MmM} must satisfy e M_e e = {e}.
bool structural_da_check(const FiniteMonoid& m);

/// Division: some submonoid of `n` maps onto `m` homomorphically. Oracle
/// only; exhaustive over closed subsets and generator assignments. Throws
/// BudgetExceededError when |n| exceeds the budget.
bool divides(const FiniteMonoid& m, const FiniteMonoid& n, int size_budget = 8);

}  // namespace fo2
