#pragma once

#include <string>
#include <vector>

#include "fo2/monoid.hpp"

namespace fixtures {

/// One-element monoid.
inline fo2::FiniteMonoid trivial() {
  return fo2::FiniteMonoid::from_table({{0}}, 0, {"1"});
}

/// U1 = {1, 0} with 0 absorbing; index 0 is the identity, index 1 the zero.
inline fo2::FiniteMonoid u1() {
  return fo2::FiniteMonoid::from_table({{0, 1}, {1, 1}}, 0, {"1", "0"});
}

/// Cyclic group of order 3.
inline fo2::FiniteMonoid z3() {
  return fo2::FiniteMonoid::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0,
                                       {"1", "g", "g2"});
}

/// Syntactic monoid of a(a|b)*: {1, alpha, beta} with x*y = x for x != 1.
/// Index 1 is alpha (image of a), index 2 is beta (image of b).
inline fo2::FiniteMonoid first_letter_a() {
  return fo2::FiniteMonoid::from_table({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0,
                                       {"1", "a", "b"});
}

inline fo2::Morphism first_letter_a_morphism() {
  return fo2::Morphism("ab", first_letter_a(), {1, 2});
}

/// Syntactic monoid of (ab)*: {1, a, b, ab, ba, 0}. Aperiodic but not in DA.
inline fo2::FiniteMonoid ab_star() {
  return fo2::FiniteMonoid::from_table({{0, 1, 2, 3, 4, 5},
                                        {1, 5, 3, 5, 1, 5},
                                        {2, 4, 5, 2, 5, 5},
                                        {3, 1, 5, 3, 5, 5},
                                        {4, 5, 2, 5, 4, 5},
                                        {5, 5, 5, 5, 5, 5}},
                                       0, {"1", "a", "b", "ab", "ba", "0"});
}

inline fo2::Morphism u1_unary_morphism() {
  return fo2::Morphism("a", u1(), {1});
}

}  // namespace fixtures
