#pragma once

#include <vector>

#include "bposet/qsym.hpp"

namespace bposet {

template <class L, class R>
struct TensorTerm {
  L left;
  R right;
  Integer coeff;
  bool operator==(const TensorTerm&) const = default;
};

// Sorted by (left, right) with merged coefficients.
using Coproduct = std::vector<TensorTerm<CompositionA, CompositionA>>;
using Coaction = std::vector<TensorTerm<CompositionB, CompositionA>>;

// Shuffle product in the fundamental basis.
QSymElement product_A(const QSymElement& f, const QSymElement& g);
Coproduct coproduct_A(const QSymElement& f);

// Subwords, hat-word and standardization used by the type-B shuffle.
std::vector<int> restrict_word(const std::vector<int>& w, int lo, int hi);
std::vector<int> negative_positions(const std::vector<int>& w);
std::vector<int> hat_word(const std::vector<int>& w);
std::vector<int> standardize_word(const std::vector<int>& w);

// u shuffle^B v, lexicographic.
std::vector<SignedPermutation> shuffle_B_huang(const SignedPermutation& u, const Permutation& v);
std::vector<Permutation> shuffle_A(const Permutation& u, const Permutation& v);

// F^B_I (.)^B F_J expanded through explicit representatives.
QSymBElement action_odotB(const QSymBElement& f, const QSymElement& g);
QSymBElement action_odotB(const SignedPermutation& u, const Permutation& v);

Coaction coaction_deltaB(const QSymBElement& f);

}  // namespace bposet
