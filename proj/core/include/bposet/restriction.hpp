#pragma once

#include <vector>

#include "bposet/poset.hpp"

namespace bposet {

// Type-B lower subposets with 2m+1 elements, ordered by underlying set.
std::vector<FinitePoset> lower_subposets_B(const BnPoset& P, int m);
// Elements of P below some element of Q.
std::vector<int> down_closure(const BnPoset& P, const FinitePoset& Q);
// Upward-closed transversals of P minus the down-closure of Q, one element per missing absolute value.
std::vector<FinitePoset> upper_subposets(const BnPoset& P, const FinitePoset& Q);

BnPoset standardize_B(const FinitePoset& Q);
FinitePoset standardize_A(const FinitePoset& U);

SignedPermutation st_plus(const SignedPermutation& g, int m);
Permutation st_minus(const SignedPermutation& g, int m);

struct RestrictionImage {
  FinitePoset Q;
  FinitePoset U;
  SignedPermutation g1;
  Permutation g2;
};

RestrictionImage restriction_map(const BnPoset& P, const SignedPermutation& g, int m);
SignedPermutation conc(const FinitePoset& Q, const FinitePoset& U, const SignedPermutation& g1, const Permutation& g2);

struct RestrictionSummand {
  FinitePoset Q;
  FinitePoset U;
  BnPoset stQ;
  FinitePoset stU;
};

// All (Q, U) pairs with Q in LS^B(P;m) and U in upper(Q).
std::vector<RestrictionSummand> restriction_summands(const BnPoset& P, int m);

}  // namespace bposet
