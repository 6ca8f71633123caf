#pragma once

#include <vector>

#include "bposet/poset.hpp"

namespace bposet {

// Rank m+n B-poset: P1 in the middle block, P2 on [m+1,m+n] and its mirror on [-(m+n),-(m+1)].
BnPoset disjoint_union_B(const BnPoset& P1, const FinitePoset& P2);
// Type-A disjoint union on [m+n].
FinitePoset disjoint_union_A(const FinitePoset& P1, const FinitePoset& P2);

SignedPermutation bullet_B(const SignedPermutation& s, const Permutation& r);

// delta with 0 < d^{-1}(1) < ... < d^{-1}(m) and d^{-1}(m+1) < ... < d^{-1}(m+n), lexicographic.
std::vector<SignedPermutation> min_coset_reps(int m, int n);
bool is_min_coset_rep(const SignedPermutation& d, int m);

std::vector<SignedPermutation> shuffle_B_coset(const SignedPermutation& s, const Permutation& r);
std::vector<SignedPermutation> shuffle_B_coset(const std::vector<SignedPermutation>& S, const std::vector<Permutation>& R);

// g = (g1 .B g2) * delta with delta a minimal coset representative.
struct CosetFactorization {
  SignedPermutation g1;
  Permutation g2;
  SignedPermutation delta;
};
CosetFactorization factor_coset(const SignedPermutation& g, int m);

}  // namespace bposet
