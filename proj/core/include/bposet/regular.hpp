#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bposet/poset.hpp"

namespace bposet {

// Intersection of the chains L_sigma over U.
BnPoset poset_of(const std::vector<SignedPermutation>& U);

bool is_distinguished(const BnPoset& P);
// Some x > 0 comparable to -x but not to 0.
std::optional<int> distinguished_witness(const BnPoset& P);

bool is_regular(const BnPoset& P);
// x < y < z violating the betweenness condition.
std::optional<std::array<int, 3>> regularity_witness(const BnPoset& P);

BnPoset distinguished_representative(const BnPoset& P);

std::pair<SignedPermutation, SignedPermutation> sigma_rho_endpoints(const BnPoset& P);

std::vector<SignedPermutation> convex_hull(const std::vector<SignedPermutation>& U);

}  // namespace bposet
