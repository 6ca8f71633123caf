#pragma once

#include <compare>
#include <vector>

#include "bposet/poset.hpp"
#include "bposet/qsym.hpp"

namespace bposet {

// Type-B linear extensions as signed permutations, lexicographic.
std::vector<SignedPermutation> linear_extensions_B(const BnPoset& P);
// Permutations g with i < j in P implying g^{-1}(i) < g^{-1}(j); P must live on [n].
std::vector<Permutation> linear_extensions_A(const FinitePoset& P);

// Odd integer labelling of [-n,n]; values[i + n] = f(i).
struct TypeBPartition {
  int n = 0;
  std::vector<int> values;
  int operator()(int i) const { return values[i + n]; }
  auto operator<=>(const TypeBPartition&) const = default;
};

bool is_p_partition_B(const BnPoset& P, const TypeBPartition& f);
std::vector<TypeBPartition> p_partitions_bounded(const BnPoset& P, int V);
// Sum of x_{|f(1)|}...x_{|f(n)|} over partitions with values in [-V,V].
TruncatedPoly kbp_from_partitions(const BnPoset& P, int V);
// Positive-valued type-A P-partitions bounded by V.
TruncatedPoly kp_from_partitions(const FinitePoset& P, int V);

QSymBElement kbp(const BnPoset& P);
QSymElement kp(const FinitePoset& P);

// Ordered pairs (u,v) with u below v in one extension and above it in another.
std::vector<Relation> incB(const BnPoset& P);
BnPoset extend_pair(const BnPoset& P, int u, int v);

}  // namespace bposet
