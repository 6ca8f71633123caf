#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bposet/hecke.hpp"
#include "bposet/restriction.hpp"

namespace bposet {

// theta: pibar -> -(pibar + 1). chi: dual module, pibar -> pibar^T, labels w -> w0 w.
// phi: type A reindexes i -> n - i and relabels w -> w0 w w0; identity in type B.
HeckeModule twist_theta(const HeckeModule& M);
HeckeModule twist_chi(const HeckeModule& M);
HeckeModule twist_phi(const HeckeModule& M);

// Outer tensor product of a type-B module of rank m and a type-A module of rank k,
// as a module over the parabolic subalgebra of H^B_{m+k}(0) without generator m.
HeckeModule tensor_BA(const HeckeModule& X, const HeckeModule& Y);
HeckeModule direct_sum(const std::vector<HeckeModule>& parts);
// Forget generator m of a type-B module.
HeckeModule restrict_module(const HeckeModule& M, int m);
// Rows and columns of the chosen basis elements only.
HeckeModule subquotient(const HeckeModule& M, const std::vector<int>& basis_indices);

struct InducedModule {
  HeckeModule module;
  int dim_x = 0, dim_y = 0;
  std::vector<SignedPermutation> deltas;  // minimal coset representatives
  int index(int delta, int x, int y) const { return (delta * dim_x + x) * dim_y + y; }
};

// General induction (X (x) Y) tensor_{H_J} H^B_{m+n}(0) on the basis x (x) y (x) pibar_delta.
InducedModule tensor_induce(const HeckeModule& X, const HeckeModule& Y);

struct InductionResult {
  HeckeModule module;                // M^B (or sfM^B) of the disjoint union
  InducedModule induced;
  std::vector<int> bijection;        // induced basis index -> index of (g1 . g2) delta
  DenseMatrixQ iso_map;              // (g1 (x) g2) (x) pibar_delta -> (g1 . g2) . pibar_delta
};

// Both inputs must carry their posets and share the Bar or Pi flavor.
InductionResult induce(const HeckeModule& X, const HeckeModule& Y);

struct RestrictionResult {
  std::vector<RestrictionSummand> summands;
  std::vector<HeckeModule> factors;  // one tensor module per summand
  HeckeModule restricted;
  HeckeModule sum;
  std::vector<int> f_tilde;          // basis index of M -> index in sum
};

RestrictionResult restrict(const HeckeModule& M, int m);

enum class CertStatus { Certified, NotIsomorphic, Inconclusive, Failed };
std::string to_string(CertStatus s);

struct IsoCertificate {
  CertStatus status = CertStatus::Failed;
  DenseMatrixQ map;  // rows: basis of M written in the basis of N
  std::string detail;
  bool ok() const { return status == CertStatus::Certified; }
};

IsoCertificate certify_with_map(const HeckeModule& M, const HeckeModule& N, const DenseMatrixQ& X);
IsoCertificate certify_isomorphism(const HeckeModule& M, const HeckeModule& N,
                                   const std::optional<DenseMatrixQ>& X = std::nullopt, unsigned seed = 0);

// Row i has a single entry sign[i] in column target[i].
DenseMatrixQ signed_permutation_matrix(const std::vector<int>& target, const std::vector<int>& sign = {});

// Labelled basis map: each label of M goes to (label of N, sign).
DenseMatrixQ label_map(const HeckeModule& M, const HeckeModule& N,
                       const std::function<std::pair<std::vector<int>, int>(const std::vector<int>&)>& f);

// An isomorphism F: M -> N gives chi[M] -> chi[N] as (F^T)^{-1}.
DenseMatrixQ dual_map(const DenseMatrixQ& F);

// Ind(f (x) g) for the basis order of tensor_induce.
DenseMatrixQ induced_map(const DenseMatrixQ& f, const DenseMatrixQ& g, std::size_t num_deltas);

// w0 * w, in window form.
std::vector<int> left_w0(HeckeType t, const std::vector<int>& w);

}  // namespace bposet
