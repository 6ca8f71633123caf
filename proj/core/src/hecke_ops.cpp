#include "bposet/hecke_ops.hpp"

#include <algorithm>
#include <random>

#include "bposet/errors.hpp"
#include "bposet/surgery.hpp"

namespace bposet {

namespace {

std::string wrap(const std::string& f, const HeckeModule& M) { return f + "[" + M.name() + "]"; }

void require_full(const HeckeModule& M, HeckeType t, const char* who) {
  if (M.type() != t) throw InvalidInput(std::string(who) + ": wrong module type");
  if (M.generators() != all_generators(t, M.rank()))
    throw InvalidInput(std::string(who) + ": module must carry every generator");
}

}  // namespace

std::vector<int> left_w0(HeckeType t, const std::vector<int>& w) {
  std::vector<int> r(w);
  const int n = static_cast<int>(w.size());
  for (int& x : r) x = t == HeckeType::B ? -x : n + 1 - x;
  return r;
}

HeckeModule twist_theta(const HeckeModule& M) {
  std::vector<SparseMatrix> acts;
  for (const auto& A : M.actions()) acts.push_back(-(A + SparseMatrix::identity(M.dim())));
  return HeckeModule(M.type(), M.rank(), M.generators(), std::move(acts), M.labels(), wrap("theta", M), M.dim());
}

HeckeModule twist_chi(const HeckeModule& M) {
  std::vector<SparseMatrix> acts;
  for (const auto& A : M.actions()) acts.push_back(A.transpose());
  std::vector<std::vector<int>> labels;
  for (const auto& w : M.labels()) labels.push_back(left_w0(M.type(), w));
  return HeckeModule(M.type(), M.rank(), M.generators(), std::move(acts), std::move(labels), wrap("chi", M), M.dim());
}

HeckeModule twist_phi(const HeckeModule& M) {
  if (M.type() == HeckeType::B) {
    HeckeModule copy = M;
    return copy;
  }
  const int n = M.rank();
  std::vector<std::pair<int, SparseMatrix>> moved;
  for (std::size_t k = 0; k < M.generators().size(); ++k) moved.emplace_back(n - M.generators()[k], M.actions()[k]);
  std::sort(moved.begin(), moved.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> gens;
  std::vector<SparseMatrix> acts;
  for (auto& [g, A] : moved) {
    gens.push_back(g);
    acts.push_back(std::move(A));
  }
  std::vector<std::vector<int>> labels;
  for (const auto& w : M.labels()) {
    std::vector<int> r(n);
    for (int i = 1; i <= n; ++i) r[i - 1] = n + 1 - w[n - i];
    labels.push_back(std::move(r));
  }
  return HeckeModule(HeckeType::A, n, std::move(gens), std::move(acts), std::move(labels), wrap("phi", M), M.dim());
}

HeckeModule tensor_BA(const HeckeModule& X, const HeckeModule& Y) {
  require_full(X, HeckeType::B, "tensor_BA");
  require_full(Y, HeckeType::A, "tensor_BA");
  const int m = X.rank(), k = Y.rank();
  const SparseMatrix Ix = SparseMatrix::identity(X.dim()), Iy = SparseMatrix::identity(Y.dim());
  std::vector<int> gens;
  std::vector<SparseMatrix> acts;
  for (int i = 0; i < m; ++i) {
    gens.push_back(i);
    acts.push_back(kron(X.action(i), Iy));
  }
  for (int j = 1; j < k; ++j) {
    gens.push_back(m + j);
    acts.push_back(kron(Ix, Y.action(j)));
  }
  std::vector<std::vector<int>> labels;
  if (X.labeled() && Y.labeled())
    for (const auto& a : X.labels())
      for (const auto& b : Y.labels()) {
        std::vector<int> w(a);
        for (int v : b) w.push_back(v + m);
        labels.push_back(std::move(w));
      }
  return HeckeModule(HeckeType::B, m + k, std::move(gens), std::move(acts), std::move(labels),
                     X.name() + " (x) " + Y.name(), X.dim() * Y.dim());
}

HeckeModule direct_sum(const std::vector<HeckeModule>& parts) {
  if (parts.empty()) throw InvalidInput("direct sum of nothing");
  const auto& f = parts.front();
  int total = 0;
  for (const auto& p : parts) {
    if (p.type() != f.type() || p.rank() != f.rank() || p.generators() != f.generators())
      throw InvalidInput("direct sum of modules over different algebras");
    total += p.dim();
  }
  std::vector<SparseMatrix> acts(f.generators().size(), SparseMatrix(total));
  int off = 0;
  for (const auto& p : parts) {
    for (std::size_t g = 0; g < acts.size(); ++g)
      for (int i = 0; i < p.dim(); ++i)
        for (auto [j, v] : p.actions()[g].row(i)) acts[g].add(off + i, off + j, v);
    off += p.dim();
  }
  return HeckeModule(f.type(), f.rank(), f.generators(), std::move(acts), {}, "direct sum", total);
}

HeckeModule restrict_module(const HeckeModule& M, int m) {
  if (M.type() != HeckeType::B) throw InvalidInput("restriction is defined for type-B modules");
  if (m < 0 || m > M.rank()) throw InvalidInput("m out of range");
  std::vector<int> gens;
  std::vector<SparseMatrix> acts;
  for (std::size_t k = 0; k < M.generators().size(); ++k) {
    if (M.generators()[k] == m) continue;
    gens.push_back(M.generators()[k]);
    acts.push_back(M.actions()[k]);
  }
  return HeckeModule(HeckeType::B, M.rank(), std::move(gens), std::move(acts), M.labels(), wrap("res", M), M.dim());
}

HeckeModule subquotient(const HeckeModule& M, const std::vector<int>& basis_indices) {
  std::vector<int> pos(M.dim(), -1);
  for (std::size_t k = 0; k < basis_indices.size(); ++k) {
    if (pos.at(basis_indices[k]) >= 0) throw InvalidInput("repeated basis index");
    pos[basis_indices[k]] = static_cast<int>(k);
  }
  const int d = static_cast<int>(basis_indices.size());
  std::vector<SparseMatrix> acts;
  for (const auto& A : M.actions()) {
    SparseMatrix B(d);
    for (int r = 0; r < d; ++r)
      for (auto [j, v] : A.row(basis_indices[r]))
        if (pos[j] >= 0) B.add(r, pos[j], v);
    acts.push_back(std::move(B));
  }
  std::vector<std::vector<int>> labels;
  if (M.labeled())
    for (int i : basis_indices) labels.push_back(M.labels()[i]);
  return HeckeModule(M.type(), M.rank(), M.generators(), std::move(acts), std::move(labels), wrap("sub", M), d);
}

InducedModule tensor_induce(const HeckeModule& X, const HeckeModule& Y) {
  require_full(X, HeckeType::B, "tensor_induce");
  require_full(Y, HeckeType::A, "tensor_induce");
  const int m = X.rank(), n = Y.rank(), N = m + n;
  InducedModule out;
  out.dim_x = X.dim();
  out.dim_y = Y.dim();
  out.deltas = min_coset_reps(m, n);
  std::map<SignedPermutation, int> didx;
  for (std::size_t k = 0; k < out.deltas.size(); ++k) didx.emplace(out.deltas[k], static_cast<int>(k));
  const int D = static_cast<int>(out.deltas.size());
  const int dim = D * out.dim_x * out.dim_y;
  std::vector<SignedPermutation> simples;
  for (int j = 0; j < N; ++j) simples.push_back(SignedPermutation::simple(N, j));

  std::vector<SparseMatrix> acts;
  for (int i = 0; i < N; ++i) {
    SparseMatrix A(dim);
    for (int d = 0; d < D; ++d) {
      const SignedPermutation& delta = out.deltas[d];
      if (delta.has_descent(i)) {
        for (int x = 0; x < out.dim_x; ++x)
          for (int y = 0; y < out.dim_y; ++y) A.add(out.index(d, x, y), out.index(d, x, y), -1);
        continue;
      }
      const SignedPermutation up = delta.times_simple(i);
      if (auto it = didx.find(up); it != didx.end()) {
        for (int x = 0; x < out.dim_x; ++x)
          for (int y = 0; y < out.dim_y; ++y) A.add(out.index(d, x, y), out.index(it->second, x, y), 1);
        continue;
      }
      // delta s_i = s_j delta with s_j in the parabolic subgroup.
      const SignedPermutation t = up * delta.inverse();
      auto js = std::find(simples.begin(), simples.end(), t);
      if (js == simples.end() || js - simples.begin() == m)
        throw InternalError("coset step did not land on a parabolic generator");
      const int j = static_cast<int>(js - simples.begin());
      for (int x = 0; x < out.dim_x; ++x)
        for (int y = 0; y < out.dim_y; ++y) {
          const int r = out.index(d, x, y);
          if (j < m) {
            for (auto [x2, v] : X.action(j).row(x)) A.add(r, out.index(d, x2, y), v);
          } else {
            for (auto [y2, v] : Y.action(j - m).row(y)) A.add(r, out.index(d, x, y2), v);
          }
        }
    }
    acts.push_back(std::move(A));
  }
  out.module = HeckeModule(HeckeType::B, N, all_generators(HeckeType::B, N), std::move(acts), {},
                           "Ind(" + X.name() + " (x) " + Y.name() + ")", dim);
  verify_relations(out.module);
  return out;
}

InductionResult induce(const HeckeModule& X, const HeckeModule& Y) {
  if (!X.b_poset() || !Y.a_poset()) throw InvalidInput("induce expects poset modules with recorded posets");
  if (X.flavor() != Y.flavor() || X.flavor() == ActionFlavor::Derived)
    throw InvalidInput("induce expects two M or two sfM poset modules");
  const BnPoset U = disjoint_union_B(*X.b_poset(), *Y.a_poset());
  InductionResult res;
  res.module = X.flavor() == ActionFlavor::Bar ? module_MBP(U) : module_sfMBP(U);
  res.induced = tensor_induce(X, Y);
  const auto& ind = res.induced;
  const int dim = ind.module.dim();
  if (dim != res.module.dim()) throw InternalError("induced dimension differs from the disjoint-union module");
  res.bijection.assign(dim, -1);
  res.iso_map = DenseMatrixQ(dim, dim);
  std::vector<bool> hit(dim, false);
  for (int d = 0; d < static_cast<int>(ind.deltas.size()); ++d) {
    const auto word = reduced_word(ind.deltas[d]);
    for (int x = 0; x < ind.dim_x; ++x)
      for (int y = 0; y < ind.dim_y; ++y) {
        const SignedPermutation g = bullet_B(SignedPermutation(X.labels()[x]), Permutation(Y.labels()[y]));
        const int base = res.module.index_of_label(g.window());
        const int tgt = res.module.index_of_label((g * ind.deltas[d]).window());
        if (base < 0 || tgt < 0 || hit[tgt]) throw InternalError("shuffle does not match the disjoint-union extensions");
        hit[tgt] = true;
        const int r = ind.index(d, x, y);
        res.bijection[r] = tgt;
        std::vector<std::int64_t> v(dim, 0);
        v[base] = 1;
        v = apply_word(res.module, std::move(v), word);
        for (int c = 0; c < dim; ++c)
          if (v[c] != 0) res.iso_map(r, c) = v[c];
      }
  }
  return res;
}

RestrictionResult restrict(const HeckeModule& M, int m) {
  if (!M.b_poset() || M.flavor() == ActionFlavor::Derived) throw InvalidInput("restrict expects a poset module");
  const BnPoset& P = *M.b_poset();
  if (m < 0 || m > P.rank()) throw InvalidInput("m out of range");
  const bool bar = M.flavor() == ActionFlavor::Bar;
  RestrictionResult res;
  res.summands = restriction_summands(P, m);
  std::vector<HeckeModule> bmods, amods;
  std::vector<int> offset;
  int off = 0;
  for (const auto& s : res.summands) {
    bmods.push_back(bar ? module_MBP(s.stQ) : module_sfMBP(s.stQ));
    amods.push_back(bar ? module_MP_typeA(s.stU) : module_sfMP_typeA(s.stU));
    res.factors.push_back(tensor_BA(bmods.back(), amods.back()));
    verify_relations(res.factors.back());
    offset.push_back(off);
    off += res.factors.back().dim();
  }
  if (off != M.dim()) throw InternalError("restriction summands do not add up to the module dimension");
  res.restricted = restrict_module(M, m);
  res.sum = direct_sum(res.factors);
  res.f_tilde.assign(M.dim(), -1);
  std::vector<bool> hit(M.dim(), false);
  for (int i = 0; i < M.dim(); ++i) {
    const auto img = restriction_map(P, SignedPermutation(M.labels()[i]), m);
    std::size_t s = 0;
    while (s < res.summands.size() && !(res.summands[s].Q == img.Q && res.summands[s].U == img.U)) ++s;
    if (s == res.summands.size()) throw InternalError("restriction image outside the summands");
    const int ib = bmods[s].index_of_label(img.g1.window());
    const int ia = amods[s].index_of_label(img.g2.window());
    if (ib < 0 || ia < 0) throw InternalError("standardized pieces are not extensions");
    const int t = offset[s] + ib * amods[s].dim() + ia;
    if (hit[t]) throw InternalError("restriction map is not injective");
    hit[t] = true;
    res.f_tilde[i] = t;
  }
  return res;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "certified";
    case CertStatus::NotIsomorphic: return "not-isomorphic";
    case CertStatus::Inconclusive: return "inconclusive";
    case CertStatus::Failed: return "failed";
  }
  return "?";
}

namespace {

void check_compatible(const HeckeModule& M, const HeckeModule& N) {
  if (M.dim() != N.dim()) throw InvalidInput("dimension mismatch: " + std::to_string(M.dim()) + " vs " + std::to_string(N.dim()));
  if (M.type() != N.type() || M.rank() != N.rank() || M.generators() != N.generators())
    throw InvalidInput("modules over different algebras");
}

}  // namespace

IsoCertificate certify_with_map(const HeckeModule& M, const HeckeModule& N, const DenseMatrixQ& X) {
  check_compatible(M, N);
  IsoCertificate c;
  c.map = X;
  if (X.rows() != M.dim() || X.cols() != N.dim()) {
    c.detail = "map has the wrong shape";
    return c;
  }
  for (std::size_t g = 0; g < M.generators().size(); ++g)
    if (M.actions()[g] * X != X * N.actions()[g]) {
      c.detail = "map does not intertwine pibar_" + std::to_string(M.generators()[g]);
      return c;
    }
  if (X.rank() != M.dim()) {
    c.detail = "map is singular";
    return c;
  }
  c.status = CertStatus::Certified;
  return c;
}

IsoCertificate certify_isomorphism(const HeckeModule& M, const HeckeModule& N, const std::optional<DenseMatrixQ>& X,
                                   unsigned seed) {
  if (X) return certify_with_map(M, N, *X);
  check_compatible(M, N);
  const int d = M.dim();
  if (d > 64) throw RankTooLarge("intertwiner solver is limited to dimension 64");
  IsoCertificate c;
  if (d == 0) {
    c.status = CertStatus::Certified;
    return c;
  }
  if (M.generators().empty()) return certify_with_map(M, N, DenseMatrixQ::identity(d));
  const auto space = intertwiner_space(M.actions(), N.actions());
  if (space.empty()) {
    c.status = CertStatus::NotIsomorphic;
    c.detail = "no nonzero intertwiner";
    return c;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int attempt = 0; attempt < 8; ++attempt) {
    DenseMatrixQ Y(d, d);
    for (const auto& B : space) {
      const Rational k = coef(rng);
      if (k == 0) continue;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (B(i, j) != 0) Y(i, j) += k * B(i, j);
    }
    if (Y.rank() == d) return certify_with_map(M, N, Y);
  }
  // Every intertwiner kills a common vector (or misses a common direction): none is invertible.
  DenseMatrixQ wide(d, d * static_cast<int>(space.size())), tall(d * static_cast<int>(space.size()), d);
  for (std::size_t k = 0; k < space.size(); ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        wide(i, static_cast<int>(k) * d + j) = space[k](i, j);
        tall(static_cast<int>(k) * d + i, j) = space[k](i, j);
      }
  if (wide.rank() < d || tall.rank() < d) {
    c.status = CertStatus::NotIsomorphic;
    c.detail = "intertwiner space has a common kernel";
  } else {
    c.status = CertStatus::Inconclusive;
    c.detail = "no invertible intertwiner among random samples";
  }
  return c;
}

DenseMatrixQ signed_permutation_matrix(const std::vector<int>& target, const std::vector<int>& sign) {
  const int d = static_cast<int>(target.size());
  DenseMatrixQ X(d, d);
  for (int i = 0; i < d; ++i) X(i, target[i]) = sign.empty() ? 1 : sign[i];
  return X;
}

DenseMatrixQ label_map(const HeckeModule& M, const HeckeModule& N,
                       const std::function<std::pair<std::vector<int>, int>(const std::vector<int>&)>& f) {
  if (!M.labeled() || !N.labeled()) throw InvalidInput("label map needs labelled bases");
  DenseMatrixQ X(M.dim(), N.dim());
  for (int i = 0; i < M.dim(); ++i) {
    auto [w, s] = f(M.labels()[i]);
    const int j = N.index_of_label(w);
    if (j < 0) throw InvalidInput("image label missing from target basis");
    X(i, j) = s;
  }
  return X;
}

DenseMatrixQ dual_map(const DenseMatrixQ& F) { return F.transpose().inverse(); }

DenseMatrixQ induced_map(const DenseMatrixQ& f, const DenseMatrixQ& g, std::size_t num_deltas) {
  return block_diagonal(std::vector<DenseMatrixQ>(num_deltas, kron(f, g)));
}

}  // namespace bposet
