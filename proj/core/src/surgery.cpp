#include "bposet/surgery.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace bposet {

BnPoset disjoint_union_B(const BnPoset& P1, const FinitePoset& P2) {
  const int m = P1.rank(), n = P2.size();
  std::vector<Relation> rel = P1.strict_relations();
  for (auto [a, b] : P2.strict_relations()) {
    rel.emplace_back(a + m, b + m);
    rel.emplace_back(-b - m, -a - m);
  }
  return BnPoset::from_relations(m + n, rel);
}

FinitePoset disjoint_union_A(const FinitePoset& P1, const FinitePoset& P2) {
  const int m = P1.size(), n = P2.size();
  std::vector<int> elems;
  for (int i = 1; i <= m + n; ++i) elems.push_back(i);
  std::vector<Relation> rel = P1.strict_relations();
  for (auto [a, b] : P2.strict_relations()) rel.emplace_back(a + m, b + m);
  return FinitePoset(elems, rel);
}

SignedPermutation bullet_B(const SignedPermutation& s, const Permutation& r) {
  const int m = s.rank();
  std::vector<int> w(s.window());
  for (int x : r.window()) w.push_back(x + m);
  return SignedPermutation(std::move(w));
}

bool is_min_coset_rep(const SignedPermutation& d, int m) {
  const int N = d.rank();
  int prev = 0;
  for (int i = 1; i <= m; ++i) {
    int p = d.inverse_at(i);
    if (p <= prev) return false;
    prev = p;
  }
  for (int i = m + 1; i < N; ++i)
    if (d.inverse_at(i) >= d.inverse_at(i + 1)) return false;
  return true;
}

std::vector<SignedPermutation> min_coset_reps(int m, int n) {
  std::vector<SignedPermutation> out;
  for (const auto& d : all_signed_permutations(m + n))
    if (is_min_coset_rep(d, m)) out.push_back(d);
  return out;
}

std::vector<SignedPermutation> shuffle_B_coset(const SignedPermutation& s, const Permutation& r) {
  const SignedPermutation base = bullet_B(s, r);
  std::vector<SignedPermutation> out;
  for (const auto& d : min_coset_reps(s.rank(), r.rank())) out.push_back(base * d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> shuffle_B_coset(const std::vector<SignedPermutation>& S,
                                               const std::vector<Permutation>& R) {
  std::set<SignedPermutation> acc;
  for (const auto& s : S)
    for (const auto& r : R)
      for (const auto& g : shuffle_B_coset(s, r)) acc.insert(g);
  return {acc.begin(), acc.end()};
}

namespace {

SignedPermutation left_times_simple(const SignedPermutation& g, int j) {
  std::vector<int> w(g.window());
  for (int& x : w) {
    if (j == 0) {
      if (std::abs(x) == 1) x = -x;
    } else if (std::abs(x) == j) {
      x = x > 0 ? j + 1 : -(j + 1);
    } else if (std::abs(x) == j + 1) {
      x = x > 0 ? j : -j;
    }
  }
  return SignedPermutation(std::move(w));
}

}  // namespace

CosetFactorization factor_coset(const SignedPermutation& g, int m) {
  const int N = g.rank();
  if (m < 0 || m > N) throw InvalidInput("factor_coset: m out of range");
  SignedPermutation cur = g;
  for (bool moved = true; moved;) {
    moved = false;
    for (int j = 0; j < N && !moved; ++j) {
      if (j == m) continue;
      if (cur.has_left_descent(j)) {
        cur = left_times_simple(cur, j);
        moved = true;
      }
    }
  }
  const SignedPermutation u = g * cur.inverse();
  std::vector<int> w1(u.window().begin(), u.window().begin() + m), w2;
  for (int i = m + 1; i <= N; ++i) w2.push_back(u(i) - m);
  return {SignedPermutation(w1), Permutation(w2), cur};
}

}  // namespace bposet
