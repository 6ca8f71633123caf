#include "bposet/restriction.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

namespace bposet {

namespace {

void check_type_B_shape(const FinitePoset& Q) {
  const auto& e = Q.elements();
  if (e.size() % 2 == 0 || !Q.contains(0)) throw InvalidInput("type-B subposet must contain 0 and have odd size");
  for (int x : e)
    if (!Q.contains(-x)) throw InvalidInput("type-B subposet must be closed under negation");
}

}  // namespace

std::vector<FinitePoset> lower_subposets_B(const BnPoset& P, int m) {
  const int n = P.rank();
  if (m < 0 || m > n) throw InvalidInput("m out of range");
  std::vector<FinitePoset> out;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - m, pick.end(), 1);
  do {
    std::vector<int> q{0};
    for (int a = 1; a <= n; ++a)
      if (pick[a - 1]) {
        q.push_back(a);
        q.push_back(-a);
      }
    std::sort(q.begin(), q.end());
    bool lower = true;
    for (int x : q)
      for (int y = -n; y <= n && lower; ++y)
        if (P.leq(-x, y) && P.leq(y, x) && !std::binary_search(q.begin(), q.end(), y)) lower = false;
    if (lower) out.push_back(P.poset().induced(q));
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end(), [](const FinitePoset& a, const FinitePoset& b) { return a.elements() < b.elements(); });
  return out;
}

std::vector<int> down_closure(const BnPoset& P, const FinitePoset& Q) {
  std::vector<int> out;
  for (int y = -P.rank(); y <= P.rank(); ++y)
    for (int x : Q.elements())
      if (P.leq(y, x)) {
        out.push_back(y);
        break;
      }
  return out;
}

std::vector<FinitePoset> upper_subposets(const BnPoset& P, const FinitePoset& Q) {
  check_type_B_shape(Q);
  const int n = P.rank();
  const auto closure = down_closure(P, Q);
  std::vector<int> rest;
  for (int y = -n; y <= n; ++y)
    if (!std::binary_search(closure.begin(), closure.end(), y)) rest.push_back(y);
  auto in_rest = [&](int y) { return std::binary_search(rest.begin(), rest.end(), y); };

  // One representative per absolute value outside Q.
  std::vector<std::vector<int>> choices;
  for (int a = 1; a <= n; ++a) {
    if (Q.contains(a)) continue;
    std::vector<int> c;
    if (in_rest(-a)) c.push_back(-a);
    if (in_rest(a)) c.push_back(a);
    if (c.empty()) return {};
    choices.push_back(c);
  }
  std::vector<FinitePoset> out;
  std::vector<int> u;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == choices.size()) {
      std::vector<int> s(u);
      std::sort(s.begin(), s.end());
      for (int y : s)
        for (int x : rest)
          if (P.leq(y, x) && !std::binary_search(s.begin(), s.end(), x)) return;
      out.push_back(P.poset().induced(s));
      return;
    }
    for (int c : choices[k]) {
      u.push_back(c);
      rec(k + 1);
      u.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const FinitePoset& a, const FinitePoset& b) { return a.elements() < b.elements(); });
  return out;
}

BnPoset standardize_B(const FinitePoset& Q) {
  check_type_B_shape(Q);
  return BnPoset::from_poset(Q.relabeled(signed_range(Q.size() / 2)));
}

FinitePoset standardize_A(const FinitePoset& U) {
  std::vector<int> t(U.size());
  std::iota(t.begin(), t.end(), 1);
  return U.relabeled(t);
}

SignedPermutation st_plus(const SignedPermutation& g, int m) {
  if (m < 0 || m > g.rank()) throw InvalidInput("m out of range");
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) {
    int c = 0;
    for (int j = 1; j <= m; ++j)
      if (std::abs(g(j)) <= std::abs(g(i))) ++c;
    w[i - 1] = g(i) > 0 ? c : -c;
  }
  return SignedPermutation(std::move(w));
}

Permutation st_minus(const SignedPermutation& g, int m) {
  const int n = g.rank();
  if (m < 0 || m > n) throw InvalidInput("m out of range");
  std::vector<int> w(n - m);
  for (int i = 1; i <= n - m; ++i) {
    int c = 0;
    for (int j = m + 1; j <= n; ++j)
      if (g(j) <= g(i + m)) ++c;
    w[i - 1] = c;
  }
  return Permutation(std::move(w));
}

RestrictionImage restriction_map(const BnPoset& P, const SignedPermutation& g, int m) {
  if (g.rank() != P.rank()) throw RankMismatch("restriction_map: ranks differ");
  std::vector<int> q, u;
  for (int i = -m; i <= m; ++i) q.push_back(g(i));
  for (int i = m + 1; i <= g.rank(); ++i) u.push_back(g(i));
  return {P.poset().induced(q), P.poset().induced(u), st_plus(g, m), st_minus(g, m)};
}

SignedPermutation conc(const FinitePoset& Q, const FinitePoset& U, const SignedPermutation& g1, const Permutation& g2) {
  const int m = Q.size() / 2;
  if (g1.rank() != m || g2.rank() != U.size()) throw RankMismatch("conc: shapes differ");
  std::vector<int> w;
  for (int i = 1; i <= m; ++i) w.push_back(Q.elements()[g1(i) + m]);
  for (int i = 1; i <= U.size(); ++i) w.push_back(U.elements()[g2(i) - 1]);
  return SignedPermutation(std::move(w));
}

std::vector<RestrictionSummand> restriction_summands(const BnPoset& P, int m) {
  std::vector<RestrictionSummand> out;
  for (const auto& Q : lower_subposets_B(P, m))
    for (const auto& U : upper_subposets(P, Q)) out.push_back({Q, U, standardize_B(Q), standardize_A(U)});
  return out;
}

}  // namespace bposet
