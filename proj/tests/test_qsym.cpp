#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "bposet/composition.hpp"
#include "bposet/poset.hpp"
#include "bposet/qsym.hpp"
#include "bposet/qsym_ops.hpp"
#include "oracle.hpp"

using namespace bposet;

namespace {

// x_0^{a_0} * M_{(a_1..a_k)}(x_1..x_V)
TruncatedPoly monomial_oracle_B(const CompositionB& a, int V) {
  TruncatedPoly p = zero_poly_B(V);
  const auto& parts = a.parts();
  std::vector<int> e(V + 1, 0);
  if (parts.empty()) {
    p.add(e, 1);
    return p;
  }
  e[0] = parts[0];
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int last) {
    if (k == parts.size()) {
      p.add(e, 1);
      return;
    }
    for (int i = last + 1; i <= V; ++i) {
      e[i] = parts[k];
      rec(k + 1, i);
      e[i] = 0;
    }
  };
  rec(1, 0);
  return p;
}

TruncatedPoly monomial_oracle_A(const CompositionA& a, int V) {
  TruncatedPoly p = zero_poly_A(V);
  std::vector<int> e(V, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int last) {
    if (k == a.parts().size()) {
      p.add(e, 1);
      return;
    }
    for (int i = last + 1; i <= V; ++i) {
      e[i - 1] = a.parts()[k];
      rec(k + 1, i);
      e[i - 1] = 0;
    }
  };
  rec(0, 0);
  return p;
}

// K^B of the chain gamma(-n) < ... < gamma(n), summed over bounded P-partitions.
TruncatedPoly fundamental_oracle_B(const SignedPermutation& g, int V) {
  const int n = g.rank();
  std::vector<Relation> chain;
  for (int i = -n; i < n; ++i) chain.emplace_back(g(i), g(i + 1));
  const auto P = BnPoset::from_relations(n, chain);
  TruncatedPoly p = zero_poly_B(V);
  for (const auto& f : oracle::p_partitions_B(P, V)) {
    std::vector<int> e(V + 1, 0);
    for (int x : f) ++e[std::abs(x)];
    p.add(e, 1);
  }
  return p;
}

// F_b over the ordered alphabet -V < ... < V, with letter i read as x_{|i|}.
TruncatedPoly folded_F(const CompositionA& b, int V) {
  TruncatedPoly p = zero_poly_B(V);
  const auto s = b.set();
  const int d = b.size();
  std::vector<int> e(V + 1, 0);
  std::function<void(int, int)> rec = [&](int j, int prev) {
    if (j == d) {
      p.add(e, 1);
      return;
    }
    const bool strict = j > 0 && std::binary_search(s.begin(), s.end(), j);
    for (int i = strict ? prev + 1 : prev; i <= V; ++i) {
      ++e[std::abs(i)];
      rec(j + 1, i);
      --e[std::abs(i)];
    }
  };
  rec(0, -V);
  return p;
}

}  // namespace

TEST(QSym, MonomialExpansions) {
  const auto p = expand_truncated(MB(CompositionB({0, 1})), 2);
  TruncatedPoly expect = zero_poly_B(2);
  expect.add({0, 1, 0}, 1);
  expect.add({0, 0, 1}, 1);
  EXPECT_EQ(p, expect);
  TruncatedPoly x0 = zero_poly_B(2);
  x0.add({1, 0, 0}, 1);
  EXPECT_EQ(expand_truncated(MB(CompositionB({1})), 2), x0);
  TruncatedPoly one = zero_poly_B(3);
  one.add({0, 0, 0, 0}, 1);
  EXPECT_EQ(expand_truncated(MB(CompositionB()), 3), one);
  for (int n = 0; n <= 4; ++n)
    for (const auto& a : all_compositions_B(n)) ASSERT_EQ(expand_truncated(MB(a), 4), monomial_oracle_B(a, 4)) << a.str();
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_compositions(n)) ASSERT_EQ(expand_truncated(M(a), 4), monomial_oracle_A(a, 4)) << a.str();
}

TEST(QSym, FundamentalIsChainEnumerator) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : all_compositions_B(n)) {
      const auto g = signed_with_descents(n, set_B(a));
      ASSERT_EQ(expand_truncated(FB(a), n + 1), fundamental_oracle_B(g, n + 1)) << a.str();
    }
}

TEST(QSym, FundamentalToMonomial) {
  // F^B_(0,1) has set {0}; the finer compositions of 1 are those whose set contains {0}.
  auto f = to_monomial(FB(CompositionB({0, 1})));
  EXPECT_EQ(f.num_terms(), 1u);
  EXPECT_EQ(f.coeff(CompositionB({0, 1})), 1);
  auto g = to_monomial(FB(CompositionB({1})));
  EXPECT_EQ(g.coeff(CompositionB({1})), 1);
  EXPECT_EQ(g.coeff(CompositionB({0, 1})), 1);
  EXPECT_EQ(g.num_terms(), 2u);
  EXPECT_THROW(fundamental_to_monomial_B(MB(CompositionB({1}))), InvalidInput);
}

TEST(QSym, BasisChangeRoundTrip) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& a : all_compositions_B(n)) {
      ASSERT_EQ(to_fundamental(to_monomial(FB(a))), FB(a));
      ASSERT_EQ(to_monomial(to_fundamental(MB(a))), MB(a));
      // unitriangular: leading coefficient 1, every other term refines a
      for (const auto& [b, k] : to_monomial(FB(a)).terms()) {
        ASSERT_TRUE(refines(b, a));
        if (b == a) ASSERT_EQ(k, 1);
      }
    }
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : all_compositions(n)) ASSERT_EQ(to_fundamental(to_monomial(F(a))), F(a));
}

TEST(QSym, ExpansionAgreesAcrossBases) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_compositions_B(n)) ASSERT_EQ(expand_truncated(FB(a), 4), expand_truncated(to_monomial(FB(a)), 4));
}

TEST(QSym, TruncationSeparatesBasis) {
  for (int n = 1; n <= 4; ++n) {
    std::map<std::map<std::vector<int>, Integer>, CompositionB> seen;
    for (const auto& a : all_compositions_B(n)) ASSERT_TRUE(seen.emplace(expand_truncated(FB(a), n + 1).terms, a).second);
  }
}

TEST(QSym, ProductA) {
  const auto one = F(CompositionA({1}));
  EXPECT_EQ(product_A(one, one), F(CompositionA({2})) + F(CompositionA({1, 1})));
  const auto unit = F(CompositionA());
  EXPECT_EQ(product_A(unit, F(CompositionA({2, 1}))), F(CompositionA({2, 1})));
  for (int p = 1; p <= 2; ++p)
    for (int q = 1; q <= 2; ++q)
      for (const auto& a : all_compositions(p))
        for (const auto& b : all_compositions(q)) {
          const auto lhs = expand_truncated(product_A(F(a), F(b)), 5);
          const auto rhs = expand_truncated(F(a), 5) * expand_truncated(F(b), 5);
          ASSERT_EQ(lhs, rhs) << a.str() << " " << b.str();
          ASSERT_EQ(product_A(F(a), F(b)), product_A(F(b), F(a)));
        }
  const auto x = F(CompositionA({1})), y = F(CompositionA({1, 1})), z = F(CompositionA({2}));
  EXPECT_EQ(product_A(product_A(x, y), z), product_A(x, product_A(y, z)));
}

TEST(QSym, CoproductA) {
  const auto d = coproduct_A(F(CompositionA({2})));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].left, CompositionA());
  EXPECT_EQ(d[0].right, CompositionA({2}));
  EXPECT_EQ(d[1].left, CompositionA({1}));
  EXPECT_EQ(d[1].right, CompositionA({1}));
  EXPECT_EQ(d[2].left, CompositionA({2}));
  EXPECT_EQ(d[2].right, CompositionA());
  const auto e = coproduct_A(F(CompositionA()));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].left, CompositionA());
  // counit on either side
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_compositions(n)) {
      QSymElement l(Basis::Fundamental), r(Basis::Fundamental);
      for (const auto& t : coproduct_A(F(a))) {
        if (t.right.size() == 0) l.add(t.left, t.coeff);
        if (t.left.size() == 0) r.add(t.right, t.coeff);
      }
      ASSERT_EQ(l, F(a));
      ASSERT_EQ(r, F(a));
    }
}

TEST(QSym, CoproductCoassociative) {
  using Triple = std::map<std::tuple<CompositionA, CompositionA, CompositionA>, Integer>;
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_compositions(n)) {
      Triple left, right;
      for (const auto& t : coproduct_A(F(a))) {
        for (const auto& u : coproduct_A(F(t.left))) left[{u.left, u.right, t.right}] += t.coeff * u.coeff;
        for (const auto& u : coproduct_A(F(t.right))) right[{t.left, u.left, u.right}] += t.coeff * u.coeff;
      }
      ASSERT_EQ(left, right) << a.str();
    }
}

TEST(QSym, HuangShuffle) {
  const auto s = shuffle_B_huang(SignedPermutation({1}), Permutation({1}));
  std::size_t brute = 0;
  for (const auto& w : oracle::signed_windows(2)) {
    std::vector<int> sub;
    for (int x : w)
      if (std::abs(x) == 1) sub.push_back(x);
    brute += sub == std::vector<int>{1};
  }
  EXPECT_EQ(s.size(), brute);
  const auto u = SignedPermutation({-2, 1});
  EXPECT_EQ(shuffle_B_huang(u, Permutation(std::vector<int>{})), std::vector<SignedPermutation>{u});
  // m = 0: every signed word whose hat standardizes to v
  const auto z = shuffle_B_huang(SignedPermutation(std::vector<int>{}), Permutation({2, 1}));
  std::size_t count = 0;
  for (const auto& w : oracle::signed_windows(2)) count += standardize_word(hat_word(w)) == std::vector<int>{2, 1};
  EXPECT_EQ(z.size(), count);
}

// The type-A factor may take either sign, so it enters through the folded alphabet.
TEST(QSym, ActionMatchesFoldedProduct) {
  const int V = 4;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (const auto& a : all_compositions_B(m))
        for (const auto& b : all_compositions(n)) {
          const auto lhs = expand_truncated(action_odotB(FB(a), F(b)), V);
          const auto rhs = expand_truncated(FB(a), V) * folded_F(b, V);
          ASSERT_EQ(lhs, rhs) << a.str() << " " << b.str();
        }
  const auto f = FB(CompositionB({0, 2}));
  EXPECT_EQ(action_odotB(f, F(CompositionA())), f);
  EXPECT_EQ(action_odotB(FB(CompositionB()), F(CompositionA({1}))), FB(CompositionB({1})) + FB(CompositionB({0, 1})));
}

TEST(QSym, ActionIndependentOfRepresentatives) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      std::map<std::pair<CompositionB, CompositionA>, QSymBElement> first;
      for (const auto& u : all_signed_permutations(m))
        for (const auto& v : all_permutations(n)) {
          const auto key = std::make_pair(comp_B(m, u.descents()), comp(n, v.descents()));
          const auto r = action_odotB(u, v);
          auto [it, fresh] = first.emplace(key, r);
          if (!fresh) ASSERT_EQ(it->second, r) << u.str() << " " << v.str();
        }
    }
}

TEST(QSym, Coaction) {
  const auto d0 = coaction_deltaB(FB(CompositionB()));
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0[0].left, CompositionB());
  EXPECT_EQ(d0[0].right, CompositionA());
  const auto d = coaction_deltaB(FB(CompositionB({0, 1})));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].left, CompositionB());
  EXPECT_EQ(d[0].right, CompositionA({1}));
  EXPECT_EQ(d[1].left, CompositionB({0, 1}));
  EXPECT_EQ(d[1].right, CompositionA());
}

// f(x_0..x_V, y_1..y_V) = sum left(x) right(y), compared as polynomials in 2V+1 variables.
TEST(QSym, CoactionBySubstitution) {
  const int V = 3;
  for (int n = 0; n <= 3; ++n)
    for (const auto& a : all_compositions_B(n)) {
      const auto whole = expand_truncated(FB(a), 2 * V);
      TruncatedPoly split = zero_poly_B(2 * V);
      for (const auto& t : coaction_deltaB(FB(a))) {
        const auto L = expand_truncated(FB(t.left), V);
        const auto R = expand_truncated(F(t.right), V);
        for (const auto& [el, kl] : L.terms)
          for (const auto& [er, kr] : R.terms) {
            std::vector<int> e(el);
            e.insert(e.end(), er.begin(), er.end());
            split.add(e, kl * kr * t.coeff);
          }
      }
      ASSERT_EQ(whole, split) << a.str();
    }
}

TEST(QSym, CoactionCounit) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& a : all_compositions_B(n)) {
      QSymBElement back(Basis::Fundamental);
      for (const auto& t : coaction_deltaB(FB(a)))
        if (t.right.size() == 0) back.add(t.left, t.coeff);
      ASSERT_EQ(back, FB(a));
    }
}
