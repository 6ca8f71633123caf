#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "bposet/extensions.hpp"
#include "bposet/io.hpp"
#include "bposet/poset.hpp"
#include "bposet/regular.hpp"
#include "bposet/restriction.hpp"
#include "bposet/surgery.hpp"
#include "bposet/weak_order.hpp"
#include "oracle.hpp"

using namespace bposet;

namespace {

SignedPermutation sp(std::vector<int> w) { return SignedPermutation(std::move(w)); }

BnPoset p2_3() { return BnPoset::from_relations(2, {{1, 0}, {-2, 0}, {0, -1}, {0, 2}}); }
BnPoset chain_b1() { return BnPoset::from_relations(1, {{-1, 0}, {0, 1}}); }
BnPoset antichain_pair_b1() { return BnPoset::from_relations(1, {{-1, 1}}); }
BnPoset worked_b3() { return BnPoset::from_relations(3, {{-2, 0}, {0, 2}, {3, 1}, {-1, -3}}); }
BnPoset ind_left() {
  return BnPoset::from_relations(3, {{2, -3}, {-1, -3}, {-3, 0}, {0, 3}, {3, -2}, {3, 1}});
}
FinitePoset ind_right() { return FinitePoset({1, 2}, {{2, 1}}); }

std::vector<BnPoset> small_family() {
  auto v = enumerate_bn_posets(1);
  auto w = enumerate_bn_posets(2);
  v.insert(v.end(), w.begin(), w.end());
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) v.push_back(k % 2 ? random_bn_poset(3, rng) : random_distinguished_poset(3, rng));
  return v;
}

}  // namespace

TEST(BnPoset, Validation) {
  EXPECT_NO_THROW(chain_b1());
  EXPECT_NO_THROW(antichain_pair_b1());
  EXPECT_THROW(BnPoset::from_relations(1, {{1, 0}}), InvalidInput);
  EXPECT_NO_THROW(BnPoset::from_relations(1, {{1, 0}}, true));
  EXPECT_THROW(BnPoset::from_relations(1, {{1, 0}, {0, 1}}, true), InvalidInput);
  for (const auto& P : enumerate_bn_posets(2))
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) ASSERT_EQ(P.leq(a, b), P.leq(-b, -a));
}

TEST(BnPoset, EnumerationCounts) {
  EXPECT_EQ(enumerate_bn_posets(1).size(), 5u);
  EXPECT_EQ(enumerate_posets_A(3).size(), 19u);
  EXPECT_EQ(enumerate_posets_A(4).size(), 219u);
  EXPECT_THROW(enumerate_bn_posets(3), RankTooLarge);
}

TEST(Extensions, Examples) {
  EXPECT_EQ(linear_extensions_B(p2_3()), (std::vector<SignedPermutation>{sp({-1, 2}), sp({2, -1})}));
  const auto g = sp({2, -3, 1});
  EXPECT_EQ(linear_extensions_B(BnPoset::linear(g)), std::vector<SignedPermutation>{g});
  EXPECT_EQ(linear_extensions_B(antichain_pair_b1()).size(), 1u);
}

TEST(Extensions, MatchBruteForce) {
  for (const auto& P : small_family()) ASSERT_EQ(linear_extensions_B(P), oracle::extensions_B(P)) << poset_to_json(P);
  for (int n = 1; n <= 4; ++n)
    for (const auto& P : enumerate_posets_A(n)) ASSERT_EQ(linear_extensions_A(P), oracle::extensions_A(P, n));
}

TEST(Extensions, SetIsConvex) {
  for (const auto& P : small_family()) {
    const auto ext = linear_extensions_B(P);
    ASSERT_EQ(convex_hull(ext), ext) << poset_to_json(P);
  }
}

TEST(PPartitions, MatchBruteForce) {
  for (const auto& P : enumerate_bn_posets(2))
    for (int V = 0; V <= 3; ++V) {
      std::set<std::vector<int>> lib;
      for (const auto& f : p_partitions_bounded(P, V)) {
        ASSERT_TRUE(is_p_partition_B(P, f));
        lib.insert(std::vector<int>(f.values.begin() + P.rank() + 1, f.values.end()));
      }
      const auto brute = oracle::p_partitions_B(P, V);
      ASSERT_EQ(lib, std::set<std::vector<int>>(brute.begin(), brute.end())) << poset_to_json(P) << " V=" << V;
    }
  EXPECT_TRUE(p_partitions_bounded(BnPoset::from_relations(1, {{1, -1}}), 0).empty());
  EXPECT_EQ(p_partitions_bounded(antichain_pair_b1(), 1).size(), oracle::p_partitions_B(antichain_pair_b1(), 1).size());
}

TEST(PPartitions, DisjointOverExtensions) {
  for (const auto& P : enumerate_bn_posets(2)) {
    std::multiset<TypeBPartition> pieces;
    for (const auto& E : linear_extensions_B(P))
      for (const auto& f : p_partitions_bounded(BnPoset::linear(E), 3)) pieces.insert(f);
    const auto all = p_partitions_bounded(P, 3);
    ASSERT_EQ(pieces, std::multiset<TypeBPartition>(all.begin(), all.end()));
  }
}

TEST(Kbp, Examples) {
  EXPECT_EQ(kbp(p2_3()), FB(CompositionB({0, 2})) + FB(CompositionB({1, 1})));
  const auto g = sp({-3, 1, 2});
  EXPECT_EQ(kbp(BnPoset::linear(g)), FB_of_set(3, g.descents()));
  EXPECT_EQ(kbp(BnPoset()), FB(CompositionB()));
}

TEST(Kbp, MatchesPartitionEnumeration) {
  auto check = [](const BnPoset& P, int V) {
    TruncatedPoly brute = zero_poly_B(V);
    for (const auto& f : oracle::p_partitions_B(P, V)) {
      std::vector<int> e(V + 1, 0);
      for (int x : f) ++e[std::abs(x)];
      brute.add(e, 1);
    }
    return expand_truncated(kbp(P), V) == brute && kbp_from_partitions(P, V) == brute;
  };
  for (const auto& P : enumerate_bn_posets(2)) ASSERT_TRUE(check(P, 4)) << poset_to_json(P);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto P = k % 2 ? random_bn_poset(3, rng) : random_distinguished_poset(3, rng);
    ASSERT_TRUE(check(P, 4)) << poset_to_json(P);
  }
}

TEST(IncB, Examples) {
  EXPECT_TRUE(incB(antichain_pair_b1()).empty());
  EXPECT_TRUE(incB(BnPoset::linear(sp({2, -1}))).empty());
  const auto inc = incB(p2_3());
  EXPECT_NE(std::find(inc.begin(), inc.end(), Relation{-1, 2}), inc.end());
  EXPECT_NE(std::find(inc.begin(), inc.end(), Relation{2, -1}), inc.end());
  EXPECT_EQ(linear_extensions_B(extend_pair(p2_3(), -1, 2)), std::vector<SignedPermutation>{sp({-1, 2})});
  EXPECT_THROW(extend_pair(p2_3(), 1, 0), InvalidInput);
}

TEST(IncB, ExtensionSetsSplit) {
  for (const auto& P : small_family()) {
    const auto ext = linear_extensions_B(P);
    for (auto [u, v] : incB(P)) {
      auto a = linear_extensions_B(extend_pair(P, u, v));
      auto b = linear_extensions_B(extend_pair(P, v, u));
      std::vector<SignedPermutation> both(a);
      both.insert(both.end(), b.begin(), b.end());
      std::sort(both.begin(), both.end());
      ASSERT_EQ(both, ext);
      ASSERT_FALSE(a.empty());
      ASSERT_FALSE(b.empty());
    }
  }
}

TEST(Surgery, DisjointUnionExample) {
  const auto U = disjoint_union_B(ind_left(), ind_right());
  const auto expect = BnPoset::from_relations(
      5, {{2, -3}, {-1, -3}, {-3, 0}, {0, 3}, {3, -2}, {3, 1}, {5, 4}, {-4, -5}});
  EXPECT_EQ(U, expect);
  const auto ext = linear_extensions_B(U);
  EXPECT_NE(std::find(ext.begin(), ext.end(), sp({3, 1, 4, -5, -2})), ext.end());
  EXPECT_EQ(disjoint_union_B(p2_3(), FinitePoset({}, {})), p2_3());
}

TEST(Surgery, Bullet) {
  EXPECT_EQ(bullet_B(sp({3, 1, -2}), Permutation({1, 2})), sp({3, 1, -2, 4, 5}));
  EXPECT_EQ(bullet_B(sp({-2, 1}), Permutation(std::vector<int>{})), sp({-2, 1}));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n + m <= 4; ++n)
      for (const auto& s : all_signed_permutations(m))
        for (const auto& r : all_permutations(n)) {
          const auto b = bullet_B(s, r);
          std::vector<int> inv = oracle::inverse(s.window());
          const auto ri = r.inverse();
          for (int x : ri.window()) inv.push_back(x + m);
          ASSERT_EQ(b.inverse().window(), inv);
        }
}

TEST(Surgery, CosetFactorizationExample) {
  const auto f = factor_coset(sp({3, 1, 4, -5, -2}), 3);
  EXPECT_EQ(f.g1, sp({3, 1, -2}));
  EXPECT_EQ(f.g2, Permutation({2, 1}));
  EXPECT_EQ(f.delta, sp({1, 2, 5, -4, 3}));
  EXPECT_TRUE(is_min_coset_rep(f.delta, 3));
  EXPECT_EQ(bullet_B(f.g1, f.g2) * f.delta, sp({3, 1, 4, -5, -2}));
  EXPECT_EQ(shuffle_B_coset(sp({2, -1}), Permutation(std::vector<int>{})), std::vector<SignedPermutation>{sp({2, -1})});
}

// delta is minimal in its coset iff its only possible left descent is s_m.
TEST(Surgery, MinCosetRepsBruteForce) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; m + n <= 4; ++n) {
      std::vector<SignedPermutation> brute;
      for (const auto& d : all_signed_permutations(m + n)) {
        bool ok = true;
        for (int i = 0; i < m + n && ok; ++i)
          if (i != m && d.has_left_descent(i)) ok = false;
        if (ok) brute.push_back(d);
      }
      auto reps = min_coset_reps(m, n);
      std::sort(reps.begin(), reps.end());
      ASSERT_EQ(reps, brute) << m << " " << n;
    }
}

TEST(Surgery, ShuffleOfExtensionsIsUnion) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      const auto fb = m == 0 ? std::vector<BnPoset>{BnPoset()} : enumerate_bn_posets(m);
      const auto fa = n == 0 ? std::vector<FinitePoset>{FinitePoset({}, {})} : enumerate_posets_A(n);
      for (const auto& P1 : fb)
        for (const auto& P2 : fa) {
          auto lhs = shuffle_B_coset(linear_extensions_B(P1), linear_extensions_A(P2));
          std::sort(lhs.begin(), lhs.end());
          ASSERT_EQ(lhs, linear_extensions_B(disjoint_union_B(P1, P2)));
        }
    }
  auto lhs = shuffle_B_coset(linear_extensions_B(ind_left()), linear_extensions_A(ind_right()));
  std::sort(lhs.begin(), lhs.end());
  EXPECT_EQ(lhs, linear_extensions_B(disjoint_union_B(ind_left(), ind_right())));
}

TEST(Restriction, RestrictionSubposetsWorked) {
  const auto P = worked_b3();
  const auto Qs = lower_subposets_B(P, 1);
  ASSERT_EQ(Qs.size(), 3u);
  std::set<std::vector<int>> sets;
  for (const auto& Q : Qs) sets.insert(Q.elements());
  EXPECT_EQ(sets, (std::set<std::vector<int>>{{-1, 0, 1}, {-2, 0, 2}, {-3, 0, 3}}));
  std::map<std::vector<int>, std::size_t> uppers;
  std::map<std::vector<int>, FinitePoset> byset;
  for (const auto& Q : Qs) {
    uppers[Q.elements()] = upper_subposets(P, Q).size();
    byset.emplace(Q.elements(), Q);
  }
  EXPECT_EQ(uppers[(std::vector<int>{-1, 0, 1})], 1u);
  EXPECT_EQ(uppers[(std::vector<int>{-2, 0, 2})], 3u);
  EXPECT_EQ(uppers[(std::vector<int>{-3, 0, 3})], 1u);
  const auto& Q2 = byset.at({-2, 0, 2});
  EXPECT_EQ(standardize_B(Q2), BnPoset::from_relations(1, {{-1, 0}, {0, 1}}));
  bool found = false;
  for (const auto& U : upper_subposets(P, Q2))
    if (U.elements() == std::vector<int>{-3, -1}) {
      found = true;
      EXPECT_TRUE(U.less(-1, -3));
      EXPECT_EQ(standardize_A(U), FinitePoset({1, 2}, {{2, 1}}));
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(restriction_summands(P, 1).size(), 5u);
  EXPECT_EQ(lower_subposets_B(P, 0).size(), 1u);
  EXPECT_EQ(lower_subposets_B(P, 0)[0].elements(), std::vector<int>{0});
}

TEST(Restriction, StandardizationExamples) {
  const auto g = sp({-4, 7, -1, 3, -6, 2, -5});
  EXPECT_EQ(st_plus(g, 4), sp({-3, 4, -1, 2}));
  EXPECT_EQ(st_minus(g, 4), Permutation({1, 3, 2}));
  EXPECT_EQ(st_plus(g, 7), g);
  EXPECT_EQ(st_minus(g, 7).rank(), 0);
}

TEST(Restriction, MapOfWorkedElement) {
  const auto P = worked_b3();
  const auto img = restriction_map(P, sp({-1, 2, -3}), 1);
  EXPECT_EQ(img.g1, sp({-1}));
  EXPECT_EQ(img.g2, Permutation({2, 1}));
  EXPECT_EQ(conc(img.Q, img.U, sp({-1}), Permutation({2, 1})), sp({-1, 2, -3}));
}

TEST(Restriction, BijectionWithInverse) {
  for (const auto& P : small_family())
    for (int m = 0; m <= P.rank(); ++m) {
      std::set<std::tuple<std::vector<int>, std::vector<int>, SignedPermutation, Permutation>> seen;
      std::size_t target = 0;
      for (const auto& t : restriction_summands(P, m))
        target += linear_extensions_B(t.stQ).size() * linear_extensions_A(t.stU).size();
      for (const auto& g : linear_extensions_B(P)) {
        const auto img = restriction_map(P, g, m);
        ASSERT_EQ(conc(img.Q, img.U, img.g1, img.g2), g);
        const auto ext1 = linear_extensions_B(standardize_B(img.Q));
        const auto ext2 = linear_extensions_A(standardize_A(img.U));
        ASSERT_NE(std::find(ext1.begin(), ext1.end(), img.g1), ext1.end());
        ASSERT_NE(std::find(ext2.begin(), ext2.end(), img.g2), ext2.end());
        seen.emplace(img.Q.elements(), img.U.elements(), img.g1, img.g2);
      }
      ASSERT_EQ(seen.size(), target) << poset_to_json(P) << " m=" << m;
      if (m == P.rank()) ASSERT_EQ(restriction_summands(P, m).size(), 1u);
    }
}

TEST(Regular, PosetOfWorkedInterval) {
  const auto P = poset_of({sp({2, 1}), sp({1, -2})});
  auto rel = P.strict_relations();
  std::sort(rel.begin(), rel.end());
  EXPECT_EQ(rel, (std::vector<Relation>{{-1, -2}, {-1, 0}, {-1, 1}, {0, 1}, {2, 1}}));
  const auto g = sp({-2, 1, 3});
  EXPECT_EQ(poset_of({g}), BnPoset::linear(g));
  EXPECT_EQ(linear_extensions_B(P), convex_hull({sp({2, 1}), sp({1, -2})}));
}

TEST(Regular, Classification) {
  EXPECT_TRUE(is_distinguished(chain_b1()));
  EXPECT_FALSE(is_distinguished(antichain_pair_b1()));
  EXPECT_EQ(distinguished_witness(antichain_pair_b1()), std::optional<int>(1));
  EXPECT_EQ(distinguished_representative(antichain_pair_b1()), chain_b1());
  EXPECT_EQ(distinguished_representative(p2_3()), p2_3());
  const auto P = load_poset_file(BPOSET_TEST_DATA "/b6_interval.json");
  EXPECT_TRUE(is_regular(P));
  auto [s, r] = sigma_rho_endpoints(P);
  EXPECT_EQ(s, sp({-3, 2, 1, 4, 6, 5}));
  EXPECT_EQ(r, sp({1, -2, -3, 4, -5, -6}));
  const auto g = sp({2, -3, 1});
  EXPECT_EQ(sigma_rho_endpoints(BnPoset::linear(g)), std::make_pair(g, g));
}

TEST(Regular, PosetOfExtensionsIsEquivalent) {
  for (const auto& P : small_family()) {
    const auto ext = linear_extensions_B(P);
    const auto Q = poset_of(ext);
    ASSERT_EQ(linear_extensions_B(Q), ext);
    ASSERT_TRUE(is_distinguished(Q));
  }
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) ASSERT_TRUE(is_distinguished(random_distinguished_poset(3, rng)));
}

TEST(Regular, IntervalsGiveRegularPosets) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& I : all_intervals(n)) {
      const auto P = poset_of({I.bottom(), I.top()});
      ASSERT_TRUE(is_regular(P));
      ASSERT_EQ(linear_extensions_B(P), interval_R(I.bottom(), I.top()));
      ASSERT_EQ(sigma_rho_endpoints(P), std::make_pair(I.bottom(), I.top()));
    }
}

TEST(Duality, DualAndReverse) {
  for (const auto& P : small_family()) {
    ASSERT_EQ(P.dual().dual(), P);
    ASSERT_EQ(P.dual(), P.reversed());
  }
  for (const auto& P1 : enumerate_bn_posets(1))
    for (const auto& P2 : enumerate_posets_A(2))
      ASSERT_EQ(disjoint_union_B(P1, P2).dual(), disjoint_union_B(P1.dual(), P2.dual()));
}
