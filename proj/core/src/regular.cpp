#include "bposet/regular.hpp"

#include <algorithm>

#include "bposet/extensions.hpp"

namespace bposet {

BnPoset poset_of(const std::vector<SignedPermutation>& U) {
  if (U.empty()) throw InvalidInput("poset_of: empty set");
  const int n = U.front().rank();
  for (const auto& g : U)
    if (g.rank() != n) throw RankMismatch("poset_of: mixed ranks");
  std::vector<std::vector<int>> pos;
  for (const auto& g : U) {
    std::vector<int> p(2 * n + 1);
    for (int i = -n; i <= n; ++i) p[g(i) + n] = i;
    pos.push_back(std::move(p));
  }
  std::vector<Relation> r;
  for (int a = -n; a <= n; ++a)
    for (int b = -n; b <= n; ++b) {
      if (a == b) continue;
      bool all = std::all_of(pos.begin(), pos.end(), [&](const auto& p) { return p[a + n] < p[b + n]; });
      if (all) r.emplace_back(a, b);
    }
  return BnPoset::from_relations(n, r);
}

std::optional<int> distinguished_witness(const BnPoset& P) {
  for (int x = 1; x <= P.rank(); ++x)
    if (P.comparable(x, -x) && !P.comparable(x, 0)) return x;
  return std::nullopt;
}

bool is_distinguished(const BnPoset& P) { return !distinguished_witness(P).has_value(); }

std::optional<std::array<int, 3>> regularity_witness(const BnPoset& P) {
  const int n = P.rank();
  for (int x = -n; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z) {
        if (P.less(x, z) && !P.less(x, y) && !P.less(y, z)) return std::array<int, 3>{x, y, z};
        if (P.less(z, x) && !P.less(z, y) && !P.less(y, x)) return std::array<int, 3>{x, y, z};
      }
  return std::nullopt;
}

bool is_regular(const BnPoset& P) { return is_distinguished(P) && !regularity_witness(P).has_value(); }

BnPoset distinguished_representative(const BnPoset& P) { return poset_of(linear_extensions_B(P)); }

std::pair<SignedPermutation, SignedPermutation> sigma_rho_endpoints(const BnPoset& P) {
  if (auto w = distinguished_witness(P))
    throw InvalidInput("not regular: " + std::to_string(*w) + " is comparable to its negative but not to 0");
  if (auto w = regularity_witness(P))
    throw InvalidInput("not regular: triple (" + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                       std::to_string((*w)[2]) + ")");
  const int n = P.rank();
  std::vector<int> q1, q2;
  for (int x = -n; x <= n; ++x) {
    const bool above0 = P.less(0, x), incomparable = !P.comparable(x, 0);
    if (above0 || (incomparable && x > 0)) q1.push_back(x);
    if (above0 || (incomparable && x < 0)) q2.push_back(x);
  }
  auto minimal_in = [&](const std::vector<int>& s) {
    std::vector<int> mins;
    for (int x : s)
      if (std::none_of(s.begin(), s.end(), [&](int y) { return P.less(y, x); })) mins.push_back(x);
    return mins;
  };
  std::vector<int> a, b;
  for (int k = 1; k <= n; ++k) {
    auto m1 = minimal_in(q1), m2 = minimal_in(q2);
    if (m1.empty() || m2.empty()) throw InternalError("endpoint algorithm ran out of elements");
    int ak = *std::min_element(m1.begin(), m1.end());
    int bk = *std::max_element(m2.begin(), m2.end());
    a.push_back(ak);
    b.push_back(bk);
    q1.erase(std::find(q1.begin(), q1.end(), ak));
    q2.erase(std::find(q2.begin(), q2.end(), bk));
  }
  return {SignedPermutation(a), SignedPermutation(b)};
}

std::vector<SignedPermutation> convex_hull(const std::vector<SignedPermutation>& U) {
  return linear_extensions_B(poset_of(U));
}

}  // namespace bposet
