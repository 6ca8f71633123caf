#include "bposet/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace bposet {

// ---- FinitePoset ----

FinitePoset::FinitePoset(std::vector<int> elements, const std::vector<Relation>& relations)
    : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw InvalidInput("duplicate poset element");
  if (elems_.size() > 64) throw RankTooLarge("posets are limited to 64 elements");
  const int N = size();
  rows_.assign(N, 0);
  for (int j = 0; j < N; ++j) rows_[j] |= std::uint64_t{1} << j;
  for (auto [a, b] : relations) {
    if (!contains(a) || !contains(b))
      throw InvalidInput("relation (" + std::to_string(a) + "," + std::to_string(b) + ") leaves the ground set");
    rows_[index_of(a)] |= std::uint64_t{1} << index_of(b);
  }
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      if (rows_[i] >> k & 1U) rows_[i] |= rows_[k];
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if ((rows_[i] >> j & 1U) && (rows_[j] >> i & 1U))
        throw InvalidInput("relation has a cycle through " + std::to_string(elems_[i]) + " and " +
                           std::to_string(elems_[j]));
}

FinitePoset FinitePoset::chain(const std::vector<int>& order) {
  std::vector<Relation> r;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) r.emplace_back(order[k], order[k + 1]);
  return FinitePoset(order, r);
}

FinitePoset FinitePoset::antichain(std::vector<int> elements) { return FinitePoset(std::move(elements), {}); }

FinitePoset FinitePoset::linear(const Permutation& g) { return chain(g.window()); }

bool FinitePoset::contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

int FinitePoset::index_of(int x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) throw InvalidInput(std::to_string(x) + " is not a poset element");
  return static_cast<int>(it - elems_.begin());
}

bool FinitePoset::leq(int a, int b) const { return rows_[index_of(a)] >> index_of(b) & 1U; }

std::vector<Relation> FinitePoset::strict_relations() const {
  std::vector<Relation> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && (rows_[i] >> j & 1U)) out.emplace_back(elems_[i], elems_[j]);
  return out;
}

std::vector<Relation> FinitePoset::covers() const {
  std::vector<Relation> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (i == j || !(rows_[i] >> j & 1U)) continue;
      bool cover = true;
      for (int k = 0; k < size() && cover; ++k)
        if (k != i && k != j && (rows_[i] >> k & 1U) && (rows_[k] >> j & 1U)) cover = false;
      if (cover) out.emplace_back(elems_[i], elems_[j]);
    }
  return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    bool minimal = true;
    for (int i = 0; i < size() && minimal; ++i)
      if (i != j && (rows_[i] >> j & 1U)) minimal = false;
    if (minimal) out.push_back(elems_[j]);
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (std::popcount(rows_[i]) == 1) out.push_back(elems_[i]);
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<int>& subset) const {
  std::vector<int> s(subset);
  std::sort(s.begin(), s.end());
  std::vector<Relation> r;
  for (int a : s)
    for (int b : s)
      if (a != b && leq(a, b)) r.emplace_back(a, b);
  return FinitePoset(s, r);
}

FinitePoset FinitePoset::dual() const {
  std::vector<Relation> r;
  for (auto [a, b] : strict_relations()) r.emplace_back(b, a);
  return FinitePoset(elems_, r);
}

FinitePoset FinitePoset::reversed() const {
  const int N = size();
  std::vector<Relation> r;
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k)
      if (j != k && (rows_[N - 1 - j] >> (N - 1 - k) & 1U)) r.emplace_back(elems_[j], elems_[k]);
  return FinitePoset(elems_, r);
}

FinitePoset FinitePoset::relabeled(const std::vector<int>& targets) const {
  if (static_cast<int>(targets.size()) != size()) throw InvalidInput("relabel: size mismatch");
  std::vector<Relation> r;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && (rows_[i] >> j & 1U)) r.emplace_back(targets[i], targets[j]);
  return FinitePoset(targets, r);
}

// ---- BnPoset ----

std::vector<int> signed_range(int n) {
  std::vector<int> v(2 * n + 1);
  std::iota(v.begin(), v.end(), -n);
  return v;
}

BnPoset::BnPoset() : n_(0), p_(FinitePoset({0}, {})) {}

BnPoset BnPoset::from_poset(const FinitePoset& p) {
  if (p.size() % 2 == 0) throw InvalidInput("a B_n poset has an odd number of elements");
  const int n = p.size() / 2;
  if (p.elements() != signed_range(n)) throw InvalidInput("a B_n poset lives on [-n,n]");
  for (auto [a, b] : p.strict_relations())
    if (!p.leq(-b, -a))
      throw InvalidInput("symmetry violated: " + std::to_string(a) + " < " + std::to_string(b) + " but not " +
                         std::to_string(-b) + " < " + std::to_string(-a));
  return BnPoset(n, p);
}

BnPoset BnPoset::from_relations(int n, const std::vector<Relation>& relations, bool symmetrize) {
  std::vector<Relation> r(relations);
  if (symmetrize)
    for (auto [a, b] : relations) r.emplace_back(-b, -a);
  return from_poset(FinitePoset(signed_range(n), r));
}

BnPoset BnPoset::linear(const SignedPermutation& g) {
  std::vector<int> order;
  for (int i = -g.rank(); i <= g.rank(); ++i) order.push_back(g(i));
  return BnPoset(g.rank(), FinitePoset::chain(order));
}

BnPoset BnPoset::dual() const { return BnPoset(n_, p_.dual()); }
BnPoset BnPoset::reversed() const { return BnPoset(n_, p_.reversed()); }

BnPoset validate_bn(int n, const std::vector<std::vector<bool>>& relation) {
  const int N = 2 * n + 1;
  if (static_cast<int>(relation.size()) != N) throw InvalidInput("relation matrix has the wrong size");
  std::vector<Relation> r;
  for (int a = 0; a < N; ++a) {
    if (static_cast<int>(relation[a].size()) != N) throw InvalidInput("relation matrix is not square");
    for (int b = 0; b < N; ++b)
      if (a != b && relation[a][b]) r.emplace_back(a - n, b - n);
  }
  return BnPoset::from_relations(n, r);
}

// ---- enumeration ----

namespace {

// Transitive and antisymmetric check on a reflexive bit matrix.
bool is_partial_order(const std::vector<std::uint64_t>& rows) {
  const int N = static_cast<int>(rows.size());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j || !(rows[i] >> j & 1U)) continue;
      if (rows[j] >> i & 1U) return false;
      if ((rows[j] & ~rows[i]) != 0) return false;
    }
  return true;
}

std::vector<Relation> strict_pairs(const std::vector<std::uint64_t>& rows, const std::vector<int>& elems) {
  std::vector<Relation> r;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (i != j && (rows[i] >> j & 1U)) r.emplace_back(elems[i], elems[j]);
  return r;
}

}  // namespace

std::vector<BnPoset> enumerate_bn_posets(int n) {
  if (n > 2) throw RankTooLarge("exhaustive B_n poset enumeration is limited to n <= 2");
  const auto elems = signed_range(n);
  const int N = 2 * n + 1;
  // Orbits of off-diagonal pairs under (a,b) -> (-b,-a).
  std::vector<std::vector<std::pair<int, int>>> orbits;
  std::set<std::pair<int, int>> seen;
  for (int a = -n; a <= n; ++a)
    for (int b = -n; b <= n; ++b) {
      if (a == b || seen.count({a, b})) continue;
      std::vector<std::pair<int, int>> orb{{a + n, b + n}};
      seen.insert({a, b});
      if (!seen.count({-b, -a})) {
        orb.emplace_back(-b + n, -a + n);
        seen.insert({-b, -a});
      }
      orbits.push_back(orb);
    }
  std::vector<BnPoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
    std::vector<std::uint64_t> rows(N);
    for (int i = 0; i < N; ++i) rows[i] = std::uint64_t{1} << i;
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if (mask >> o & 1U)
        for (auto [i, j] : orbits[o]) rows[i] |= std::uint64_t{1} << j;
    if (is_partial_order(rows)) out.push_back(BnPoset::from_relations(n, strict_pairs(rows, elems)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FinitePoset> enumerate_posets_A(int n) {
  if (n > 4) throw RankTooLarge("exhaustive poset enumeration is limited to n <= 4");
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 1);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<FinitePoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::uint64_t> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) rows[pairs[k].first] |= std::uint64_t{1} << pairs[k].second;
    if (is_partial_order(rows)) out.emplace_back(elems, strict_pairs(rows, elems));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

SignedPermutation random_signed(int n, std::mt19937_64& rng) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  for (int& x : w)
    if (rng() & 1U) x = -x;
  return SignedPermutation(w);
}

}  // namespace

BnPoset random_distinguished_poset(int n, std::mt19937_64& rng) {
  const int k = static_cast<int>(rng() % 3) + 1;
  std::vector<SignedPermutation> gs;
  for (int t = 0; t < k; ++t) gs.push_back(random_signed(n, rng));
  std::vector<Relation> r;
  for (int a = -n; a <= n; ++a)
    for (int b = -n; b <= n; ++b) {
      if (a == b) continue;
      bool all = true;
      for (const auto& g : gs)
        if (g.inverse_at(a) > g.inverse_at(b)) all = false;
      if (all) r.emplace_back(a, b);
    }
  return BnPoset::from_relations(n, r);
}

BnPoset random_bn_poset(int n, std::mt19937_64& rng) {
  std::vector<Relation> r;
  const int attempts = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n + 1));
  for (int t = 0; t < attempts; ++t) {
    int a = static_cast<int>(rng() % (2 * n + 1)) - n;
    int b = static_cast<int>(rng() % (2 * n + 1)) - n;
    if (a == b) continue;
    auto trial = r;
    trial.emplace_back(a, b);
    trial.emplace_back(-b, -a);
    try {
      (void)FinitePoset(signed_range(n), trial);
      r = std::move(trial);
    } catch (const InvalidInput&) {
      // rejected: would create a cycle
    }
  }
  return BnPoset::from_relations(n, r);
}

FinitePoset random_poset_A(int n, std::mt19937_64& rng) {
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 1);
  std::vector<Relation> r;
  if (n < 2) return FinitePoset(elems, r);
  const int attempts = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
  for (int t = 0; t < attempts; ++t) {
    int a = static_cast<int>(rng() % n) + 1, b = static_cast<int>(rng() % n) + 1;
    if (a == b) continue;
    auto trial = r;
    trial.emplace_back(a, b);
    try {
      (void)FinitePoset(elems, trial);
      r = std::move(trial);
    } catch (const InvalidInput&) {
    }
  }
  return FinitePoset(elems, r);
}

std::string relations_string(const std::vector<Relation>& r) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < r.size(); ++k) os << (k ? ", " : "") << '(' << r[k].first << ',' << r[k].second << ')';
  os << '}';
  return os.str();
}

}  // namespace bposet
