#include "bposet/extensions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace bposet {

std::vector<SignedPermutation> linear_extensions_B(const BnPoset& P) {
  const int n = P.rank();
  const FinitePoset& p = P.poset();
  const int N = 2 * n + 1;
  std::vector<SignedPermutation> out;
  std::vector<int> window(n);
  // Fill positions n, n-1, ..., 1 with maximal elements; the mirror goes to the negative side.
  std::function<void(int, std::uint64_t)> rec = [&](int pos, std::uint64_t alive) {
    if (pos == 0) {
      out.emplace_back(window);
      return;
    }
    for (int j = 0; j < N; ++j) {
      const int x = j - n;
      if (x == 0 || !(alive >> j & 1U)) continue;
      if ((p.row(j) & alive) != (std::uint64_t{1} << j)) continue;  // something alive above x
      window[pos - 1] = x;
      rec(pos - 1, alive & ~(std::uint64_t{1} << j) & ~(std::uint64_t{1} << (n - x)));
    }
  };
  rec(n, N == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> linear_extensions_A(const FinitePoset& P) {
  const int n = P.size();
  std::vector<int> expect(n);
  std::iota(expect.begin(), expect.end(), 1);
  if (P.elements() != expect) throw InvalidInput("type-A poset must live on [n]");
  std::vector<Permutation> out;
  std::vector<int> window(n);
  std::function<void(int, std::uint64_t)> rec = [&](int pos, std::uint64_t alive) {
    if (pos == n) {
      out.emplace_back(window);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (!(alive >> j & 1U)) continue;
      bool minimal = true;
      for (int i = 0; i < n && minimal; ++i)
        if (i != j && (alive >> i & 1U) && (P.row(i) >> j & 1U)) minimal = false;
      if (!minimal) continue;
      window[pos] = j + 1;
      rec(pos + 1, alive & ~(std::uint64_t{1} << j));
    }
  };
  rec(0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_p_partition_B(const BnPoset& P, const TypeBPartition& f) {
  const int n = P.rank();
  if (f.n != n || static_cast<int>(f.values.size()) != 2 * n + 1) return false;
  for (int i = -n; i <= n; ++i)
    if (f(-i) != -f(i)) return false;
  for (auto [i, j] : P.strict_relations()) {
    if (f(i) > f(j)) return false;
    if (i > j && f(i) >= f(j)) return false;
  }
  return true;
}

std::vector<TypeBPartition> p_partitions_bounded(const BnPoset& P, int V) {
  const int n = P.rank();
  std::vector<TypeBPartition> out;
  TypeBPartition f{n, std::vector<int>(2 * n + 1, 0)};
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      if (is_p_partition_B(P, f)) out.push_back(f);
      return;
    }
    for (int v = -V; v <= V; ++v) {
      f.values[i + n] = v;
      f.values[-i + n] = -v;
      rec(i + 1);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedPoly kbp_from_partitions(const BnPoset& P, int V) {
  TruncatedPoly out = zero_poly_B(V);
  for (const auto& f : p_partitions_bounded(P, V)) {
    std::vector<int> e(V + 1, 0);
    for (int i = 1; i <= P.rank(); ++i) ++e[std::abs(f(i))];
    out.add(e, 1);
  }
  return out;
}

TruncatedPoly kp_from_partitions(const FinitePoset& P, int V) {
  const int n = P.size();
  TruncatedPoly out = zero_poly_A(V);
  std::vector<int> f(n + 1, 1);
  const auto rel = P.strict_relations();
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      for (auto [a, b] : rel) {
        if (f[a] > f[b]) return;
        if (a > b && f[a] >= f[b]) return;
      }
      std::vector<int> e(V, 0);
      for (int k = 1; k <= n; ++k) ++e[f[k] - 1];
      out.add(e, 1);
      return;
    }
    for (int v = 1; v <= V; ++v) {
      f[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

QSymBElement kbp(const BnPoset& P) {
  QSymBElement out(Basis::Fundamental);
  for (const auto& g : linear_extensions_B(P)) out.add(comp_B(P.rank(), g.descents()), 1);
  return out;
}

QSymElement kp(const FinitePoset& P) {
  QSymElement out(Basis::Fundamental);
  for (const auto& g : linear_extensions_A(P)) out.add(comp(P.size(), g.descents()), 1);
  return out;
}

std::vector<Relation> incB(const BnPoset& P) {
  const int n = P.rank();
  const int N = 2 * n + 1;
  // below[a][b]: some extension puts a under b.
  std::vector<std::vector<bool>> below(N, std::vector<bool>(N, false));
  for (const auto& g : linear_extensions_B(P)) {
    std::vector<int> pos(N);
    for (int i = -n; i <= n; ++i) pos[g(i) + n] = i;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (pos[a] < pos[b]) below[a][b] = true;
  }
  std::vector<Relation> out;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (a != b && below[a][b] && below[b][a]) out.emplace_back(a - n, b - n);
  return out;
}

BnPoset extend_pair(const BnPoset& P, int u, int v) {
  const auto inc = incB(P);
  if (std::find(inc.begin(), inc.end(), Relation{u, v}) == inc.end())
    throw InvalidInput("(" + std::to_string(u) + "," + std::to_string(v) + ") is not in inc^B(P)");
  auto rel = P.covers();
  rel.emplace_back(u, v);
  rel.emplace_back(-v, -u);
  return BnPoset::from_relations(P.rank(), rel);
}

}  // namespace bposet
