#pragma once

// Brute-force reference computations, written straight from the definitions and
// sharing no code with the library beyond the value types.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "bposet/permutation.hpp"
#include "bposet/poset.hpp"

namespace oracle {

using bposet::BnPoset;
using bposet::FinitePoset;
using bposet::Permutation;
using bposet::SignedPermutation;

inline std::vector<std::vector<int>> signed_windows(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w(p);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) w[i] = -w[i];
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline int value(const std::vector<int>& w, int i) {
  if (i == 0) return 0;
  return i > 0 ? w[i - 1] : -w[-i - 1];
}

// Position of x in the chain w(-n) < ... < w(n).
inline int position(const std::vector<int>& w, int x) {
  const int n = static_cast<int>(w.size());
  for (int i = -n; i <= n; ++i)
    if (value(w, i) == x) return i;
  return 1 << 20;
}

// inv + nsp + neg.
inline int length_B(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  int l = 0;
  for (int i = 0; i < n; ++i) {
    if (w[i] < 0) ++l;
    for (int j = i + 1; j < n; ++j) {
      if (w[i] > w[j]) ++l;
      if (-w[i] > w[j]) ++l;
    }
  }
  return l;
}

inline int length_A(const std::vector<int>& w) {
  int l = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++l;
  return l;
}

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  for (int x : b) r.push_back(value(a, x));
  return r;
}

inline std::vector<int> inverse(const std::vector<int>& a) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[std::abs(a[i]) - 1] = a[i] > 0 ? int(i + 1) : -int(i + 1);
  return r;
}

inline std::set<int> descents_B(const std::vector<int>& w) {
  std::set<int> d;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (value(w, i) > value(w, i + 1)) d.insert(i);
  return d;
}

// u <=_R w iff l(u) + l(u^{-1} w) = l(w).
inline bool weak_leq(const std::vector<int>& u, const std::vector<int>& w) {
  return length_B(u) + length_B(compose(inverse(u), w)) == length_B(w);
}

inline std::vector<SignedPermutation> extensions_B(const BnPoset& P) {
  const int n = P.rank();
  std::vector<SignedPermutation> out;
  for (const auto& w : signed_windows(n)) {
    bool ok = true;
    for (int a = -n; a <= n && ok; ++a)
      for (int b = -n; b <= n && ok; ++b)
        if (a != b && P.leq(a, b) && position(w, a) > position(w, b)) ok = false;
    if (ok) out.emplace_back(w);
  }
  return out;
}

inline std::vector<Permutation> extensions_A(const FinitePoset& P, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (P.leq(p[j], p[i])) ok = false;
    if (ok) out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Type-B P-partitions with values in [-V, V]: odd, order preserving, strict on a < b with a > b as integers.
inline std::vector<std::vector<int>> p_partitions_B(const BnPoset& P, int V) {
  const int n = P.rank();
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, -V);
  while (true) {
    auto val = [&](int i) { return i == 0 ? 0 : (i > 0 ? f[i - 1] : -f[-i - 1]); };
    bool ok = true;
    for (int a = -n; a <= n && ok; ++a)
      for (int b = -n; b <= n && ok; ++b)
        if (a != b && P.leq(a, b)) {
          if (val(a) > val(b)) ok = false;
          if (a > b && val(a) == val(b)) ok = false;
        }
    if (ok) out.push_back(f);
    int k = 0;
    while (k < n && f[k] == V) f[k++] = -V;
    if (k == n) break;
    ++f[k];
  }
  return out;
}

}  // namespace oracle
