#include "bposet/qsym_ops.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

namespace bposet {

namespace {

template <class L, class R>
std::vector<TensorTerm<L, R>> collect(const std::map<std::pair<L, R>, Integer>& acc) {
  std::vector<TensorTerm<L, R>> out;
  for (const auto& [key, k] : acc)
    if (k != 0) out.push_back({key.first, key.second, k});
  return out;
}

// Interleavings of a and b preserving the order inside each word.
void interleave(const std::vector<int>& a, const std::vector<int>& b,
                const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w;
  w.reserve(a.size() + b.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == a.size() && j == b.size()) {
      f(w);
      return;
    }
    if (i < a.size()) {
      w.push_back(a[i]);
      rec(i + 1, j);
      w.pop_back();
    }
    if (j < b.size()) {
      w.push_back(b[j]);
      rec(i, j + 1);
      w.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<Permutation> shuffle_A(const Permutation& u, const Permutation& v) {
  const int m = u.rank();
  std::vector<int> shifted(v.window());
  for (int& x : shifted) x += m;
  std::vector<Permutation> out;
  interleave(u.window(), shifted, [&](const std::vector<int>& w) { out.emplace_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

QSymElement product_A(const QSymElement& f, const QSymElement& g) {
  const QSymElement ff = to_fundamental(f), gg = to_fundamental(g);
  QSymElement out(Basis::Fundamental);
  for (const auto& [a, ka] : ff.terms()) {
    const Permutation u = permutation_with_descents(a.size(), a.set());
    for (const auto& [b, kb] : gg.terms()) {
      const Permutation v = permutation_with_descents(b.size(), b.set());
      const int n = a.size() + b.size();
      for (const auto& w : shuffle_A(u, v)) out.add(comp(n, w.descents()), ka * kb);
    }
  }
  return out;
}

Coproduct coproduct_A(const QSymElement& f) {
  std::map<std::pair<CompositionA, CompositionA>, Integer> acc;
  for (const auto& [a, k] : to_fundamental(f).terms()) {
    const int n = a.size();
    const IndexSet s = a.set();
    for (int cut = 0; cut <= n; ++cut) {
      IndexSet lo, hi;
      for (int j : s) {
        if (j < cut) lo.push_back(j);
        if (j > cut) hi.push_back(j - cut);
      }
      acc[{comp(cut, lo), comp(n - cut, hi)}] += k;
    }
  }
  return collect(acc);
}

std::vector<int> restrict_word(const std::vector<int>& w, int lo, int hi) {
  std::vector<int> out;
  for (int x : w)
    if (std::abs(x) >= lo && std::abs(x) <= hi) out.push_back(x);
  return out;
}

std::vector<int> negative_positions(const std::vector<int>& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> hat_word(const std::vector<int>& w) {
  std::vector<int> out;
  const auto neg = negative_positions(w);
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) out.push_back(-w[*it - 1]);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0) out.push_back(w[i]);
  return out;
}

std::vector<int> standardize_word(const std::vector<int>& w) {
  std::vector<int> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  std::vector<int> st(w.size());
  for (std::size_t r = 0; r < idx.size(); ++r) st[idx[r]] = static_cast<int>(r) + 1;
  return st;
}

std::vector<SignedPermutation> shuffle_B_huang(const SignedPermutation& u, const Permutation& v) {
  const int m = u.rank(), n = v.rank(), N = m + n;
  if (N > kDefaultRankCap) throw RankTooLarge("shuffle rank exceeds cap");
  std::vector<SignedPermutation> out;
  // Only words whose [m]-subword is u can qualify; enumerate the other letters freely.
  const auto big = all_signed_permutations(n);
  for (const auto& tail : big) {
    std::vector<int> letters(tail.window());
    for (int& x : letters) x = x > 0 ? x + m : x - m;
    interleave(u.window(), letters, [&](const std::vector<int>& w) {
      if (restrict_word(w, 1, m) != u.window()) return;
      auto hw = restrict_word(hat_word(w), m + 1, N);
      if (standardize_word(hw) == v.window()) out.emplace_back(w);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QSymBElement action_odotB(const SignedPermutation& u, const Permutation& v) {
  QSymBElement out(Basis::Fundamental);
  const int N = u.rank() + v.rank();
  for (const auto& w : shuffle_B_huang(u, v)) out.add(comp_B(N, w.descents()), 1);
  return out;
}

QSymBElement action_odotB(const QSymBElement& f, const QSymElement& g) {
  QSymBElement out(Basis::Fundamental);
  for (const auto& [a, ka] : to_fundamental(f).terms()) {
    const SignedPermutation u = signed_with_descents(a.size(), a.set());
    for (const auto& [b, kb] : to_fundamental(g).terms()) {
      const Permutation v = permutation_with_descents(b.size(), b.set());
      out += (ka * kb) * action_odotB(u, v);
    }
  }
  return out;
}

Coaction coaction_deltaB(const QSymBElement& f) {
  std::map<std::pair<CompositionB, CompositionA>, Integer> acc;
  for (const auto& [a, k] : to_fundamental(f).terms()) {
    const int n = a.size();
    const IndexSet s = a.set();
    for (int cut = 0; cut <= n; ++cut) {
      IndexSet lo, hi;
      for (int j : s) {
        if (j < cut) lo.push_back(j);
        if (j > cut) hi.push_back(j - cut);
      }
      acc[{comp_B(cut, lo), comp(n - cut, hi)}] += k;
    }
  }
  return collect(acc);
}

}  // namespace bposet
