#include "bposet/weak_order.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace bposet {

bool leq_weak_R(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank()) throw RankMismatch("weak order: ranks differ");
  return a.inversions().subset_of(b.inversions());
}

IntervalR::IntervalR(SignedPermutation bottom, SignedPermutation top)
    : bottom_(std::move(bottom)), top_(std::move(top)) {
  if (!leq_weak_R(bottom_, top_))
    throw InvalidInput("not comparable in right weak order: " + bottom_.str() + " " + top_.str());
}

std::vector<SignedPermutation> IntervalR::elements() const { return interval_R(bottom_, top_); }

std::vector<SignedPermutation> interval_R(const SignedPermutation& u, const SignedPermutation& w) {
  if (!leq_weak_R(u, w)) throw InvalidInput("interval endpoints not comparable: " + u.str() + " " + w.str());
  const InversionSet top = w.inversions();
  std::set<SignedPermutation> seen{u};
  std::queue<SignedPermutation> q;
  q.push(u);
  while (!q.empty()) {
    SignedPermutation v = q.front();
    q.pop();
    for (int i = 0; i < v.rank(); ++i) {
      if (v.has_descent(i)) continue;
      SignedPermutation up = v.times_simple(i);
      if (!up.inversions().subset_of(top)) continue;
      if (seen.insert(up).second) q.push(up);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<IntervalR> all_intervals(int n, int cap) {
  auto all = all_signed_permutations(n, cap);
  std::vector<InversionSet> inv;
  inv.reserve(all.size());
  for (const auto& s : all) inv.push_back(s.inversions());
  std::vector<IntervalR> out;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      if (inv[a].subset_of(inv[b])) out.emplace_back(all[a], all[b]);
  return out;
}

Permutohedron permutohedron_graph(int n, int cap) {
  Permutohedron g;
  g.vertices = all_signed_permutations(n, cap);
  std::map<SignedPermutation, int> index;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) index[g.vertices[k]] = static_cast<int>(k);
  g.adjacency.resize(g.vertices.size());
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    const auto& v = g.vertices[k];
    for (int i = 0; i < n; ++i) {
      int other = index.at(v.times_simple(i));
      g.adjacency[k].push_back(other);
      if (!v.has_descent(i)) g.edges.emplace_back(static_cast<int>(k), other);
    }
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace bposet
