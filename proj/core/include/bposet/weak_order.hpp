#pragma once

#include <utility>
#include <vector>

#include "bposet/permutation.hpp"

namespace bposet {

bool leq_weak_R(const SignedPermutation& a, const SignedPermutation& b);

// Right weak Bruhat interval [bottom, top].
class IntervalR {
 public:
  IntervalR(SignedPermutation bottom, SignedPermutation top);

  const SignedPermutation& bottom() const { return bottom_; }
  const SignedPermutation& top() const { return top_; }
  int rank() const { return bottom_.rank(); }
  // Lexicographic.
  std::vector<SignedPermutation> elements() const;

  bool operator==(const IntervalR&) const = default;

 private:
  SignedPermutation bottom_, top_;
};

std::vector<SignedPermutation> interval_R(const SignedPermutation& u, const SignedPermutation& w);

// All pairs u <= w, lexicographic in (u, w).
std::vector<IntervalR> all_intervals(int n, int cap = kDefaultRankCap);

struct Permutohedron {
  std::vector<SignedPermutation> vertices;      // lexicographic
  std::vector<std::pair<int, int>> edges;       // (lower, upper) vertex indices
  std::vector<std::vector<int>> adjacency;
};

Permutohedron permutohedron_graph(int n, int cap = kDefaultRankCap);

}  // namespace bposet
