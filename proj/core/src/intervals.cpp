#include "bposet/intervals.hpp"

#include <algorithm>
#include <functional>

#include "bposet/errors.hpp"

namespace bposet {

HeckeModule wbim(const IntervalR& I) {
  auto elems = I.elements();
  std::sort(elems.begin(), elems.end());
  HeckeModule M = ascent_module_B(elems, ActionFlavor::Bar, "B[" + I.bottom().str() + "," + I.top().str() + "]");
  verify_relations(M);
  return M;
}

std::pair<IntervalR, IntervalR> split_interval(const IntervalR& I) {
  if (I.bottom() == I.top()) throw InvalidInput("a singleton interval cannot be split");
  const int n = I.rank();
  const SignedPermutation w = I.bottom().inverse() * I.top();
  int k = 0;
  while (k < n && !w.has_left_descent(k)) ++k;
  if (k == n) throw InternalError("nonidentity element without a left descent");
  // Lower part: u in [id, w] without left descent s_k, i.e. [id, w] meet [id, s_k w0]; its top is the longest such u.
  const SignedPermutation inv = I.bottom().inverse();
  SignedPermutation top = SignedPermutation::identity(n);
  for (const auto& g : I.elements()) {
    const SignedPermutation u = inv * g;
    if (!u.has_left_descent(k) && u.length() > top.length()) top = u;
  }
  return {IntervalR(I.bottom(), I.bottom() * top), IntervalR(I.bottom() * SignedPermutation::simple(n, k), I.top())};
}

std::vector<CompositionB> interval_simple_decomposition(const IntervalR& I) {
  std::vector<CompositionB> out;
  std::function<void(const IntervalR&)> rec = [&](const IntervalR& J) {
    if (J.bottom() == J.top()) {
      out.push_back(comp_B(J.rank(), J.bottom().descents()));
      return;
    }
    auto [a, b] = split_interval(J);
    rec(a);
    rec(b);
  };
  rec(I);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bposet
