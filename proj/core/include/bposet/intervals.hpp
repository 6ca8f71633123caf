#pragma once

#include <utility>
#include <vector>

#include "bposet/hecke.hpp"
#include "bposet/weak_order.hpp"

namespace bposet {

// B(I): the descent-case action on the span of an interval, basis in lexicographic order.
HeckeModule wbim(const IntervalR& I);

// Splits I = sigma [id, w] along the smallest left descent s_k of w; the second part contains the top.
std::pair<IntervalR, IntervalR> split_interval(const IntervalR& I);

// Descent compositions of the singletons reached by repeated splitting, sorted.
std::vector<CompositionB> interval_simple_decomposition(const IntervalR& I);

}  // namespace bposet
