#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bposet/permutation.hpp"

namespace bposet {

// Composition of n: positive parts.
class CompositionA {
 public:
  CompositionA() = default;
  explicit CompositionA(std::vector<int> parts);

  static CompositionA from_set(int n, const IndexSet& s);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  IndexSet set() const;

  std::string str() const;
  auto operator<=>(const CompositionA& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return parts_ <=> o.parts_;
  }
  bool operator==(const CompositionA&) const = default;

 private:
  std::vector<int> parts_;
};

// Type-B composition: first part may be 0. Degree 0 is the empty list.
class CompositionB {
 public:
  CompositionB() = default;
  explicit CompositionB(std::vector<int> parts);

  static CompositionB from_set(int n, const IndexSet& s);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  IndexSet set() const;

  std::string str() const;
  auto operator<=>(const CompositionB& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return parts_ <=> o.parts_;
  }
  bool operator==(const CompositionB&) const = default;

 private:
  std::vector<int> parts_;
};

IndexSet set_of(const CompositionA& a);
IndexSet set_B(const CompositionB& a);
CompositionA comp(int n, const IndexSet& s);
CompositionB comp_B(int n, const IndexSet& s);

// `fine` refines `coarse` (coarse obtained by merging adjacent parts).
bool refines(const CompositionA& fine, const CompositionA& coarse);
bool refines(const CompositionB& fine, const CompositionB& coarse);

CompositionA concatenate(const CompositionA& a, const CompositionA& b);
CompositionA near_concatenate(const CompositionA& a, const CompositionA& b);

std::vector<CompositionA> all_compositions(int n);
std::vector<CompositionB> all_compositions_B(int n);

CompositionA parse_composition(std::string_view text);
CompositionB parse_composition_B(std::string_view text);

}  // namespace bposet
