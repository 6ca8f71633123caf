#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bposet/errors.hpp"

namespace bposet {

// Sorted list of indices (descent sets, composition sets).
using IndexSet = std::vector<int>;

// Element of S_n, stored as its one-line window.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  static Permutation longest(int n);
  static Permutation simple(int n, int i);

  int rank() const { return static_cast<int>(window_.size()); }
  int operator()(int i) const { return window_[i - 1]; }
  const std::vector<int>& window() const { return window_; }

  Permutation inverse() const;
  bool has_descent(int i) const;
  IndexSet descents() const;
  int length() const;
  Permutation times_simple(int i) const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> window_;
};

Permutation operator*(const Permutation& a, const Permutation& b);

// Set of reflections t_(i,j), packed into n*n bits.
class InversionSet {
 public:
  InversionSet() = default;
  explicit InversionSet(int n) : n_(n) {}

  static int slot(int n, int i, int j);

  void insert(int i, int j) { bits_ |= std::uint64_t{1} << slot(n_, i, j); }
  bool contains(int i, int j) const { return (bits_ >> slot(n_, i, j)) & 1U; }
  bool subset_of(const InversionSet& other) const { return (bits_ & ~other.bits_) == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  int rank() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  std::vector<std::pair<int, int>> reflections() const;

  bool operator==(const InversionSet&) const = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

// Element of the hyperoctahedral group, window w_1..w_n.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  static SignedPermutation longest(int n);
  static SignedPermutation simple(int n, int i);
  static SignedPermutation from_permutation(const Permutation& p);

  int rank() const { return static_cast<int>(window_.size()); }
  // Value on [-n, n].
  int operator()(int i) const {
    if (i > 0) return window_[i - 1];
    if (i < 0) return -window_[-i - 1];
    return 0;
  }
  const std::vector<int>& window() const { return window_; }

  SignedPermutation inverse() const;
  int inverse_at(int x) const;

  bool has_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  IndexSet descents() const;
  bool has_left_descent(int i) const;
  InversionSet inversions() const;
  int length() const { return inversions().size(); }
  SignedPermutation times_simple(int i) const;

  std::string str() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> window_;
};

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

SignedPermutation parse_signed_permutation(std::string_view text);
Permutation parse_permutation(std::string_view text);

// Lexicographic by window.
std::vector<SignedPermutation> all_signed_permutations(int n, int cap = kDefaultRankCap);
std::vector<Permutation> all_permutations(int n, int cap = kDefaultRankCap);

// A representative whose descent set is exactly `d`.
SignedPermutation signed_with_descents(int n, const IndexSet& d);
Permutation permutation_with_descents(int n, const IndexSet& d);

// Reduced word read left to right.
std::vector<int> reduced_word(const SignedPermutation& w);
std::vector<int> reduced_word(const Permutation& w);

}  // namespace bposet
