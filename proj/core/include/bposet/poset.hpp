#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bposet/permutation.hpp"

namespace bposet {

using Relation = std::pair<int, int>;  // (a, b) means a below b

// Partial order on a finite set of integers (at most 64 elements).
class FinitePoset {
 public:
  FinitePoset() = default;
  // Reflexive-transitive closure of `relations`; throws InvalidInput on a cycle.
  FinitePoset(std::vector<int> elements, const std::vector<Relation>& relations);

  static FinitePoset chain(const std::vector<int>& bottom_to_top);
  static FinitePoset antichain(std::vector<int> elements);
  // Poset on [n] with i below j iff g^{-1}(i) < g^{-1}(j).
  static FinitePoset linear(const Permutation& g);

  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int x) const;
  int index_of(int x) const;

  bool leq(int a, int b) const;
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  std::vector<Relation> strict_relations() const;
  std::vector<Relation> covers() const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  FinitePoset induced(const std::vector<int>& subset) const;
  FinitePoset dual() const;
  // Index reversal: the j-th smallest element plays the role of the j-th largest.
  FinitePoset reversed() const;
  // Relabel the sorted elements as 1..k (or any target list, same order).
  FinitePoset relabeled(const std::vector<int>& targets) const;

  std::uint64_t row(int idx) const { return rows_[idx]; }

  bool operator==(const FinitePoset&) const = default;
  auto operator<=>(const FinitePoset&) const = default;

 private:
  std::vector<int> elems_;
  std::vector<std::uint64_t> rows_;  // bit k of rows_[j]: elems_[j] below-or-equal elems_[k]
};

// Partial order on [-n, n] with i below j iff -j below -i.
class BnPoset {
 public:
  BnPoset();  // rank 0
  // Closes `relations`; with `symmetrize` the mirror of every pair is added first.
  static BnPoset from_relations(int n, const std::vector<Relation>& relations, bool symmetrize = false);
  static BnPoset from_poset(const FinitePoset& p);
  // The chain g(-n) < ... < g(n).
  static BnPoset linear(const SignedPermutation& g);

  int rank() const { return n_; }
  const FinitePoset& poset() const { return p_; }
  bool leq(int a, int b) const { return p_.leq(a, b); }
  bool less(int a, int b) const { return p_.less(a, b); }
  bool comparable(int a, int b) const { return p_.comparable(a, b); }
  std::vector<Relation> covers() const { return p_.covers(); }
  std::vector<Relation> strict_relations() const { return p_.strict_relations(); }

  BnPoset dual() const;
  BnPoset reversed() const;

  bool operator==(const BnPoset&) const = default;
  auto operator<=>(const BnPoset&) const = default;

 private:
  BnPoset(int n, FinitePoset p) : n_(n), p_(std::move(p)) {}
  int n_ = 0;
  FinitePoset p_;
};

// Validates a square boolean matrix indexed by [-n,n] (row a, column b: a below b).
BnPoset validate_bn(int n, const std::vector<std::vector<bool>>& relation);

std::vector<int> signed_range(int n);  // -n..n

// Every B_n poset (n <= 2), sorted.
std::vector<BnPoset> enumerate_bn_posets(int n);
// Every poset on [n] (n <= 4), sorted.
std::vector<FinitePoset> enumerate_posets_A(int n);

// Intersection of k random chains L_sigma, k uniform in {1,2,3}; always distinguished.
BnPoset random_distinguished_poset(int n, std::mt19937_64& rng);
// Symmetric random relation closure with rejection of cycles.
BnPoset random_bn_poset(int n, std::mt19937_64& rng);
FinitePoset random_poset_A(int n, std::mt19937_64& rng);

std::string relations_string(const std::vector<Relation>& r);

}  // namespace bposet
