#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bposet/composition.hpp"

namespace bposet {

using Integer = boost::multiprecision::cpp_int;

enum class Basis { Monomial, Fundamental };

inline std::string basis_symbol(Basis b, const CompositionA*) { return b == Basis::Monomial ? "M" : "F"; }
inline std::string basis_symbol(Basis b, const CompositionB*) { return b == Basis::Monomial ? "M^B" : "F^B"; }

// Exact linear combination of basis elements, stored per degree. Zero coefficients are never kept.
template <class Comp>
class GradedElement {
 public:
  using Terms = std::map<Comp, Integer>;

  GradedElement() = default;
  explicit GradedElement(Basis b) : basis_(b) {}

  static GradedElement single(Basis b, const Comp& c, const Integer& k = 1) {
    GradedElement e(b);
    e.add(c, k);
    return e;
  }

  Basis basis() const { return basis_; }
  const std::map<int, Terms>& graded() const { return graded_; }

  void add(const Comp& c, const Integer& k) {
    if (k == 0) return;
    auto& bucket = graded_[c.size()];
    auto [it, fresh] = bucket.emplace(c, k);
    if (!fresh) {
      it->second += k;
      if (it->second == 0) bucket.erase(it);
    }
    if (bucket.empty()) graded_.erase(c.size());
  }

  Integer coeff(const Comp& c) const {
    auto g = graded_.find(c.size());
    if (g == graded_.end()) return 0;
    auto it = g->second.find(c);
    return it == g->second.end() ? Integer(0) : it->second;
  }

  Terms terms() const {
    Terms all;
    for (const auto& [d, t] : graded_) all.insert(t.begin(), t.end());
    return all;
  }

  Terms homogeneous(int d) const {
    auto g = graded_.find(d);
    return g == graded_.end() ? Terms{} : g->second;
  }

  bool is_zero() const { return graded_.empty(); }
  std::size_t num_terms() const {
    std::size_t c = 0;
    for (const auto& [d, t] : graded_) c += t.size();
    return c;
  }

  GradedElement& operator+=(const GradedElement& o) {
    if (!o.is_zero() && !is_zero() && o.basis_ != basis_) throw InvalidInput("adding elements in different bases");
    if (is_zero()) basis_ = o.basis_;
    for (const auto& [d, t] : o.graded_)
      for (const auto& [c, k] : t) add(c, k);
    return *this;
  }
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator*(const Integer& k, const GradedElement& a) {
    GradedElement r(a.basis_);
    for (const auto& [d, t] : a.graded_)
      for (const auto& [c, v] : t) r.add(c, k * v);
    return r;
  }

  bool operator==(const GradedElement& o) const {
    if (is_zero() && o.is_zero()) return true;
    return basis_ == o.basis_ && graded_ == o.graded_;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const std::string sym = basis_symbol(basis_, static_cast<const Comp*>(nullptr));
    for (const auto& [d, t] : graded_) {
      for (const auto& [c, k] : t) {
        Integer a = k < 0 ? Integer(-k) : k;
        if (first)
          os << (k < 0 ? "-" : "");
        else
          os << (k < 0 ? " - " : " + ");
        if (a != 1) os << a << '*';
        os << sym << '[' << c.str() << ']';
        first = false;
      }
    }
    return os.str();
  }

 private:
  Basis basis_ = Basis::Fundamental;
  std::map<int, Terms> graded_;
};

using QSymElement = GradedElement<CompositionA>;
using QSymBElement = GradedElement<CompositionB>;

QSymElement F(const CompositionA& a);
QSymElement M(const CompositionA& a);
QSymBElement FB(const CompositionB& a);
QSymBElement MB(const CompositionB& a);
QSymElement F_of_set(int n, const IndexSet& s);
QSymBElement FB_of_set(int n, const IndexSet& s);

QSymElement to_monomial(const QSymElement& f);
QSymElement to_fundamental(const QSymElement& f);
QSymBElement to_monomial(const QSymBElement& f);
QSymBElement to_fundamental(const QSymBElement& f);

// Strict: throw if the input is not in the expected basis.
QSymBElement fundamental_to_monomial_B(const QSymBElement& f);
QSymBElement monomial_to_fundamental_B(const QSymBElement& f);

// Polynomial in finitely many commuting variables.
struct TruncatedPoly {
  int num_vars = 0;
  int first_index = 0;  // variable slot k is x_{first_index + k}
  std::map<std::vector<int>, Integer> terms;

  void add(const std::vector<int>& exponents, const Integer& k);
  TruncatedPoly& operator+=(const TruncatedPoly& o);
  friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
  bool operator==(const TruncatedPoly& o) const {
    return num_vars == o.num_vars && first_index == o.first_index && terms == o.terms;
  }
  std::string str() const;
};

TruncatedPoly zero_poly_A(int V);
TruncatedPoly zero_poly_B(int V);

// Variables x_1..x_V.
TruncatedPoly expand_truncated(const QSymElement& f, int V);
// Variables x_0..x_V.
TruncatedPoly expand_truncated(const QSymBElement& f, int V);

}  // namespace bposet
