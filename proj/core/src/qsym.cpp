#include "bposet/qsym.hpp"

#include <algorithm>
#include <functional>

namespace bposet {

QSymElement F(const CompositionA& a) { return QSymElement::single(Basis::Fundamental, a); }
QSymElement M(const CompositionA& a) { return QSymElement::single(Basis::Monomial, a); }
QSymBElement FB(const CompositionB& a) { return QSymBElement::single(Basis::Fundamental, a); }
QSymBElement MB(const CompositionB& a) { return QSymBElement::single(Basis::Monomial, a); }
QSymElement F_of_set(int n, const IndexSet& s) { return F(comp(n, s)); }
QSymBElement FB_of_set(int n, const IndexSet& s) { return FB(comp_B(n, s)); }

namespace {

// Calls f(superset) for every S with base ⊆ S ⊆ [lo, n-1].
void for_each_superset(int n, int lo, const IndexSet& base, const std::function<void(const IndexSet&)>& f) {
  std::vector<int> free;
  for (int i = lo; i < n; ++i)
    if (!std::binary_search(base.begin(), base.end(), i)) free.push_back(i);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    IndexSet s = base;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mask >> k & 1U) s.push_back(free[k]);
    std::sort(s.begin(), s.end());
    f(s);
  }
}

template <class Comp>
GradedElement<Comp> convert(const GradedElement<Comp>& f, Basis target, int lo) {
  if (f.is_zero()) return GradedElement<Comp>(target);
  if (f.basis() == target) return f;
  GradedElement<Comp> out(target);
  for (const auto& [d, terms] : f.graded()) {
    for (const auto& [c, k] : terms) {
      const IndexSet s = c.set();
      if (d == 0) {
        out.add(c, k);
        continue;
      }
      if (target == Basis::Monomial) {
        for_each_superset(d, lo, s, [&](const IndexSet& t) { out.add(Comp::from_set(d, t), k); });
      } else {
        // Moebius inversion over the boolean lattice: sign by the size difference.
        for_each_superset(d, lo, s, [&](const IndexSet& t) {
          bool odd = (t.size() - s.size()) % 2 == 1;
          out.add(Comp::from_set(d, t), odd ? Integer(-k) : k);
        });
      }
    }
  }
  return out;
}

}  // namespace

QSymElement to_monomial(const QSymElement& f) { return convert(f, Basis::Monomial, 1); }
QSymElement to_fundamental(const QSymElement& f) { return convert(f, Basis::Fundamental, 1); }
QSymBElement to_monomial(const QSymBElement& f) { return convert(f, Basis::Monomial, 0); }
QSymBElement to_fundamental(const QSymBElement& f) { return convert(f, Basis::Fundamental, 0); }

QSymBElement fundamental_to_monomial_B(const QSymBElement& f) {
  if (!f.is_zero() && f.basis() != Basis::Fundamental) throw InvalidInput("expected the fundamental basis");
  return to_monomial(f);
}

QSymBElement monomial_to_fundamental_B(const QSymBElement& f) {
  if (!f.is_zero() && f.basis() != Basis::Monomial) throw InvalidInput("expected the monomial basis");
  return to_fundamental(f);
}

// ---- TruncatedPoly ----

void TruncatedPoly::add(const std::vector<int>& e, const Integer& k) {
  if (k == 0) return;
  auto [it, fresh] = terms.emplace(e, k);
  if (!fresh) {
    it->second += k;
    if (it->second == 0) terms.erase(it);
  }
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& o) {
  if (o.num_vars != num_vars || o.first_index != first_index) throw InvalidInput("polynomial alphabets differ");
  for (const auto& [e, k] : o.terms) add(e, k);
  return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.num_vars != b.num_vars || a.first_index != b.first_index) throw InvalidInput("polynomial alphabets differ");
  TruncatedPoly r{a.num_vars, a.first_index, {}};
  for (const auto& [ea, ka] : a.terms)
    for (const auto& [eb, kb] : b.terms) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add(e, ka * kb);
    }
  return r;
}

std::string TruncatedPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, k] = *it;
    os << (first ? "" : " + ") << k;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (first_index + static_cast<int>(i));
      if (e[i] > 1) os << '^' << e[i];
    }
    first = false;
  }
  return os.str();
}

TruncatedPoly zero_poly_A(int V) { return TruncatedPoly{V, 1, {}}; }
TruncatedPoly zero_poly_B(int V) { return TruncatedPoly{V + 1, 0, {}}; }

namespace {

// 0 = i_0 <= i_1 <= ... <= i_n <= V with i_j < i_{j+1} whenever j is in `strict`.
void expand_fundamental_B(int n, const IndexSet& strict, int V, const Integer& k, TruncatedPoly& out) {
  std::vector<int> e(out.num_vars, 0);
  std::function<void(int, int)> rec = [&](int j, int prev) {
    if (j == n) {
      out.add(e, k);
      return;
    }
    bool strict_here = std::binary_search(strict.begin(), strict.end(), j);
    for (int i = strict_here ? prev + 1 : prev; i <= V; ++i) {
      ++e[i];
      rec(j + 1, i);
      --e[i];
    }
  };
  rec(0, 0);
}

}  // namespace

TruncatedPoly expand_truncated(const QSymElement& f, int V) {
  TruncatedPoly out = zero_poly_A(V);
  for (const auto& [d, terms] : f.graded()) {
    for (const auto& [c, k] : terms) {
      if (f.basis() == Basis::Fundamental) {
        // i_1 >= 1; a strict step j in I means i_j < i_{j+1}.
        IndexSet s = c.set();
        std::vector<int> e(V, 0);
        std::function<void(int, int)> rec = [&](int j, int prev) {
          if (j == d) {
            out.add(e, k);
            return;
          }
          bool strict_here = j > 0 && std::binary_search(s.begin(), s.end(), j);
          for (int i = std::max(1, strict_here ? prev + 1 : prev); i <= V; ++i) {
            ++e[i - 1];
            rec(j + 1, i);
            --e[i - 1];
          }
        };
        rec(0, 1);
      } else {
        std::vector<int> e(V, 0);
        const auto& p = c.parts();
        std::function<void(std::size_t, int)> rec = [&](std::size_t j, int prev) {
          if (j == p.size()) {
            out.add(e, k);
            return;
          }
          for (int i = prev + 1; i <= V; ++i) {
            e[i - 1] += p[j];
            rec(j + 1, i);
            e[i - 1] -= p[j];
          }
        };
        rec(0, 0);
      }
    }
  }
  return out;
}

TruncatedPoly expand_truncated(const QSymBElement& f, int V) {
  TruncatedPoly out = zero_poly_B(V);
  for (const auto& [d, terms] : f.graded()) {
    for (const auto& [c, k] : terms) {
      if (f.basis() == Basis::Fundamental) {
        expand_fundamental_B(d, c.set(), V, k, out);
      } else {
        const auto& p = c.parts();
        if (p.empty()) {
          out.add(std::vector<int>(V + 1, 0), k);
          continue;
        }
        std::vector<int> e(V + 1, 0);
        e[0] = p[0];
        std::function<void(std::size_t, int)> rec = [&](std::size_t j, int prev) {
          if (j == p.size()) {
            out.add(e, k);
            return;
          }
          for (int i = prev + 1; i <= V; ++i) {
            e[i] += p[j];
            rec(j + 1, i);
            e[i] -= p[j];
          }
        };
        rec(1, 0);
      }
    }
  }
  return out;
}

}  // namespace bposet
