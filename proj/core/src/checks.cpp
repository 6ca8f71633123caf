#include "bposet/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "bposet/errors.hpp"
#include "bposet/extensions.hpp"
#include "bposet/hecke_ops.hpp"
#include "bposet/intervals.hpp"
#include "bposet/io.hpp"
#include "bposet/qsym_ops.hpp"
#include "bposet/regular.hpp"
#include "bposet/restriction.hpp"
#include "bposet/surgery.hpp"

namespace bposet {

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseReport& c) { return !c.pass; }));
}

std::string SuiteReport::summary() const {
  return suite + ": " + std::to_string(cases.size() - failures()) + "/" + std::to_string(cases.size()) + " cases passed";
}

void SuiteReport::append(const SuiteReport& other) { cases.insert(cases.end(), other.cases.begin(), other.cases.end()); }

namespace {

// A case body records its first failure through `fail`; exceptions count as failures.
class Case {
 public:
  explicit Case(std::string name) { rep_.name = std::move(name); }
  void fail(const std::string& msg) {
    if (rep_.pass) rep_.details = msg;
    rep_.pass = false;
  }
  bool ok() const { return rep_.pass; }
  void note(const std::string& msg) {
    if (rep_.pass) rep_.details = msg;
  }
  CaseReport& report() { return rep_; }

 private:
  CaseReport rep_;
};

void run_case(SuiteReport& s, const std::string& name, const std::function<void(Case&)>& body) {
  Case c(name);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  s.cases.push_back(c.report());
}

std::string dump(const BnPoset& P) { return "poset=" + poset_to_json(P); }

std::string dump(const FinitePoset& P) {
  std::string s = "poset_A={elements:[";
  for (std::size_t i = 0; i < P.elements().size(); ++i) s += (i ? "," : "") + std::to_string(P.elements()[i]);
  return s + "],relations:" + relations_string(P.covers()) + "}";
}

int truncation(const CheckOptions& o, int r) { return o.trunc > 0 ? o.trunc : r + 1; }

std::vector<FinitePoset> posets_A(int k) {
  if (k == 0) return {FinitePoset({}, {})};
  return enumerate_posets_A(k);
}

std::vector<BnPoset> posets_B(int m, int samples, unsigned seed) {
  if (m == 0) return {BnPoset()};
  return poset_family(m, samples, seed);
}

template <class Comp>
std::optional<std::vector<Comp>> support_multiset(const GradedElement<Comp>& f) {
  std::vector<Comp> out;
  for (const auto& [c, k] : f.terms()) {
    if (k < 0) return std::nullopt;
    for (Integer i = 0; i < k; ++i) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string list_str(const std::vector<CompositionB>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

int sign_of_length(const std::vector<int>& w, HeckeType t) {
  const int len = t == HeckeType::B ? SignedPermutation(w).length() : Permutation(w).length();
  return len % 2 ? -1 : 1;
}

// gamma -> (-1)^l(gamma) gamma, from theta[M] to the sf-module on the same labels.
DenseMatrixQ sign_map(const HeckeModule& thetaM, const HeckeModule& sf) {
  const HeckeType t = thetaM.type();
  return label_map(thetaM, sf, [t](const std::vector<int>& w) { return std::make_pair(w, sign_of_length(w, t)); });
}

DenseMatrixQ same_label_map(const HeckeModule& a, const HeckeModule& b) {
  return label_map(a, b, [](const std::vector<int>& w) { return std::make_pair(w, 1); });
}

// Label candidate first, generic solver as fallback; `how` says which one worked.
DenseMatrixQ type_A_iso(const HeckeModule& from, const HeckeModule& to, std::string& how) {
  try {
    DenseMatrixQ X = same_label_map(from, to);
    if (certify_with_map(from, to, X).ok()) {
      how = "label";
      return X;
    }
  } catch (const InvalidInput&) {
  }
  auto c = certify_isomorphism(from, to);
  if (!c.ok()) throw InternalError("type-A twist isomorphism not found: " + to_string(c.status));
  how = "solver";
  return c.map;
}

void expect_cert(Case& c, const IsoCertificate& cert, const std::string& what) {
  if (!cert.ok()) c.fail(what + ": " + to_string(cert.status) + " (" + cert.detail + ")");
}

}  // namespace

std::vector<BnPoset> poset_family(int n, int samples, unsigned seed) {
  if (n <= 2) return enumerate_bn_posets(n);
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned>(n));
  std::vector<BnPoset> out;
  for (int k = 0; k < samples; ++k) out.push_back(k % 2 == 0 ? random_distinguished_poset(n, rng) : random_bn_poset(n, rng));
  return out;
}

// ---------------------------------------------------------------- relations

SuiteReport check_relations(const CheckOptions& o) {
  SuiteReport s{"relations", {}};
  std::mt19937_64 rng(o.seed);
  for (int r = 1; r <= o.n; ++r) {
    const auto family = poset_family(r, o.samples, o.seed);
    run_case(s, "poset modules n=" + std::to_string(r), [&](Case& c) {
      std::size_t checked = 0;
      for (const auto& P : family) {
        std::vector<HeckeModule> mods;
        const auto M = module_MBP(P), sf = module_sfMBP(P);
        mods = {M, sf, twist_theta(M), twist_chi(M), twist_theta(sf), twist_chi(sf), twist_theta(twist_chi(M))};
        for (int m = 0; m <= r; ++m) {
          auto R = restrict(M, m);
          mods.push_back(R.restricted);
          mods.push_back(R.sum);
          mods.insert(mods.end(), R.factors.begin(), R.factors.end());
        }
        for (const auto& X : mods) {
          auto bad = relation_failures(X);
          ++checked;
          if (!bad.empty()) {
            c.fail(X.name() + ": " + bad.front() + "; " + dump(P));
            return;
          }
        }
      }
      c.note(std::to_string(family.size()) + " posets, " + std::to_string(checked) + " modules");
    });
    run_case(s, "interval modules n=" + std::to_string(r), [&](Case& c) {
      const auto ivs = all_intervals(r);
      for (const auto& I : ivs) {
        auto B = wbim(I);
        for (const auto& X : {B, twist_theta(B), twist_chi(B)}) {
          auto bad = relation_failures(X);
          if (!bad.empty()) {
            c.fail(X.name() + ": " + bad.front());
            return;
          }
        }
      }
      c.note(std::to_string(ivs.size()) + " intervals");
    });
    run_case(s, "induced modules n=" + std::to_string(r), [&](Case& c) {
      std::size_t checked = 0;
      for (int m = 0; m < r; ++m) {
        const int k = r - m;
        const auto fb = posets_B(m, std::max(4, o.samples / 10), o.seed + 7);
        const auto fa = posets_A(k);
        for (int t = 0; t < 6; ++t) {
          const auto& P1 = fb[std::uniform_int_distribution<std::size_t>(0, fb.size() - 1)(rng)];
          const auto& P2 = fa[std::uniform_int_distribution<std::size_t>(0, fa.size() - 1)(rng)];
          auto ind = tensor_induce(module_MBP(P1), module_MP_typeA(P2)).module;
          for (const auto& X : {ind, twist_theta(ind), twist_chi(ind)}) {
            ++checked;
            auto bad = relation_failures(X);
            if (!bad.empty()) {
              c.fail(X.name() + ": " + bad.front() + "; " + dump(P1) + " " + dump(P2));
              return;
            }
          }
        }
      }
      c.note(std::to_string(checked) + " modules");
    });
  }
  return s;
}

// ---------------------------------------------------------------- partitions

SuiteReport check_characteristic(const CheckOptions& o) {
  SuiteReport s{"characteristic", {}};
  for (int r = 1; r <= o.n; ++r) {
    const int V = truncation(o, r);
    const auto family = poset_family(r, o.samples, o.seed);
    run_case(s, "ch^B(M^B_P) = K^B_P n=" + std::to_string(r) + " V=" + std::to_string(V), [&](Case& c) {
      for (const auto& P : family) {
        const auto lhs = expand_truncated(characteristic_B(module_MBP(P)), V);
        const auto rhs = kbp_from_partitions(P, V);
        if (!(lhs == rhs)) {
          c.fail("truncations differ; " + dump(P));
          return;
        }
      }
      c.note(std::to_string(family.size()) + " posets");
    });
  }
  return s;
}

SuiteReport check_fundamental_theorem(const CheckOptions& o) {
  SuiteReport s{"fundamental-theorem", {}};
  constexpr int kBound = 3;
  for (int r = 1; r <= o.n; ++r) {
    const auto family = poset_family(r, o.samples, o.seed);
    run_case(s, "A^B(P) partition over extensions n=" + std::to_string(r), [&](Case& c) {
      std::size_t total = 0;
      for (const auto& P : family) {
        auto all = p_partitions_bounded(P, kBound);
        std::sort(all.begin(), all.end());
        std::map<TypeBPartition, int> owner;
        for (const auto& E : linear_extensions_B(P))
          for (const auto& f : p_partitions_bounded(BnPoset::linear(E), kBound))
            if (++owner[f] > 1) {
              c.fail("a P-partition lies in two extension classes; " + dump(P) + " ext=" + E.str());
              return;
            }
        if (owner.size() != all.size() ||
            !std::all_of(all.begin(), all.end(), [&](const TypeBPartition& f) { return owner.count(f) == 1; })) {
          c.fail("union over extensions differs from A^B(P); " + dump(P));
          return;
        }
        total += all.size();
      }
      c.note(std::to_string(family.size()) + " posets, " + std::to_string(total) + " P-partitions");
    });
  }
  return s;
}

// ---------------------------------------------------------------- grothendieck

SuiteReport check_grothendieck(const CheckOptions& o) {
  SuiteReport s{"grothendieck", {}};
  for (int r = 1; r <= o.n; ++r) {
    const auto family = poset_family(r, o.samples, o.seed);
    run_case(s, "decomposition matches K^B_P n=" + std::to_string(r), [&](Case& c) {
      std::size_t idx = 0;
      for (const auto& P : family) {
        const auto expect = support_multiset(kbp(P));
        const auto got = grothendieck_decompose(P);
        if (!expect || got != *expect) {
          c.fail("decomposition " + list_str(got) + " vs K^B_P " + kbp(P).str() + "; " + dump(P));
          return;
        }
        for (auto ch : {PairChoice::Last, PairChoice::Random})
          if (grothendieck_decompose(P, ch, o.seed + static_cast<unsigned>(idx)) != got) {
            c.fail("pair choice changes the decomposition; " + dump(P));
            return;
          }
        if (r <= 2 || idx < 10) {
          auto all = grothendieck_decompose_all_orders(P);
          if (!all || *all != got) {
            c.fail("some order of pair choices disagrees; " + dump(P));
            return;
          }
        }
        const auto ext = linear_extensions_B(P).size();
        for (auto [u, v] : incB(P))
          if (linear_extensions_B(extend_pair(P, u, v)).size() + linear_extensions_B(extend_pair(P, v, u)).size() != ext) {
            c.fail("extension counts do not split along (" + std::to_string(u) + "," + std::to_string(v) + "); " + dump(P));
            return;
          }
        ++idx;
      }
      c.note(std::to_string(family.size()) + " posets");
    });
  }
  return s;
}

// ---------------------------------------------------------------- induction

SuiteReport check_induction(const CheckOptions& o) {
  SuiteReport s{"induction", {}};
  std::mt19937_64 rng(o.seed);
  for (int total = 1; total <= o.n; ++total)
    for (int m = 0; m <= total; ++m) {
      const int k = total - m;
      run_case(s, "induction m=" + std::to_string(m) + " n=" + std::to_string(k), [&](Case& c) {
        const auto fb = posets_B(m, o.samples, o.seed);
        const auto fa = posets_A(k);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        if (fb.size() * fa.size() <= 400) {
          for (std::size_t i = 0; i < fb.size(); ++i)
            for (std::size_t j = 0; j < fa.size(); ++j) pairs.emplace_back(i, j);
        } else {
          for (int t = 0; t < o.samples; ++t)
            pairs.emplace_back(std::uniform_int_distribution<std::size_t>(0, fb.size() - 1)(rng),
                               std::uniform_int_distribution<std::size_t>(0, fa.size() - 1)(rng));
        }
        std::size_t modules = 0;
        for (auto [i, j] : pairs) {
          const BnPoset& P1 = fb[i];
          const FinitePoset& P2 = fa[j];
          const std::string where = dump(P1) + " " + dump(P2);
          const BnPoset U = disjoint_union_B(P1, P2);
          const auto S1 = linear_extensions_B(P1);
          const auto S2 = linear_extensions_A(P2);
          auto shuffled = shuffle_B_coset(S1, S2);
          std::sort(shuffled.begin(), shuffled.end());
          const auto SU = linear_extensions_B(U);
          if (shuffled != SU) {
            c.fail("shuffle of extension sets differs from extensions of the union; " + where);
            return;
          }
          QSymBElement huang(Basis::Fundamental);
          for (const auto& g1 : S1)
            for (const auto& g2 : S2) huang += action_odotB(g1, g2);
          const auto K = kbp(U);
          if (!(huang == K) || !(action_odotB(kbp(P1), kp(P2)) == K)) {
            c.fail("K^B_P1 odot K_P2 = " + huang.str() + " but K^B of the union is " + K.str() + "; " + where);
            return;
          }
          if (static_cast<int>(SU.size()) > 64) continue;
          for (ActionFlavor f : {ActionFlavor::Bar, ActionFlavor::Pi}) {
            const bool bar = f == ActionFlavor::Bar;
            auto X = bar ? module_MBP(P1) : module_sfMBP(P1);
            auto Y = bar ? module_MP_typeA(P2) : module_sfMP_typeA(P2);
            auto res = induce(X, Y);
            expect_cert(c, certify_with_map(res.induced.module, res.module, res.iso_map),
                        std::string(bar ? "M" : "sfM") + " induction map; " + where);
            if (bar && !(characteristic_B(res.module) == action_odotB(characteristic_B(X), characteristic_A(Y))))
              c.fail("characteristic of the induced module; " + where);
            if (!c.ok()) return;
            ++modules;
          }
        }
        c.note(std::to_string(pairs.size()) + " poset pairs, " + std::to_string(modules) + " induced modules certified");
      });
    }
  return s;
}

// ---------------------------------------------------------------- restriction

SuiteReport check_restriction(const CheckOptions& o) {
  SuiteReport s{"restriction", {}};
  for (int r = 1; r <= o.n; ++r) {
    const auto family = poset_family(r, o.samples, o.seed);
    for (int m = 0; m <= r; ++m)
      run_case(s, "restriction n=" + std::to_string(r) + " m=" + std::to_string(m), [&](Case& c) {
        std::size_t summands = 0;
        for (const auto& P : family) {
          const std::string where = dump(P) + " m=" + std::to_string(m);
          const auto ext = linear_extensions_B(P);
          const auto summ = restriction_summands(P, m);
          summands += summ.size();
          std::vector<std::set<SignedPermutation>> sb;
          std::vector<std::set<Permutation>> sa;
          std::size_t expected = 0;
          for (const auto& t : summ) {
            auto b = linear_extensions_B(t.stQ);
            auto a = linear_extensions_A(t.stU);
            expected += b.size() * a.size();
            sb.emplace_back(b.begin(), b.end());
            sa.emplace_back(a.begin(), a.end());
          }
          if (expected != ext.size()) {
            c.fail("summand sizes add to " + std::to_string(expected) + " not " + std::to_string(ext.size()) + "; " + where);
            return;
          }
          std::set<std::tuple<std::size_t, SignedPermutation, Permutation>> seen;
          for (const auto& g : ext) {
            const auto img = restriction_map(P, g, m);
            std::size_t k = 0;
            while (k < summ.size() && !(summ[k].Q == img.Q && summ[k].U == img.U)) ++k;
            if (k == summ.size() || !sb[k].count(img.g1) || !sa[k].count(img.g2)) {
              c.fail("image of " + g.str() + " is outside the summands; " + where);
              return;
            }
            if (!(conc(img.Q, img.U, img.g1, img.g2) == g)) {
              c.fail("conc does not invert the restriction map at " + g.str() + "; " + where);
              return;
            }
            seen.emplace(k, img.g1, img.g2);
          }
          if (seen.size() != ext.size()) {
            c.fail("restriction map is not injective; " + where);
            return;
          }
          for (ActionFlavor f : {ActionFlavor::Bar, ActionFlavor::Pi}) {
            auto M = f == ActionFlavor::Bar ? module_MBP(P) : module_sfMBP(P);
            auto R = restrict(M, m);
            expect_cert(c, certify_with_map(R.restricted, R.sum, signed_permutation_matrix(R.f_tilde)),
                        "restricted module vs direct sum; " + where);
            if (!c.ok()) return;
          }
          std::map<std::pair<CompositionB, CompositionA>, Integer> lhs, rhs;
          for (const auto& t : summ) {
            const auto fb = characteristic_B(module_MBP(t.stQ));
            const auto fa = characteristic_A(module_MP_typeA(t.stU));
            for (const auto& [cb, kb] : fb.terms())
              for (const auto& [ca, ka] : fa.terms()) lhs[{cb, ca}] += kb * ka;
          }
          for (const auto& term : coaction_deltaB(kbp(P)))
            if (term.left.size() == m) rhs[{term.left, term.right}] += term.coeff;
          auto clean = [](auto& mp) {
            for (auto it = mp.begin(); it != mp.end();) it = it->second == 0 ? mp.erase(it) : std::next(it);
          };
          clean(lhs);
          clean(rhs);
          if (lhs != rhs) {
            c.fail("summed characteristics differ from the coaction of K^B_P; " + where);
            return;
          }
        }
        c.note(std::to_string(family.size()) + " posets, " + std::to_string(summands) + " summands");
      });
  }
  return s;
}

// ---------------------------------------------------------------- twists

SuiteReport check_twists(const CheckOptions& o) {
  SuiteReport s{"twists", {}};
  for (int r = 1; r <= o.n; ++r) {
    const auto family = poset_family(r, o.samples, o.seed);
    run_case(s, "twisted poset modules n=" + std::to_string(r), [&](Case& c) {
      for (const auto& P : family) {
        const std::string where = dump(P);
        const auto M = module_MBP(P);
        const auto sf = module_sfMBP(P);
        const auto sfd = module_sfMBP(P.dual());
        const auto Md = module_MBP(P.dual());
        const auto th = twist_theta(M), ch = twist_chi(M), thch = twist_theta(ch);
        expect_cert(c, certify_with_map(th, sf, sign_map(th, sf)), "theta[M] vs sfM; " + where);
        expect_cert(c, certify_with_map(ch, sfd, same_label_map(ch, sfd)), "chi[M] vs sfM of the dual; " + where);
        expect_cert(c, certify_with_map(thch, Md, sign_map(thch, Md)), "theta chi[M] vs M of the dual; " + where);
        auto tt = twist_theta(th);
        if (tt.actions() != M.actions()) c.fail("theta is not an involution; " + where);
        if (!c.ok()) return;
      }
      c.note(std::to_string(family.size()) + " posets, 3 certificates each");
    });
  }
  s.append(check_twist_compatibility({{1, 1}, {1, 2}}));
  return s;
}

SuiteReport check_twist_compatibility(const std::vector<std::pair<int, int>>& shapes) {
  SuiteReport s{"twist-compatibility", {}};
  for (auto [m, k] : shapes) {
    const std::string shape = "m=" + std::to_string(m) + " n=" + std::to_string(k);
    const auto fb = posets_B(m, 20, 1);
    const auto fa = posets_A(k);
    run_case(s, "theta and chi commute with induction " + shape, [&](Case& c) {
      std::size_t solver_uses = 0;
      for (const auto& P1 : fb)
        for (const auto& P2 : fa) {
          const std::string where = dump(P1) + " " + dump(P2);
          const auto X = module_MBP(P1);
          const auto Y = module_MP_typeA(P2);
          const auto ind = induce(X, Y);
          const std::size_t D = ind.induced.deltas.size();
          const auto& MU = ind.module;
          {
            const auto lhs = twist_theta(ind.induced.module);
            const auto sfU = module_sfMBP(*MU.b_poset());
            const auto thU = twist_theta(MU);
            const DenseMatrixQ A = ind.iso_map * sign_map(thU, sfU);
            const auto tX = twist_theta(X), tY = twist_theta(Y);
            const auto rhs = tensor_induce(tX, tY).module;
            const auto sfX = module_sfMBP(P1);
            const auto sfY = module_sfMP_typeA(P2);
            const auto indsf = induce(sfX, sfY);
            const DenseMatrixQ B = induced_map(sign_map(tX, sfX), sign_map(tY, sfY), D) * indsf.iso_map;
            expect_cert(c, certify_with_map(lhs, sfU, A), "theta side of the induced module; " + where);
            expect_cert(c, certify_with_map(rhs, indsf.module, B), "induced theta twists; " + where);
            expect_cert(c, certify_with_map(lhs, rhs, A * B.inverse()), "theta compatibility; " + where);
          }
          {
            const auto lhs = twist_chi(ind.induced.module);
            const BnPoset Ud = MU.b_poset()->dual();
            const auto sfUd = module_sfMBP(Ud);
            const DenseMatrixQ A = dual_map(ind.iso_map) * same_label_map(twist_chi(MU), sfUd);
            const auto cX = twist_chi(X), cY = twist_chi(twist_phi(Y));
            const auto rhs = tensor_induce(cX, cY).module;
            const auto sfX = module_sfMBP(P1.dual());
            const auto sfY = module_sfMP_typeA(P2.dual());
            std::string how;
            const DenseMatrixQ g = type_A_iso(cY, sfY, how);
            if (how == "solver") ++solver_uses;
            const auto indsf = induce(sfX, sfY);
            if (!(*indsf.module.b_poset() == Ud)) c.fail("dual of a disjoint union is not the union of duals; " + where);
            const DenseMatrixQ B = induced_map(same_label_map(cX, sfX), g, D) * indsf.iso_map;
            expect_cert(c, certify_with_map(lhs, sfUd, A), "chi side of the induced module; " + where);
            expect_cert(c, certify_with_map(rhs, indsf.module, B), "induced chi/chi-phi twists; " + where);
            expect_cert(c, certify_with_map(lhs, rhs, A * B.inverse()), "chi compatibility; " + where);
          }
          if (!c.ok()) return;
        }
      c.note(std::to_string(fb.size() * fa.size()) + " pairs; type-A solver used " + std::to_string(solver_uses) + " times");
    });
    run_case(s, "theta and chi commute with restriction " + shape, [&](Case& c) {
      const int r = m + k;
      const auto family = poset_family(r, 20, 1);
      for (const auto& P : family) {
        const std::string where = dump(P) + " m=" + std::to_string(m);
        const auto M = module_MBP(P);
        const auto R = restrict(M, m);
        const DenseMatrixQ Ft = signed_permutation_matrix(R.f_tilde);
        {
          const auto lhs = restrict_module(twist_theta(M), m);
          const auto sf = module_sfMBP(P);
          const auto Rsf = restrict(sf, m);
          const DenseMatrixQ A = sign_map(twist_theta(M), sf) * signed_permutation_matrix(Rsf.f_tilde);
          const auto rhs = twist_theta(restrict_module(M, m));
          std::vector<DenseMatrixQ> blocks;
          for (const auto& t : R.summands) {
            const auto b = module_MBP(t.stQ), a = module_MP_typeA(t.stU);
            blocks.push_back(kron(sign_map(twist_theta(b), module_sfMBP(t.stQ)), sign_map(twist_theta(a), module_sfMP_typeA(t.stU))));
          }
          const DenseMatrixQ B = Ft * block_diagonal(blocks);
          expect_cert(c, certify_with_map(lhs, Rsf.sum, A), "theta[M] restricted vs sum; " + where);
          expect_cert(c, certify_with_map(rhs, Rsf.sum, B), "theta of the restriction vs sum; " + where);
          expect_cert(c, certify_with_map(lhs, rhs, A * B.inverse()), "theta restriction compatibility; " + where);
        }
        {
          const auto lhs = restrict_module(twist_chi(M), m);
          const BnPoset Pd = P.dual();
          const auto sfd = module_sfMBP(Pd);
          const auto Rsf = restrict(sfd, m);
          const DenseMatrixQ A = same_label_map(twist_chi(M), sfd) * signed_permutation_matrix(Rsf.f_tilde);
          const auto rhs = twist_chi(restrict_module(M, m));
          std::vector<DenseMatrixQ> blocks;
          std::vector<HeckeModule> targets;
          std::vector<std::pair<BnPoset, FinitePoset>> keys;
          for (const auto& t : R.summands) {
            const auto b = twist_chi(module_MBP(t.stQ)), a = twist_chi(module_MP_typeA(t.stU));
            const auto sb = module_sfMBP(t.stQ.dual());
            const auto sa = module_sfMP_typeA(t.stU.reversed());
            std::string how;
            blocks.push_back(kron(same_label_map(b, sb), type_A_iso(a, sa, how)));
            targets.push_back(tensor_BA(sb, sa));
            keys.emplace_back(t.stQ.dual(), t.stU.reversed());
          }
          const auto SR = direct_sum(targets);
          const DenseMatrixQ B = dual_map(Ft) * block_diagonal(blocks);
          // Match the summands over the dual poset with the twisted summands.
          std::vector<int> offL, offR;
          int acc = 0;
          for (const auto& f : Rsf.factors) {
            offL.push_back(acc);
            acc += f.dim();
          }
          acc = 0;
          for (const auto& f : targets) {
            offR.push_back(acc);
            acc += f.dim();
          }
          std::vector<bool> used(keys.size(), false);
          std::vector<int> perm(M.dim(), -1);
          for (std::size_t i = 0; i < Rsf.summands.size(); ++i) {
            std::size_t j = 0;
            while (j < keys.size() &&
                   (used[j] || !(keys[j].first == Rsf.summands[i].stQ && keys[j].second == Rsf.summands[i].stU)))
              ++j;
            if (j == keys.size()) {
              c.fail("summands over the dual poset do not match the twisted summands; " + where);
              return;
            }
            used[j] = true;
            for (int d = 0; d < Rsf.factors[i].dim(); ++d) perm[offL[i] + d] = offR[j] + d;
          }
          const DenseMatrixQ Pi = signed_permutation_matrix(perm);
          expect_cert(c, certify_with_map(lhs, Rsf.sum, A), "chi[M] restricted vs sum over the dual; " + where);
          expect_cert(c, certify_with_map(rhs, SR, B), "chi of the restriction vs twisted sum; " + where);
          expect_cert(c, certify_with_map(Rsf.sum, SR, Pi), "summand matching; " + where);
          expect_cert(c, certify_with_map(lhs, rhs, A * Pi * B.inverse()), "chi restriction compatibility; " + where);
        }
        if (!c.ok()) return;
      }
      c.note(std::to_string(family.size()) + " posets");
    });
  }
  return s;
}

// ---------------------------------------------------------------- distinguished

SuiteReport check_distinguished(const CheckOptions& o) {
  SuiteReport s{"distinguished", {}};
  for (int r = 1; r <= std::min(o.n, 2); ++r)
    run_case(s, "one distinguished poset per extension class n=" + std::to_string(r), [&](Case& c) {
      const auto all = enumerate_bn_posets(r);
      std::map<std::vector<SignedPermutation>, std::vector<BnPoset>> classes;
      for (const auto& P : all) classes[linear_extensions_B(P)].push_back(P);
      for (const auto& [ext, members] : classes) {
        std::vector<BnPoset> dist;
        for (const auto& P : members)
          if (is_distinguished(P)) dist.push_back(P);
        if (dist.size() != 1) {
          c.fail(std::to_string(dist.size()) + " distinguished posets share one extension class; " + dump(members.front()));
          return;
        }
        if (!(dist.front() == poset_of(ext))) {
          c.fail("distinguished representative is not poset(Sigma); " + dump(dist.front()));
          return;
        }
        for (const auto& P : members)
          if (!(distinguished_representative(P) == dist.front())) {
            c.fail("representative map disagrees; " + dump(P));
            return;
          }
      }
      c.note(std::to_string(all.size()) + " posets in " + std::to_string(classes.size()) + " classes");
    });
  return s;
}

// ---------------------------------------------------------------- regular intervals

SuiteReport check_regular_intervals(const CheckOptions& o) {
  SuiteReport s{"regular-interval", {}};
  for (int r = 1; r <= o.n; ++r)
    run_case(s, "intervals are regular posets n=" + std::to_string(r), [&](Case& c) {
      const auto ivs = all_intervals(r);
      for (const auto& I : ivs) {
        const auto P = poset_of({I.bottom(), I.top()});
        const std::string where = "[" + I.bottom().str() + "," + I.top().str() + "]";
        if (!is_regular(P)) {
          c.fail("poset of " + where + " is not regular; " + dump(P));
          return;
        }
        auto elems = I.elements();
        std::sort(elems.begin(), elems.end());
        if (linear_extensions_B(P) != elems) {
          c.fail("extensions of the poset of " + where + " differ from the interval");
          return;
        }
        auto [a, b] = sigma_rho_endpoints(P);
        if (!(a == I.bottom() && b == I.top())) {
          c.fail("endpoint algorithm returned [" + a.str() + "," + b.str() + "] for " + where);
          return;
        }
      }
      if (r <= 2) {
        for (const auto& P : enumerate_bn_posets(r)) {
          if (!is_regular(P)) continue;
          auto [a, b] = sigma_rho_endpoints(P);
          auto iv = interval_R(a, b);
          std::sort(iv.begin(), iv.end());
          if (linear_extensions_B(P) != iv) {
            c.fail("regular poset whose extensions are not an interval; " + dump(P));
            return;
          }
        }
      }
      c.note(std::to_string(ivs.size()) + " comparable pairs");
    });
  return s;
}

// ---------------------------------------------------------------- wbim

SuiteReport check_wbim(const CheckOptions& o) {
  SuiteReport s{"wbim", {}};
  for (int r = 1; r <= o.n; ++r) {
    const auto ivs = all_intervals(r);
    run_case(s, "B(I) decompositions n=" + std::to_string(r), [&](Case& c) {
      std::set<CompositionB> hit;
      for (const auto& I : ivs) {
        const std::string where = "[" + I.bottom().str() + "," + I.top().str() + "]";
        const auto B = wbim(I);
        const auto M = module_MBP(poset_of({I.bottom(), I.top()}));
        expect_cert(c, certify_with_map(B, M, same_label_map(B, M)), "B(I) vs poset module " + where);
        const auto parts = interval_simple_decomposition(I);
        const auto expect = support_multiset(characteristic_B(B));
        if (!expect || parts != *expect) c.fail("split decomposition " + list_str(parts) + " vs ch " + where);
        hit.insert(parts.begin(), parts.end());
        if (I.bottom() != I.top()) {
          auto [lo, hi] = split_interval(I);
          auto e1 = lo.elements(), e2 = hi.elements();
          std::sort(e1.begin(), e1.end());
          std::sort(e2.begin(), e2.end());
          std::vector<int> i1, i2;
          for (const auto& g : e1) i1.push_back(B.index_of_label(g.window()));
          for (const auto& g : e2) i2.push_back(B.index_of_label(g.window()));
          if (e1.size() + e2.size() != static_cast<std::size_t>(B.dim()) ||
              std::count(i1.begin(), i1.end(), -1) + std::count(i2.begin(), i2.end(), -1) != 0)
            c.fail("split parts do not partition " + where);
          else if (!is_submodule(B, i2))
            c.fail("top part is not a submodule of " + where);
          else if (subquotient(B, i2).actions() != wbim(hi).actions() || subquotient(B, i1).actions() != wbim(lo).actions())
            c.fail("submodule or quotient of " + where + " differs from the split interval modules");
        }
        if (!c.ok()) return;
      }
      const auto all = all_compositions_B(r);
      if (hit.size() != all.size()) {
        c.fail("class map reaches " + std::to_string(hit.size()) + " of " + std::to_string(all.size()) + " compositions");
        return;
      }
      c.note(std::to_string(ivs.size()) + " intervals, all " + std::to_string(all.size()) + " F^B classes reached");
    });
  }
  return s;
}

// ---------------------------------------------------------------- dispatch

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations",    "partition", "grothendieck",     "induction", "restriction",
                                              "twists",       "distinguished", "regular-interval", "wbim"};
  return names;
}

SuiteReport run_suite(const std::string& name, const CheckOptions& o) {
  if (name == "relations") return check_relations(o);
  if (name == "partition") {
    SuiteReport s = check_fundamental_theorem(o);
    s.append(check_characteristic(o));
    s.suite = "partition";
    return s;
  }
  if (name == "grothendieck") return check_grothendieck(o);
  if (name == "induction") return check_induction(o);
  if (name == "restriction") return check_restriction(o);
  if (name == "twists") return check_twists(o);
  if (name == "distinguished") return check_distinguished(o);
  if (name == "regular-interval") return check_regular_intervals(o);
  if (name == "wbim") return check_wbim(o);
  throw InvalidInput("unknown suite '" + name + "'");
}

std::string report_json(const SuiteReport& r) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : r.cases) a.push_back({{"case", c.name}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}});
  return a.dump(2);
}

}  // namespace bposet
