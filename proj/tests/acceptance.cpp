// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "bposet/checks.hpp"
#include "bposet/extensions.hpp"
#include "bposet/io.hpp"
#include "bposet/regular.hpp"
#include "bposet/restriction.hpp"
#include "bposet/surgery.hpp"

using namespace bposet;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;
};

Outcome from_suite(const SuiteReport& r) {
  Outcome o{r.pass(), {}};
  std::ostringstream os;
  os << r.cases.size() << " cases";
  for (const auto& c : r.cases)
    if (!c.pass) os << "; FAILED " << c.name << ": " << c.details;
  o.details = os.str();
  return o;
}

Outcome suite(SuiteReport (*f)(const CheckOptions&), int n, int samples) {
  CheckOptions o;
  o.n = n;
  o.samples = samples;
  return from_suite(f(o));
}

SignedPermutation sp(std::vector<int> w) { return SignedPermutation(std::move(w)); }

// Worked examples, each compared against hard-coded expected values.
Outcome worked_examples() {
  Outcome out;
  int n_checked = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++n_checked;
    if (!ok) {
      out.pass = false;
      out.details += "mismatch: " + what + "; ";
    }
  };
  const auto p23 = BnPoset::from_relations(2, {{1, 0}, {-2, 0}, {0, -1}, {0, 2}});
  expect(linear_extensions_B(p23) == std::vector<SignedPermutation>{sp({-1, 2}), sp({2, -1})}, "extensions of P^(2)_3");

  expect(bullet_B(sp({3, 1, -2}), Permutation({1, 2})) == sp({3, 1, -2, 4, 5}), "bullet product");

  const auto f = factor_coset(sp({3, 1, 4, -5, -2}), 3);
  expect(f.g1 == sp({3, 1, -2}) && f.g2 == Permutation({2, 1}) && f.delta == sp({1, 2, 5, -4, 3}),
         "coset factorization");

  const auto g = sp({-4, 7, -1, 3, -6, 2, -5});
  expect(st_plus(g, 4) == sp({-3, 4, -1, 2}) && st_minus(g, 4) == Permutation({1, 3, 2}), "st+/st-");

  const auto P3 = BnPoset::from_relations(3, {{-2, 0}, {0, 2}, {3, 1}, {-1, -3}});
  std::map<std::vector<int>, std::size_t> uppers;
  for (const auto& Q : lower_subposets_B(P3, 1)) uppers[Q.elements()] = upper_subposets(P3, Q).size();
  expect(uppers == std::map<std::vector<int>, std::size_t>{{{-3, 0, 3}, 1}, {{-2, 0, 2}, 3}, {{-1, 0, 1}, 1}},
         "lower subposets and upper counts");

  const auto img = restriction_map(P3, sp({-1, 2, -3}), 1);
  expect(img.g1 == sp({-1}) && img.g2 == Permutation({2, 1}), "restriction map image");
  expect(conc(img.Q, img.U, img.g1, img.g2) == sp({-1, 2, -3}), "conc inverse");

  auto rel = poset_of({sp({2, 1}), sp({1, -2})}).strict_relations();
  std::sort(rel.begin(), rel.end());
  expect(rel == std::vector<Relation>{{-1, -2}, {-1, 0}, {-1, 1}, {0, 1}, {2, 1}}, "poset of a two-element set");

  const auto P6 = parse_poset_json(R"({"n": 6, "covers": [[-3,4],[1,4],[-2,-3],[0,-3],[0,1],[2,1],
      [-1,-2],[-1,0],[3,0],[3,2],[-4,-1],[-4,3],[6,5],[-5,-6]]})");
  const auto [s, r] = sigma_rho_endpoints(P6);
  expect(s == sp({-3, 2, 1, 4, 6, 5}) && r == sp({1, -2, -3, 4, -5, -6}), "interval endpoints in B_6");

  if (out.pass) out.details = std::to_string(n_checked) + " examples";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string label;
    std::function<Outcome()> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria = {
      {1, "module relations, n<=3, 100 posets per rank", [] { return suite(check_relations, 3, 100); }, 60},
      {2, "ch^B of M^B_P equals K^B_P, n<=3, 60 samples at n=3", [] { return suite(check_characteristic, 3, 60); }, 0},
      {3, "type-B fundamental theorem, n<=2, values in [-3,3]", [] { return suite(check_fundamental_theorem, 2, 0); }, 0},
      {4, "worked examples", worked_examples, 0},
      {5, "induction, m+n<=4", [] { return suite(check_induction, 4, 100); }, 0},
      {6, "restriction, n<=3, 0<=m<=n", [] { return suite(check_restriction, 3, 100); }, 0},
      {7, "twists, n<=2 exhaustive, 20 samples at n=3", [] { return suite(check_twists, 3, 20); }, 0},
      {8, "distinguished representatives, n=2", [] { return suite(check_distinguished, 2, 0); }, 60},
      {9, "regular posets vs weak-order intervals, n<=3", [] { return suite(check_regular_intervals, 3, 0); }, 300},
      {10, "interval modules and their Grothendieck classes, n<=3", [] { return suite(check_wbim, 3, 0); }, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.details += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    if (!o.pass) ++failures;
    std::printf("%s %d: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.label.c_str(), o.details.c_str(), secs);
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
