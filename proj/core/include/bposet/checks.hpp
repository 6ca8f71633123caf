#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bposet/poset.hpp"

namespace bposet {

struct CaseReport {
  std::string name;
  bool pass = true;
  std::string details;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseReport> cases;
  bool pass() const;
  std::size_t failures() const;
  std::string summary() const;
  void append(const SuiteReport& other);
};

struct CheckOptions {
  int n = 2;            // largest rank examined
  unsigned seed = 1;
  int samples = 100;    // posets per rank where exhaustive enumeration is out of reach
  int trunc = -1;       // truncation V; rank + 1 when negative
};

// Exhaustive for n <= 2; otherwise `samples` random posets, alternating distinguished and generic.
std::vector<BnPoset> poset_family(int n, int samples, unsigned seed);

SuiteReport check_relations(const CheckOptions& o);
SuiteReport check_characteristic(const CheckOptions& o);
SuiteReport check_fundamental_theorem(const CheckOptions& o);
SuiteReport check_grothendieck(const CheckOptions& o);
SuiteReport check_induction(const CheckOptions& o);
SuiteReport check_restriction(const CheckOptions& o);
SuiteReport check_twists(const CheckOptions& o);
// The compatibility of twists with induction and restriction for the given (m, n) shapes.
SuiteReport check_twist_compatibility(const std::vector<std::pair<int, int>>& shapes);
SuiteReport check_distinguished(const CheckOptions& o);
SuiteReport check_regular_intervals(const CheckOptions& o);
SuiteReport check_wbim(const CheckOptions& o);

const std::vector<std::string>& suite_names();
// Throws InvalidInput for an unknown suite.
SuiteReport run_suite(const std::string& name, const CheckOptions& o);

// JSON array of {case, status, details}.
std::string report_json(const SuiteReport& r);

}  // namespace bposet
