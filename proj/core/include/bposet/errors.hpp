#pragma once

#include <stdexcept>
#include <string>

namespace bposet {

// Two objects that must share a rank did not.
class RankMismatch : public std::invalid_argument {
 public:
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or contract-violating input (bad window, asymmetric relation, cycle, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration requested above the configured rank cap.
class RankTooLarge : public std::out_of_range {
 public:
  explicit RankTooLarge(const std::string& what) : std::out_of_range(what) {}
};

// An internal identity failed; never expected to fire.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr int kDefaultRankCap = 6;

}  // namespace bposet
