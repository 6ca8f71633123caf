#include "bposet/composition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bposet {

namespace {

std::string parts_string(const std::vector<int>& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) os << ',';
    os << p[k];
  }
  os << ')';
  return os.str();
}

std::vector<int> parse_parts(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw InvalidInput("composition must look like (a,b,...): '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InvalidInput("bad part '" + tok + "'");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad part '" + tok + "'");
    }
  }
  return out;
}

void check_set(int n, const IndexSet& s, int lo) {
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InvalidInput("index set must be strictly increasing");
  for (int i : s)
    if (i < lo || i > n - 1) throw InvalidInput("index " + std::to_string(i) + " out of range");
}

}  // namespace

CompositionA::CompositionA(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw InvalidInput("composition parts must be positive: " + parts_string(parts_));
}

int CompositionA::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

IndexSet CompositionA::set() const {
  IndexSet s;
  int acc = 0;
  for (std::size_t k = 0; k + 1 < parts_.size(); ++k) s.push_back(acc += parts_[k]);
  return s;
}

CompositionA CompositionA::from_set(int n, const IndexSet& s) {
  check_set(n, s, 1);
  if (n == 0) return CompositionA();
  std::vector<int> parts;
  int prev = 0;
  for (int i : s) {
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(n - prev);
  return CompositionA(std::move(parts));
}

std::string CompositionA::str() const { return parts_string(parts_); }

CompositionB::CompositionB(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k)
    if (parts_[k] < (k == 0 ? 0 : 1))
      throw InvalidInput("invalid type-B composition: " + parts_string(parts_));
  if (parts_.size() == 1 && parts_[0] == 0) parts_.clear();
}

int CompositionB::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

IndexSet CompositionB::set() const {
  IndexSet s;
  int acc = 0;
  for (std::size_t k = 0; k + 1 < parts_.size(); ++k) s.push_back(acc += parts_[k]);
  return s;
}

CompositionB CompositionB::from_set(int n, const IndexSet& s) {
  check_set(n, s, 0);
  if (n == 0) return CompositionB();
  std::vector<int> parts;
  int prev = 0;
  for (int i : s) {
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(n - prev);
  return CompositionB(std::move(parts));
}

std::string CompositionB::str() const { return parts_string(parts_); }

IndexSet set_of(const CompositionA& a) { return a.set(); }
IndexSet set_B(const CompositionB& a) { return a.set(); }
CompositionA comp(int n, const IndexSet& s) { return CompositionA::from_set(n, s); }
CompositionB comp_B(int n, const IndexSet& s) { return CompositionB::from_set(n, s); }

bool refines(const CompositionA& fine, const CompositionA& coarse) {
  if (fine.size() != coarse.size()) return false;
  auto f = fine.set(), c = coarse.set();
  return std::includes(f.begin(), f.end(), c.begin(), c.end());
}

bool refines(const CompositionB& fine, const CompositionB& coarse) {
  if (fine.size() != coarse.size()) return false;
  auto f = fine.set(), c = coarse.set();
  return std::includes(f.begin(), f.end(), c.begin(), c.end());
}

CompositionA concatenate(const CompositionA& a, const CompositionA& b) {
  auto p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  return CompositionA(std::move(p));
}

CompositionA near_concatenate(const CompositionA& a, const CompositionA& b) {
  if (a.length() == 0 || b.length() == 0) throw InvalidInput("near-concatenation needs nonempty compositions");
  auto p = a.parts();
  p.back() += b.parts().front();
  p.insert(p.end(), b.parts().begin() + 1, b.parts().end());
  return CompositionA(std::move(p));
}

std::vector<CompositionA> all_compositions(int n) {
  std::vector<CompositionA> out;
  if (n == 0) return {CompositionA()};
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    IndexSet s;
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1U) s.push_back(i);
    out.push_back(comp(n, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompositionB> all_compositions_B(int n) {
  std::vector<CompositionB> out;
  if (n == 0) return {CompositionB()};
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    IndexSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i);
    out.push_back(comp_B(n, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompositionA parse_composition(std::string_view text) { return CompositionA(parse_parts(text)); }
CompositionB parse_composition_B(std::string_view text) { return CompositionB(parse_parts(text)); }

}  // namespace bposet
