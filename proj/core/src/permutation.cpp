#include "bposet/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace bposet {

namespace {

std::string window_string(const std::vector<int>& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ',';
    os << w[k];
  }
  os << ']';
  return os.str();
}

std::vector<int> parse_int_list(std::string_view text, char open, char close) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == open) {
    if (s.back() != close) throw InvalidInput("unbalanced brackets in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw InvalidInput("empty entry in '" + std::string(text) + "'");
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (*end != '\0') throw InvalidInput("not an integer: '" + tok + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

// ---- Permutation ----

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[v]) throw InvalidInput("not a permutation: " + window_string(window_));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw InvalidInput("simple transposition index out of range");
  return identity(n).times_simple(i);
}

Permutation Permutation::inverse() const {
  std::vector<int> w(window_.size());
  for (int i = 1; i <= rank(); ++i) w[window_[i - 1] - 1] = i;
  return Permutation(std::move(w));
}

bool Permutation::has_descent(int i) const { return window_[i - 1] > window_[i]; }

IndexSet Permutation::descents() const {
  IndexSet d;
  for (int i = 1; i < rank(); ++i)
    if (has_descent(i)) d.push_back(i);
  return d;
}

int Permutation::length() const {
  int c = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (window_[i] > window_[j]) ++c;
  return c;
}

Permutation Permutation::times_simple(int i) const {
  Permutation r = *this;
  std::swap(r.window_[i - 1], r.window_[i]);
  return r;
}

std::string Permutation::str() const { return window_string(window_); }

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.rank() != b.rank()) throw RankMismatch("compose: ranks differ");
  std::vector<int> w(a.rank());
  for (int i = 1; i <= a.rank(); ++i) w[i - 1] = a(b(i));
  return Permutation(std::move(w));
}

// ---- InversionSet ----

int InversionSet::slot(int n, int i, int j) {
  if (j > 0) return (i - 1) * n + (j - 1);
  return (-j - 1) * n + (i - 1);
}

std::vector<std::pair<int, int>> InversionSet::reflections() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = -n_; j <= -i; ++j)
      if (contains(i, j)) out.emplace_back(i, j);
    for (int j = i + 1; j <= n_; ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  }
  return out;
}

// ---- SignedPermutation ----

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    int a = std::abs(v);
    if (v == 0 || a > n || seen[a]) throw InvalidInput("not a signed permutation: " + window_string(window_));
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  return from_permutation(Permutation::identity(n));
}

SignedPermutation SignedPermutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = -(i + 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::simple(int n, int i) {
  if (i < 0 || i >= n) throw InvalidInput("generator index out of range");
  return identity(n).times_simple(i);
}

SignedPermutation SignedPermutation::from_permutation(const Permutation& p) {
  return SignedPermutation(p.window());
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(window_.size());
  for (int i = 1; i <= rank(); ++i) {
    int v = window_[i - 1];
    w[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(w));
}

int SignedPermutation::inverse_at(int x) const {
  if (x == 0) return 0;
  for (int i = 1; i <= rank(); ++i) {
    if (window_[i - 1] == x) return i;
    if (window_[i - 1] == -x) return -i;
  }
  throw InvalidInput("value outside [-n,n]");
}

IndexSet SignedPermutation::descents() const {
  IndexSet d;
  for (int i = 0; i < rank(); ++i)
    if (has_descent(i)) d.push_back(i);
  return d;
}

bool SignedPermutation::has_left_descent(int i) const {
  return inverse_at(i) > inverse_at(i + 1);
}

InversionSet SignedPermutation::inversions() const {
  const int n = rank();
  if (n * n > 64) throw RankTooLarge("inversion sets are limited to n <= 8");
  std::vector<int> pos(2 * n + 1);
  for (int i = -n; i <= n; ++i) pos[(*this)(i) + n] = i;
  auto inv = [&](int x) { return pos[x + n]; };
  InversionSet s(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j)
      if (inv(i) > inv(j)) s.insert(i, j);
    for (int j = -n; j <= -i; ++j)
      if (inv(j) > inv(i)) s.insert(i, j);
  }
  return s;
}

SignedPermutation SignedPermutation::times_simple(int i) const {
  SignedPermutation r = *this;
  if (i == 0)
    r.window_[0] = -r.window_[0];
  else
    std::swap(r.window_[i - 1], r.window_[i]);
  return r;
}

std::string SignedPermutation::str() const { return window_string(window_); }

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank()) throw RankMismatch("compose: ranks differ");
  std::vector<int> w(a.rank());
  for (int i = 1; i <= a.rank(); ++i) w[i - 1] = a(b(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) { return a * b; }

SignedPermutation parse_signed_permutation(std::string_view text) {
  return SignedPermutation(parse_int_list(text, '[', ']'));
}

Permutation parse_permutation(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  bool compact = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (compact && s.size() > 1) {
    std::vector<int> w;
    for (char c : s) w.push_back(c - '0');
    return Permutation(std::move(w));
  }
  return Permutation(parse_int_list(text, '[', ']'));
}

std::vector<Permutation> all_permutations(int n, int cap) {
  if (n > cap) throw RankTooLarge("rank " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n, int cap) {
  if (n > cap) throw RankTooLarge("rank " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<SignedPermutation> out;
  for (const auto& p : all_permutations(n, cap)) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<int> w = p.window();
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1U) w[k] = -w[k];
      out.emplace_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Consecutive position blocks cut after each index in `cuts` (cuts >= 1).
std::vector<int> block_sizes(int n, const IndexSet& cuts) {
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    if (c < 1) continue;
    if (c >= n) throw InvalidInput("descent index out of range");
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return sizes;
}

// Ascending inside blocks, strictly decreasing across them, drawn from `vals` (ascending).
void fill_blocks(const std::vector<int>& sizes, std::size_t first, const std::vector<int>& vals,
                 std::vector<int>& out) {
  std::size_t hi = vals.size();
  for (std::size_t b = first; b < sizes.size(); ++b) {
    std::size_t lo = hi - sizes[b];
    for (std::size_t k = lo; k < hi; ++k) out.push_back(vals[k]);
    hi = lo;
  }
}

}  // namespace

SignedPermutation signed_with_descents(int n, const IndexSet& d) {
  if (n == 0) return SignedPermutation();
  for (int i : d)
    if (i < 0 || i >= n) throw InvalidInput("descent index out of range");
  bool zero = std::find(d.begin(), d.end(), 0) != d.end();
  auto sizes = block_sizes(n, d);
  std::vector<int> out;
  std::size_t first = 0;
  int used = 0;
  if (!zero) {
    for (int v = 1; v <= sizes[0]; ++v) out.push_back(v);
    used = sizes[0];
    first = 1;
  }
  std::vector<int> neg;
  for (int v = -n; v <= -(used + 1); ++v) neg.push_back(v);
  fill_blocks(sizes, first, neg, out);
  return SignedPermutation(std::move(out));
}

Permutation permutation_with_descents(int n, const IndexSet& d) {
  if (n == 0) return Permutation();
  for (int i : d)
    if (i < 1 || i >= n) throw InvalidInput("descent index out of range");
  std::vector<int> vals(n), out;
  std::iota(vals.begin(), vals.end(), 1);
  fill_blocks(block_sizes(n, d), 0, vals, out);
  return Permutation(std::move(out));
}

std::vector<int> reduced_word(const SignedPermutation& w) {
  std::vector<int> word;
  SignedPermutation cur = w;
  for (;;) {
    auto d = cur.descents();
    if (d.empty()) break;
    word.push_back(d.front());
    cur = cur.times_simple(d.front());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation cur = w;
  for (;;) {
    auto d = cur.descents();
    if (d.empty()) break;
    word.push_back(d.front());
    cur = cur.times_simple(d.front());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace bposet
