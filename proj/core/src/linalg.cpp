#include "bposet/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bposet/errors.hpp"

namespace bposet {

SparseMatrix SparseMatrix::identity(int dim) {
  SparseMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.rows_[i].emplace_back(i, 1);
  return m;
}

std::int64_t SparseMatrix::at(int i, int j) const {
  const Row& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), Entry{j, INT64_MIN});
  return (it != r.end() && it->first == j) ? it->second : 0;
}

void SparseMatrix::add(int i, int j, std::int64_t v) {
  if (v == 0) return;
  Row& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), Entry{j, INT64_MIN});
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second == 0) r.erase(it);
  } else {
    r.insert(it, Entry{j, v});
  }
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(dim());
  for (int i = 0; i < dim(); ++i)
    for (auto [j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
  return t;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.size();
  return c;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) throw RankMismatch("matrix dimensions differ");
  SparseMatrix c(a.dim());
  std::map<int, std::int64_t> acc;
  for (int i = 0; i < a.dim(); ++i) {
    acc.clear();
    for (auto [k, v] : a.rows_[i])
      for (auto [j, w] : b.rows_[k]) acc[j] += v * w;
    for (auto [j, v] : acc)
      if (v != 0) c.rows_[i].emplace_back(j, v);
  }
  return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) throw RankMismatch("matrix dimensions differ");
  SparseMatrix c = a;
  for (int i = 0; i < b.dim(); ++i)
    for (auto [j, v] : b.rows_[i]) c.add(i, j, v);
  return c;
}

SparseMatrix operator-(const SparseMatrix& a) {
  SparseMatrix c = a;
  for (auto& r : c.rows_)
    for (auto& e : r) e.second = -e.second;
  return c;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  const int da = a.dim(), db = b.dim();
  SparseMatrix c(da * db);
  for (int i = 0; i < da; ++i)
    for (auto [j, v] : a.row(i))
      for (int k = 0; k < db; ++k)
        for (auto [l, w] : b.row(k)) c.add(i * db + k, j * db + l, v * w);
  return c;
}

// ---- DenseMatrixQ ----

DenseMatrixQ DenseMatrixQ::identity(int d) {
  DenseMatrixQ m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

DenseMatrixQ DenseMatrixQ::from_sparse(const SparseMatrix& s) {
  DenseMatrixQ m(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i)
    for (auto [j, v] : s.row(i)) m(i, j) = v;
  return m;
}

DenseMatrixQ operator*(const DenseMatrixQ& a, const DenseMatrixQ& b) {
  if (a.c_ != b.r_) throw RankMismatch("matrix dimensions differ");
  DenseMatrixQ c(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.c_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

DenseMatrixQ operator*(const SparseMatrix& a, const DenseMatrixQ& b) {
  if (a.dim() != b.r_) throw RankMismatch("matrix dimensions differ");
  DenseMatrixQ c(a.dim(), b.c_);
  for (int i = 0; i < a.dim(); ++i)
    for (auto [k, v] : a.row(i))
      for (int j = 0; j < b.c_; ++j)
        if (b(k, j) != 0) c(i, j) += v * b(k, j);
  return c;
}

DenseMatrixQ operator*(const DenseMatrixQ& a, const SparseMatrix& b) {
  if (a.c_ != b.dim()) throw RankMismatch("matrix dimensions differ");
  DenseMatrixQ c(a.r_, b.dim());
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (auto [j, v] : b.row(k)) c(i, j) += x * v;
    }
  return c;
}

DenseMatrixQ DenseMatrixQ::transpose() const {
  DenseMatrixQ t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrixQ kron(const DenseMatrixQ& a, const DenseMatrixQ& b) {
  DenseMatrixQ c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

DenseMatrixQ block_diagonal(const std::vector<DenseMatrixQ>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  DenseMatrixQ m(r, c);
  int r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

int DenseMatrixQ::rank() const {
  DenseMatrixQ m = *this;
  int rank = 0;
  for (int col = 0; col < c_ && rank < r_; ++col) {
    int piv = -1;
    for (int i = rank; i < r_; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < c_; ++j) std::swap(m(rank, j), m(piv, j));
    for (int i = rank + 1; i < r_; ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(rank, col);
      for (int j = col; j < c_; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

DenseMatrixQ DenseMatrixQ::inverse() const {
  if (r_ != c_) throw InvalidInput("inverse of a non-square matrix");
  const int d = r_;
  DenseMatrixQ m = *this, inv = identity(d);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int i = col; i < d; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw InvalidInput("matrix is singular");
    for (int j = 0; j < d; ++j) {
      std::swap(m(col, j), m(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    Rational p = m(col, col);
    for (int j = 0; j < d; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < d; ++i) {
      if (i == col || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = 0; j < d; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<DenseMatrixQ> intertwiner_space(const std::vector<SparseMatrix>& A, const std::vector<SparseMatrix>& B) {
  if (A.size() != B.size()) throw InvalidInput("generator counts differ");
  if (A.empty()) throw InvalidInput("no generators");
  const int d = A.front().dim();
  const int nv = d * d;
  using SRow = std::map<int, Rational>;
  std::map<int, SRow> pivots;  // leading column -> row with leading coefficient 1

  auto reduce = [&](SRow& row) {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const int col = it->first;
      const Rational f = it->second;
      for (const auto& [c, v] : p->second) {
        Rational& t = row[c];
        t -= f * v;
      }
      for (auto jt = row.begin(); jt != row.end();) jt = (jt->second == 0) ? row.erase(jt) : std::next(jt);
      it = row.upper_bound(col);
    }
  };

  for (std::size_t g = 0; g < A.size(); ++g) {
    const SparseMatrix& a = A[g];
    const SparseMatrix& bt = B[g].transpose();
    // (A X - X B)[r][c] = sum_k A[r][k] X[k][c] - sum_k X[r][k] B[k][c]
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        SRow row;
        for (auto [k, v] : a.row(r)) row[k * d + c] += v;
        for (auto [k, v] : bt.row(c)) row[r * d + k] -= v;
        for (auto it = row.begin(); it != row.end();) it = (it->second == 0) ? row.erase(it) : std::next(it);
        if (row.empty()) continue;
        reduce(row);
        if (row.empty()) continue;
        Rational lead = row.begin()->second;
        for (auto& [c2, v] : row) v /= lead;
        pivots.emplace(row.begin()->first, std::move(row));
      }
  }
  // Back substitution to reduced form, highest pivot first.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SRow& row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [c, v] : row) {
        if (c == row.begin()->first || v == 0) continue;
        auto p = pivots.find(c);
        if (p == pivots.end()) continue;
        const Rational f = v;
        for (const auto& [c2, w] : p->second) row[c2] -= f * w;
        changed = true;
        break;
      }
      for (auto jt = row.begin(); jt != row.end();) jt = (jt->second == 0) ? row.erase(jt) : std::next(jt);
    }
  }
  std::vector<DenseMatrixQ> basis;
  for (int f = 0; f < nv; ++f) {
    if (pivots.count(f)) continue;
    DenseMatrixQ X(d, d);
    X(f / d, f % d) = 1;
    for (const auto& [pc, row] : pivots) {
      auto it = row.find(f);
      if (it != row.end()) X(pc / d, pc % d) = -it->second;
    }
    basis.push_back(std::move(X));
  }
  return basis;
}

}  // namespace bposet
