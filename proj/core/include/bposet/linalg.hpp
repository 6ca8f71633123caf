#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bposet {

using Rational = boost::multiprecision::cpp_rational;

// Square integer matrix stored by rows; row vectors act from the left (v -> v A).
class SparseMatrix {
 public:
  using Entry = std::pair<int, std::int64_t>;
  using Row = std::vector<Entry>;  // sorted by column, no zeros

  SparseMatrix() = default;
  explicit SparseMatrix(int dim) : rows_(dim) {}
  static SparseMatrix identity(int dim);

  int dim() const { return static_cast<int>(rows_.size()); }
  const Row& row(int i) const { return rows_[i]; }
  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t v);

  SparseMatrix transpose() const;
  std::size_t nonzeros() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + (-b); }
  bool operator==(const SparseMatrix&) const = default;

 private:
  std::vector<Row> rows_;
};

// Kronecker products for tensor factors.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

class DenseMatrixQ {
 public:
  DenseMatrixQ() = default;
  DenseMatrixQ(int rows, int cols) : r_(rows), c_(cols), v_(static_cast<std::size_t>(rows) * cols) {}
  static DenseMatrixQ identity(int d);
  static DenseMatrixQ from_sparse(const SparseMatrix& m);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * c_ + j]; }

  friend DenseMatrixQ operator*(const DenseMatrixQ& a, const DenseMatrixQ& b);
  friend DenseMatrixQ operator*(const SparseMatrix& a, const DenseMatrixQ& b);
  friend DenseMatrixQ operator*(const DenseMatrixQ& a, const SparseMatrix& b);
  bool operator==(const DenseMatrixQ&) const = default;

  DenseMatrixQ transpose() const;
  int rank() const;
  // Throws if singular.
  DenseMatrixQ inverse() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> v_;
};

DenseMatrixQ kron(const DenseMatrixQ& a, const DenseMatrixQ& b);
DenseMatrixQ block_diagonal(const std::vector<DenseMatrixQ>& blocks);

// Null space of A X = X B simultaneously over all pairs; each basis element is a d x d matrix.
std::vector<DenseMatrixQ> intertwiner_space(const std::vector<SparseMatrix>& A, const std::vector<SparseMatrix>& B);

}  // namespace bposet
