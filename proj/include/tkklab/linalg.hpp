#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tkklab/scalar.hpp"

namespace tkklab::exactnum {

using Vec = std::vector<Scalar>;

// Sparse vector: (index, value) pairs sorted by index, no zero values.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);
// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);
void axpy(Vec& y, const Scalar& c, const SparseVec& x);
SparseVec sparse_add(const SparseVec& a, const Scalar& c, const SparseVec& b);
bool is_zero(const Vec& v);
Vec scaled(const Vec& v, const Scalar& c);
SparseVec scaled(const SparseVec& v, const Scalar& c);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const Vec& data() const { return a_; }

  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  Vec apply(const Vec& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

// Row-reduction helpers over the scalar field.
std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(Matrix m);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(Matrix m);
// Leading principal minors of a square matrix.
std::vector<Scalar> leading_minors(const Matrix& m);

// Incrementally built span of vectors in a fixed ambient dimension. Keeps a
// reduced echelon form and, for each echelon row, its expression in the
// vectors accepted so far, so that coordinates with respect to the accepted
// vectors are exact and unique.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t ambient) : ambient_(ambient) {}

  // Returns true (and records v) iff v is not in the current span.
  bool add(const SparseVec& v);
  bool contains(const SparseVec& v) const;
  // Coordinates of v in the accepted vectors, or nullopt if v is outside.
  std::optional<Vec> coords(const SparseVec& v) const;
  // Coordinates assuming v lies in the span (no membership check).
  Vec coords_unchecked(const SparseVec& v) const;

  std::size_t size() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

 private:
  SparseVec reduce(SparseVec v, Vec* combo) const;

  std::size_t ambient_;
  std::vector<SparseVec> rows_;   // reduced rows, pivot coefficient 1
  std::vector<std::uint32_t> pivots_;
  std::vector<Vec> combos_;       // rows_[r] = sum_k combos_[r][k] * accepted_k
};

}  // namespace tkklab::exactnum
