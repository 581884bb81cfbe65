#include "tkklab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkklab::exactnum {

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec out(n);
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

void axpy(Vec& y, const Scalar& c, const SparseVec& x) {
  if (c.is_zero()) return;
  for (const auto& [i, v] : x) y[i] += c * v;
}

SparseVec sparse_add(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      Scalar v = c * ib->second;
      if (!v.is_zero()) out.emplace_back(ib->first, std::move(v));
      ++ib;
    } else {
      Scalar v = ia->second + c * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

SparseVec scaled(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec out = v;
  for (auto& t : out) t.second = t.second * c;
  return out;
}

Vec scaled(const Vec& v, const Scalar& c) {
  Vec out(v.size());
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = v[i] * c;
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  Scalar s;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool Matrix::is_zero() const { return exactnum::is_zero(a_); }

Vec Matrix::apply(const Vec& v) const {
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (!m.is_zero()) out[r] += m * v[c];
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : a_) x = x * c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// In-place Gaussian elimination to row echelon form. Returns pivot columns
// and accumulates the determinant factor of the row operations.
std::vector<std::size_t> echelon(Matrix& m, Scalar* det_factor) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
      if (det_factor) *det_factor = -*det_factor;
    }
    Scalar inv = m(row, col).inverse();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar f = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return echelon(m, nullptr).size(); }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  Scalar sign(1);
  auto pivots = echelon(m, &sign);
  if (pivots.size() < m.rows()) return Scalar();
  Scalar d = sign;
  for (std::size_t i = 0; i < m.rows(); ++i) d = d * m(i, i);
  return d;
}

std::optional<Matrix> inverse(Matrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: non-square");
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(p, c), m(col, c));
        std::swap(inv(p, c), inv(col, c));
      }
    Scalar piv = m(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      if (!m(col, c).is_zero()) m(col, c) = m(col, c) * piv;
      if (!inv(col, c).is_zero()) inv(col, c) = inv(col, c) * piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<Vec> nullspace(Matrix m) {
  auto pivots = echelon(m, nullptr);
  // Back-substitute to reduced form.
  for (std::size_t r = pivots.size(); r-- > 0;) {
    std::size_t pc = pivots[r];
    Scalar inv = m(r, pc).inverse();
    for (std::size_t c = pc; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) m(r, c) = m(r, c) * inv;
    for (std::size_t r2 = 0; r2 < r; ++r2) {
      if (m(r2, pc).is_zero()) continue;
      Scalar f = m(r2, pc);
      for (std::size_t c = pc; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) m(r2, c) -= f * m(r, c);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols());
    x[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Scalar> leading_minors(const Matrix& m) {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(r, c);
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

namespace {

const Scalar* lookup(const SparseVec& v, std::uint32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, std::uint32_t i) { return e.first < i; });
  if (it != v.end() && it->first == idx) return &it->second;
  return nullptr;
}

}  // namespace

SparseVec LinearSpan::reduce(SparseVec v, Vec* combo) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar* c = lookup(v, pivots_[r]);
    if (!c) continue;
    Scalar coef = *c;
    v = sparse_add(v, -coef, rows_[r]);
    if (combo) axpy(*combo, -coef, combos_[r]);
  }
  return v;
}

bool LinearSpan::add(const SparseVec& v) {
  Vec combo(rows_.size() + 1);
  combo.back() = Scalar(1);
  SparseVec rest = reduce(v, &combo);
  if (rest.empty()) return false;
  Scalar inv = rest.front().second.inverse();
  for (auto& [i, c] : rest) c = c * inv;
  for (auto& x : combo) x = x * inv;
  std::uint32_t p = rest.front().first;
  for (auto& c : combos_) c.resize(combo.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar* f = lookup(rows_[r], p);
    if (!f) continue;
    Scalar coef = *f;
    rows_[r] = sparse_add(rows_[r], -coef, rest);
    axpy(combos_[r], -coef, combo);
  }
  rows_.push_back(std::move(rest));
  pivots_.push_back(p);
  combos_.push_back(std::move(combo));
  return true;
}

bool LinearSpan::contains(const SparseVec& v) const { return reduce(v, nullptr).empty(); }

std::optional<Vec> LinearSpan::coords(const SparseVec& v) const {
  Vec combo(rows_.size());
  SparseVec rest = reduce(v, &combo);
  if (!rest.empty()) return std::nullopt;
  for (auto& x : combo) x = -x;
  return combo;
}

Vec LinearSpan::coords_unchecked(const SparseVec& v) const {
  Vec out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar* c = lookup(v, pivots_[r]);
    if (c) axpy(out, *c, combos_[r]);
  }
  return out;
}

}  // namespace tkklab::exactnum
