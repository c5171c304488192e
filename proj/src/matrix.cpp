#include "quadraform/matrix.hpp"

#include <sstream>

#include "quadraform/errors.hpp"

namespace quadraform {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rational vec_dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec unit_vec(std::size_t dim, std::size_t index) {
  Vec v(dim, Rational(0));
  v[index] = 1;
  return v;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> data) {
  rows_ = data.size();
  cols_ = rows_ ? data.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : data) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    for (const auto& x : row) entries_.push_back(x);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rational_from_string(rows[i][j]);
  }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix add shape mismatch");
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + other.entries_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sub shape mismatch");
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - other.entries_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix mul shape mismatch");
  RationalMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        r.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return r;
}

Vec RationalMatrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vec r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = c * entries_[i];
  return r;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RationalMatrix RationalMatrix::pow(std::size_t exponent) const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "pow of non-square matrix");
  RationalMatrix acc = identity(rows_);
  RationalMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1) acc = acc * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return acc;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "trace of non-square matrix");
  Rational t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Vec RationalMatrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec RationalMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void RationalMatrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "set_row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void RationalMatrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "set_col length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
  RationalMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    // First nonzero row at or below the current pivot row.
    std::size_t sel = pivot_row;
    while (sel < rows_ && m.at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    }
    Rational inv = Rational(1) / m.at(pivot_row, col);
    for (std::size_t j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row) continue;
      Rational factor = m.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return m;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

Rational RationalMatrix::det() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "det of non-square matrix");
  RationalMatrix m = *this;
  Rational det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t sel = col;
    while (sel < rows_ && m.at(sel, col) == 0) ++sel;
    if (sel == rows_) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = Rational(1) / m.at(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      Rational factor = m.at(i, col) * inv;
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  RationalMatrix red = aug.rref(&pivots);
  if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

std::vector<Vec> RationalMatrix::nullspace() const {
  std::vector<std::size_t> pivots;
  RationalMatrix red = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(cols_, Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -red.at(r, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> RationalMatrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "solve rhs length mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivots;
  RationalMatrix red = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // row [0..0 | 1]
  Vec x(cols_, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red.at(r, cols_);
  return x;
}

RationalMatrix RationalMatrix::vstack(const std::vector<RationalMatrix>& blocks) {
  if (blocks.empty()) return RationalMatrix();
  std::size_t cols = blocks[0].cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
    rows += b.rows();
  }
  RationalMatrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = b.at(i, j);
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return RationalMatrix();
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << rational_to_string(at(i, j));
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace quadraform
