#ifndef QUADRAFORM_MATRIX_HPP
#define QUADRAFORM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "quadraform/rational.hpp"

namespace quadraform {

using Vec = std::vector<Rational>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
Rational vec_dot(const Vec& a, const Vec& b);
Vec unit_vec(std::size_t dim, std::size_t index);

/// Dense matrix of exact rationals, row-major. All solver outputs follow one
/// deterministic convention: leftmost pivot column, first nonzero row.
class RationalMatrix {
public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> data);

  static RationalMatrix identity(std::size_t n);
  /// Builds from rows of "p/q" strings; all rows must have equal length.
  static RationalMatrix from_strings(const std::vector<std::vector<std::string>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool operator==(const RationalMatrix& other) const = default;

  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator-() const;
  Vec operator*(const Vec& v) const;
  RationalMatrix scaled(const Rational& c) const;

  RationalMatrix transposed() const;
  RationalMatrix pow(std::size_t exponent) const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  /// Reduced row echelon form with the deterministic pivot rule above.
  RationalMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
  std::size_t rank() const;
  Rational det() const;
  /// Inverse, or nullopt when singular.
  std::optional<RationalMatrix> inverse() const;

  /// Canonical RREF free-variable basis of the kernel, free columns in
  /// increasing order. Vectors are linearly independent and span ker(A).
  std::vector<Vec> nullspace() const;

  /// One exact solution of A x = b with free variables set to zero, or
  /// nullopt when the system is inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

  static RationalMatrix vstack(const std::vector<RationalMatrix>& blocks);
  static RationalMatrix from_rows(const std::vector<Vec>& rows);

  std::string to_string() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

}  // namespace quadraform

#endif
