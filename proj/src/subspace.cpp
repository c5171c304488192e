#include "quadraform/subspace.hpp"

#include "quadraform/errors.hpp"

namespace quadraform {

Subspace Subspace::from_span(std::size_t ambient_dim, const std::vector<Vec>& spanning) {
  Subspace s(ambient_dim);
  if (spanning.empty()) return s;
  for (const auto& v : spanning) {
    if (v.size() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch, "spanning vector has wrong length");
  }
  RationalMatrix red = RationalMatrix::from_rows(spanning).rref();
  for (std::size_t i = 0; i < red.rows(); ++i) {
    Vec r = red.row(i);
    if (!vec_is_zero(r)) s.basis_.push_back(std::move(r));
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(unit_vec(ambient_dim, i));
  return s;
}

bool Subspace::contains(const Vec& v) const {
  return coordinates(v).has_value();
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_dim_)
    throw Error(ErrorCode::DimensionMismatch, "vector has wrong ambient dimension");
  if (basis_.empty()) {
    if (vec_is_zero(v)) return Vec{};
    return std::nullopt;
  }
  // Solve B^T x = v where rows of B are the basis.
  return basis_matrix().transposed().solve(v);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_)
    throw Error(ErrorCode::DimensionMismatch, "intersect across different ambient spaces");
  if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_dim_);
  // x in both spans: x = U^T a = V^T b. Kernel of [U^T | -V^T] gives (a,b).
  std::size_t du = dim(), dv = other.dim();
  RationalMatrix m(ambient_dim_, du + dv);
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    for (std::size_t a = 0; a < du; ++a) m.at(i, a) = basis_[a][i];
    for (std::size_t b = 0; b < dv; ++b) m.at(i, du + b) = -other.basis_[b][i];
  }
  std::vector<Vec> vectors;
  for (const auto& k : m.nullspace()) {
    Vec x(ambient_dim_, Rational(0));
    for (std::size_t a = 0; a < du; ++a)
      for (std::size_t i = 0; i < ambient_dim_; ++i) x[i] += k[a] * basis_[a][i];
    vectors.push_back(std::move(x));
  }
  return from_span(ambient_dim_, vectors);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_)
    throw Error(ErrorCode::DimensionMismatch, "sum across different ambient spaces");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return from_span(ambient_dim_, all);
}

Subspace Subspace::perp(const RationalMatrix& gram) const {
  if (gram.rows() != ambient_dim_ || gram.cols() != ambient_dim_)
    throw Error(ErrorCode::DimensionMismatch, "gram matrix has wrong shape");
  if (basis_.empty()) return full(ambient_dim_);
  return from_span(ambient_dim_, (basis_matrix() * gram).nullspace());
}

RationalMatrix Subspace::basis_matrix() const {
  if (basis_.empty()) return RationalMatrix(0, ambient_dim_);
  return RationalMatrix::from_rows(basis_);
}

}  // namespace quadraform
