#ifndef QUADRAFORM_SUBSPACE_HPP
#define QUADRAFORM_SUBSPACE_HPP

#include <vector>

#include "quadraform/matrix.hpp"

namespace quadraform {

/// Subspace of an ambient coordinate space, kept in RREF-canonical form so
/// equal subspaces compare equal componentwise.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Canonicalizes an arbitrary spanning set.
  static Subspace from_span(std::size_t ambient_dim, const std::vector<Vec>& spanning);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool operator==(const Subspace& other) const = default;

  /// Coordinates of v over the basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  /// { y : v^T G y = 0 for all basis v }, the perp w.r.t. the form matrix G.
  Subspace perp(const RationalMatrix& gram) const;

  /// Basis matrix with basis vectors as rows (dim x ambient).
  RationalMatrix basis_matrix() const;

private:
  std::size_t ambient_dim_;
  std::vector<Vec> basis_;
};

}  // namespace quadraform

#endif
