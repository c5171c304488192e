#include "quadraform/exact_arith.hpp"

#include "quadraform/errors.hpp"

namespace quadraform {

RationalMatrix adjoint_wrt_form(const RationalMatrix& op, const RationalMatrix& gram) {
  if (gram.rows() != gram.cols() || op.rows() != op.cols() || op.rows() != gram.rows())
    throw Error(ErrorCode::DimensionMismatch, "adjoint_wrt_form shape mismatch");
  auto inv = gram.inverse();
  if (!inv) throw Error(ErrorCode::DegenerateForm, "form is degenerate");
  return *inv * op.transposed() * gram;
}

std::optional<ScalarPlusNilpotent> try_scalar_plus_nilpotent_split(const RationalMatrix& op) {
  if (op.rows() != op.cols() || op.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "split needs a square matrix, dim >= 1");
  std::size_t n = op.rows();
  Rational gamma = op.trace() / Rational(static_cast<long>(n));
  RationalMatrix nil = op - RationalMatrix::identity(n).scaled(gamma);
  if (!nil.pow(n).is_zero()) return std::nullopt;
  return ScalarPlusNilpotent{gamma, nil};
}

ScalarPlusNilpotent scalar_plus_nilpotent_split(const RationalMatrix& op) {
  auto split = try_scalar_plus_nilpotent_split(op);
  if (!split)
    throw Error(ErrorCode::NotScalarPlusNilpotent,
                "operator is not scalar + nilpotent over the rationals");
  return *split;
}

namespace {

/// Matrix of `map` restricted to the subspace, in subspace coordinates.
/// Throws when the map does not preserve the subspace.
RationalMatrix restrict_to(const RationalMatrix& map, const Subspace& space) {
  std::size_t d = space.dim();
  RationalMatrix res(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec image = map * space.basis()[j];
    auto coords = space.coordinates(image);
    if (!coords)
      throw Error(ErrorCode::HypothesisViolated, "map does not preserve the subspace");
    res.set_col(j, *coords);
  }
  return res;
}

}  // namespace

std::optional<Vec> common_kernel_of_nilpotents(const std::vector<RationalMatrix>& maps,
                                               const Subspace& restricted_to) {
  if (restricted_to.dim() == 0) return std::nullopt;

  std::vector<RationalMatrix> restricted;
  restricted.reserve(maps.size());
  for (const auto& m : maps) restricted.push_back(restrict_to(m, restricted_to));
  std::size_t d = restricted_to.dim();
  for (std::size_t a = 0; a < restricted.size(); ++a) {
    if (!restricted[a].pow(d).is_zero())
      throw Error(ErrorCode::HypothesisViolated, "map is not nilpotent on the subspace");
    for (std::size_t b = a + 1; b < restricted.size(); ++b) {
      if (restricted[a] * restricted[b] != restricted[b] * restricted[a])
        throw Error(ErrorCode::HypothesisViolated, "maps do not commute on the subspace");
    }
  }

  // Induction on dimension: shrink to ker(T) for the first nonzero map.
  Subspace space = restricted_to;
  for (;;) {
    std::vector<RationalMatrix> on_space;
    std::size_t first_nonzero = maps.size();
    for (std::size_t idx = 0; idx < maps.size(); ++idx) {
      on_space.push_back(restrict_to(maps[idx], space));
      if (first_nonzero == maps.size() && !on_space.back().is_zero()) first_nonzero = idx;
    }
    if (first_nonzero == maps.size()) return space.basis()[0];
    std::vector<Vec> kernel_ambient;
    for (const auto& k : on_space[first_nonzero].nullspace()) {
      Vec x(space.ambient_dim(), Rational(0));
      for (std::size_t a = 0; a < space.dim(); ++a)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += k[a] * space.basis()[a][i];
      kernel_ambient.push_back(std::move(x));
    }
    space = Subspace::from_span(space.ambient_dim(), kernel_ambient);
    if (space.dim() == 0)
      throw Error(ErrorCode::InternalInconsistency, "nilpotent map with trivial kernel");
  }
}

}  // namespace quadraform
