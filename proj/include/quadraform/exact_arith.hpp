#ifndef QUADRAFORM_EXACT_ARITH_HPP
#define QUADRAFORM_EXACT_ARITH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "quadraform/matrix.hpp"
#include "quadraform/subspace.hpp"

namespace quadraform {

/// T* with B(T x, y) = B(x, T* y), i.e. B^{-1} T^T B for the Gram matrix B.
/// Throws DegenerateForm when det B = 0.
RationalMatrix adjoint_wrt_form(const RationalMatrix& op, const RationalMatrix& gram);

struct ScalarPlusNilpotent {
  Rational scalar;
  RationalMatrix nilpotent;
};

/// Splits T = gamma*Id + N with gamma = tr(T)/n, succeeding iff N^n = 0.
/// Throws NotScalarPlusNilpotent otherwise.
ScalarPlusNilpotent scalar_plus_nilpotent_split(const RationalMatrix& op);

/// Nonexcepting variant for probing.
std::optional<ScalarPlusNilpotent> try_scalar_plus_nilpotent_split(const RationalMatrix& op);

/// A nonzero vector of the subspace annihilated by every map, found by the
/// kernel-restriction recursion (induction on the subspace dimension).
/// Preconditions (validated, HypothesisViolated otherwise): every map
/// preserves the subspace, and the restrictions pairwise commute and are
/// nilpotent. Returns nullopt only for the zero subspace.
std::optional<Vec> common_kernel_of_nilpotents(const std::vector<RationalMatrix>& maps,
                                               const Subspace& restricted_to);

}  // namespace quadraform

#endif
