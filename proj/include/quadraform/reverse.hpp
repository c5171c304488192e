#ifndef QUADRAFORM_REVERSE_HPP
#define QUADRAFORM_REVERSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "quadraform/current.hpp"

namespace quadraform {

/// Dual-basis functional of the unit: the first row of the inverse of a
/// basis-change matrix whose first column is the unit (completed greedily
/// with standard basis vectors).
Vec unit_dual_functional(const AssocAlgebra& S);

/// F = B^sharp o iota_1^* o Bbar^flat, the unique map with
/// Bbar(x (x) s, y (x) 1) = B(F(x (x) s), y). Always surjective. When Bbar
/// is invariant it also satisfies F([x (x) t, y (x) 1]) = [F(x (x) t), y],
/// which is asserted. Throws DegenerateForm.
RationalMatrix canonical_F(const CurrentAlgebra& current, const BilinearForm& candidate_B,
                           const BilinearForm& current_metric);

/// H = Bbar^sharp o p~^* o B^flat, the unique map with
/// Bbar(H(x), y (x) s) = p^1(s) B(x, y); satisfies F o H = Id (asserted).
RationalMatrix canonical_H(const CurrentAlgebra& current, const BilinearForm& candidate_B,
                           const BilinearForm& current_metric);

/// psi_s = H^* o Bbar^flat o iota_s as an n x n matrix g -> g^*.
RationalMatrix transfer_psi(const CurrentAlgebra& current, const BilinearForm& current_metric,
                            const Vec& s, const RationalMatrix& H);

struct DiagramVerdict {
  bool commutes;
  /// Entrywise test Bbar^flat o iota_s == F^* o psi_s.
  bool entrywise_equal;
  /// Independent subspace test Im(iota_s)^perp == Ker(F).
  bool subspaces_equal;
  Subspace im_iota_perp;
  Subspace ker_f;
  std::string witness;  // set when the diagram fails
};

/// Tests the commutative diagram both ways (entrywise and by the subspace
/// characterization); the two verdicts must agree or InternalInconsistency
/// is thrown. Preconditions (HypothesisViolated): s != 0, F surjective,
/// F o H = Id.
DiagramVerdict check_diagram(const CurrentAlgebra& current, const BilinearForm& current_metric,
                             const Vec& s, const RationalMatrix& F, const RationalMatrix& H);

struct RecoverOutcome {
  enum class Failed { None, DiagramI, SymmetryII, EquivarianceIII } failed;
  std::optional<BilinearForm> metric;  // set when failed == None
  std::string witness;
};

/// Attempts to transfer the metric on g (x) S back to g through (s, F, H):
/// checks the diagram (i), symmetry of psi_s (ii), and F-equivariance plus
/// surjectivity (iii); on success the returned form passes all three metric
/// axioms (asserted). The current metric itself must verify
/// (HypothesisViolated otherwise).
RecoverOutcome recover_metric(const CurrentAlgebra& current, const BilinearForm& current_metric,
                              const Vec& s, const RationalMatrix& F, const RationalMatrix& H);

/// B_t(x,y) = Bbar(x (x) t, y (x) 1) with t = s^{m-1}, for perfect g and s
/// of nil index exactly m = dim S. Throws NotPerfect / WrongNilIndex; the
/// result is re-verified to be symmetric, invariant and nondegenerate.
BilinearForm metric_from_nilpotent(const CurrentAlgebra& current,
                                   const BilinearForm& current_metric, const Vec& s);

/// Basis of the linear space { F : F([x (x) t, y (x) 1]) = [F(x (x) t), y] }
/// (the transfer equivariance identity), used by the bounded reverse search.
std::vector<RationalMatrix> equivariant_f_space(const CurrentAlgebra& current);

}  // namespace quadraform

#endif
