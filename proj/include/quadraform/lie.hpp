#ifndef QUADRAFORM_LIE_HPP
#define QUADRAFORM_LIE_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quadraform/matrix.hpp"
#include "quadraform/subspace.hpp"

namespace quadraform {

/// Lie algebra given by structure constants c[i][j][k] = coefficient of e_k
/// in [e_i, e_j]. Plain data; validate() reports axiom violations.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, std::vector<std::string> basis_names);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[i].at(j, k);
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return tensor_[i].at(j, k); }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vec& value);

  /// ad(e_i) as a matrix: ad(e_i) x = [e_i, x].
  RationalMatrix ad(std::size_t i) const { return tensor_[i].transposed(); }

  /// ad(x) for an arbitrary vector.
  RationalMatrix ad(const Vec& x) const;

  bool operator==(const LieAlgebra& other) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<std::string> basis_names_;
  std::vector<RationalMatrix> tensor_;  // tensor_[i](j,k) = c[i][j][k]
};

/// Square bilinear form over a fixed basis; symmetry and nondegeneracy are
/// computed on demand and cached.
class BilinearForm {
public:
  BilinearForm() = default;
  explicit BilinearForm(RationalMatrix matrix);

  std::size_t dim() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }
  const Rational& at(std::size_t i, std::size_t j) const { return matrix_.at(i, j); }

  Rational eval(const Vec& x, const Vec& y) const;

  bool is_symmetric() const;
  bool is_nondegenerate() const;
  Rational det() const;

  bool operator==(const BilinearForm& other) const { return matrix_ == other.matrix_; }

private:
  RationalMatrix matrix_;
  mutable std::optional<bool> symmetric_;
  mutable std::optional<Rational> det_;
};

struct LieViolation {
  enum class Kind { Antisymmetry, Jacobi } kind;
  std::array<std::size_t, 4> index;  // (i,j,k,0) for antisymmetry, (i,j,k,l) for Jacobi
  Rational residue;
};

/// nullopt when both axioms hold, else the first violation in scan order
/// (antisymmetry over all (i,j,k), then Jacobi over triples i<j<k).
std::optional<LieViolation> validate(const LieAlgebra& g);

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);

Subspace derived_subalgebra(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);

/// RREF-canonical basis of { T : T ad(e_i) = ad(T e_i) for all i }.
std::vector<RationalMatrix> centroid_basis(const LieAlgebra& g);

/// Basis of symmetric G with G ad(e_i) + ad(e_i)^T G = 0 for all i.
std::vector<BilinearForm> invariant_symmetric_forms(const LieAlgebra& g);

/// Deterministic integer-box enumeration: for k = 1,2,...,kmax, visit every
/// coefficient vector of sup-norm exactly k, odometer order with first
/// coordinate slowest and per-coordinate value order 0, 1, -1, 2, -2, ...
/// Stops early when visit returns true; returns whether it did.
bool enumerate_integer_boxes(std::size_t dim, long kmax,
                             const std::function<bool(const std::vector<long>&)>& visit);

/// Box bound that makes a fully exhausted search a proof: a degree <= n
/// polynomial vanishing on a grid with > n points per axis is zero.
long nondegeneracy_search_bound(std::size_t ambient_dim);

/// A combination with nonzero determinant from the span of `forms`, or
/// nullopt when none exists within the (proof-carrying) default bound.
std::optional<BilinearForm> find_nondegenerate(const std::vector<BilinearForm>& forms,
                                               std::optional<long> kmax = std::nullopt);

bool is_nilpotent(const LieAlgebra& g);
bool is_perfect(const LieAlgebra& g);

/// Basis of { T in centroid : T^T B = B T } (B-self-adjoint centroids).
/// Throws DegenerateForm when B is degenerate.
std::vector<RationalMatrix> symmetric_centroids(const LieAlgebra& g, const BilinearForm& B);

struct DecomposabilityVerdict {
  enum class Kind { Indecomposable, Splits, Inconclusive } kind;
  /// Nontrivial B-symmetric centroid idempotent when kind == Splits.
  std::optional<RationalMatrix> idempotent;
  std::string detail;
};

DecomposabilityVerdict is_indecomposable(const LieAlgebra& g, const BilinearForm& B);

struct MetricReport {
  bool symmetric = false;
  bool invariant = false;
  bool nondegenerate = false;
  std::optional<std::array<std::size_t, 2>> symmetry_witness;
  std::optional<std::array<std::size_t, 3>> invariance_witness;
  std::optional<Vec> degeneracy_witness;  // nonzero kernel vector
  bool all_ok() const { return symmetric && invariant && nondegenerate; }
};

/// Checks the three metric axioms independently, with witnesses for every
/// false verdict.
MetricReport verify_invariant_metric(const LieAlgebra& g, const BilinearForm& form);

/// Trace form K(x, y) = tr(ad x ad y).
BilinearForm killing_form(const LieAlgebra& g);

Vec vectorize(const RationalMatrix& m);
RationalMatrix unvectorize(const Vec& v, std::size_t rows, std::size_t cols);

/// Structure constants in the basis given by the (invertible) columns of
/// new_basis, with the supplied names.
LieAlgebra change_of_basis(const LieAlgebra& g, const RationalMatrix& new_basis,
                           std::vector<std::string> names = {});

}  // namespace quadraform

#endif
