#ifndef QUADRAFORM_CURRENT_HPP
#define QUADRAFORM_CURRENT_HPP

#include <optional>
#include <vector>

#include "quadraform/assoc.hpp"
#include "quadraform/lie.hpp"

namespace quadraform {

/// g tensor S with composite basis e_i (x) s_a at index i*m + a.
struct CurrentAlgebra {
  LieAlgebra g;
  AssocAlgebra S;
  LieAlgebra as_lie;

  std::size_t composite_index(std::size_t i, std::size_t a) const { return i * S.dim() + a; }
};

/// Bilinear map alpha : S x S -> End(g), stored as one g-operator per basis
/// pair. Membership of every value in the centroid is a checkable property,
/// not a construction invariant.
class AlphaMap {
public:
  AlphaMap() = default;
  AlphaMap(std::size_t g_dim, std::size_t s_dim);

  std::size_t g_dim() const { return g_dim_; }
  std::size_t s_dim() const { return s_dim_; }

  const RationalMatrix& at(std::size_t a, std::size_t b) const {
    return maps_[a * s_dim_ + b];
  }
  RationalMatrix& at(std::size_t a, std::size_t b) { return maps_[a * s_dim_ + b]; }

  /// alpha(s, t) for arbitrary vectors by bilinear extension.
  RationalMatrix eval(const Vec& s, const Vec& t) const;

  AlphaMap operator+(const AlphaMap& other) const;
  AlphaMap scaled(const Rational& c) const;
  bool operator==(const AlphaMap& other) const = default;

  /// Coordinates of every alpha(s_a, s_b) over a centroid basis, or nullopt
  /// when some value falls outside the span. Layout: coords[a*m+b][r].
  std::optional<std::vector<Vec>> coords_over(const std::vector<RationalMatrix>& centroid) const;

private:
  std::size_t g_dim_ = 0, s_dim_ = 0;
  std::vector<RationalMatrix> maps_;
};

/// Builds the current Lie algebra; checks that iota_1 preserves brackets.
CurrentAlgebra build_current(const LieAlgebra& g, const AssocAlgebra& S);

/// iota_s : g -> g (x) S as an (n*m) x n matrix.
RationalMatrix iota_matrix(std::size_t g_dim, const Vec& s);

/// F(s) : g (x) S -> g with F(s)(x (x) t) = alpha(s, t)(x), as an n x (n*m) matrix.
RationalMatrix curly_f_matrix(const AlphaMap& alpha, const Vec& s);

/// Basis of the kernel of the stacked maps F(s_a), a = 0..m-1 (equals the
/// intersection of all Ker F(s), s in S, by linearity).
std::vector<Vec> common_f_kernel(const AlphaMap& alpha);

/// RREF-canonical basis of the alpha satisfying the linear conditions
///   (i)  alpha(s,t) = alpha(st,1) on [g,g], and
///   (iii) alpha(s,t)^* = alpha(t,s) w.r.t. B,
/// with values constrained to the centroid span. Nondegeneracy (condition
/// (ii)) is not imposed here.
std::vector<AlphaMap> alpha_condition_space(const LieAlgebra& g, const BilinearForm& B,
                                            const AssocAlgebra& S);

/// Metric induced by alpha: entry ((i,a),(j,b)) = B(alpha(s_b,s_a)(e_i), e_j).
BilinearForm metric_from_alpha(const LieAlgebra& g, const BilinearForm& B, const AssocAlgebra& S,
                               const AlphaMap& alpha);

/// Product metric B(x,y) * gamma(s,t) on the composite basis.
BilinearForm product_metric(const BilinearForm& B, const BilinearForm& gamma);

struct CurrentMetricSolution {
  AlphaMap alpha;
  BilinearForm metric;
  /// Independent restatement of condition (ii): basis of the intersection
  /// of the Ker F(s); empty exactly when the metric is nondegenerate.
  std::vector<Vec> f_kernel;
};

/// Searches the condition space for an alpha with nondegenerate induced
/// metric: first the product candidate Id (x) gamma when S has a
/// nondegenerate Frobenius form, then the deterministic integer-box
/// enumeration (a full exhaustion is a proof that no such alpha exists,
/// hence by the characterization no invariant metric at all).
std::optional<CurrentMetricSolution> solve_current_metric(const LieAlgebra& g,
                                                          const BilinearForm& B,
                                                          const AssocAlgebra& S,
                                                          std::optional<long> kmax = std::nullopt);

struct FrobeniusExtraction {
  BilinearForm gamma;                    // scalar parts of alpha(s,t) + alpha(t,s)
  std::vector<RationalMatrix> sigma;     // nilpotent parts, layout a*m+b
};

/// Splits alpha(s,t)+alpha(t,s) = gamma(s,t) Id + sigma(s,t) per basis pair
/// and asserts the recovered gamma is symmetric, invariant and nondegenerate.
/// Throws NotScalarPlusNilpotent when the split fails (the indecomposability
/// hypothesis does not hold over Q for this input); the gamma assertions are
/// unreachable when alpha comes from a successful solve on an indecomposable g.
FrobeniusExtraction extract_frobenius_from_alpha(const LieAlgebra& g, const BilinearForm& B,
                                                 const AssocAlgebra& S, const AlphaMap& alpha);

}  // namespace quadraform

#endif
