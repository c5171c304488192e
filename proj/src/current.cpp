#include "quadraform/current.hpp"

#include "quadraform/errors.hpp"
#include "quadraform/exact_arith.hpp"

namespace quadraform {

AlphaMap::AlphaMap(std::size_t g_dim, std::size_t s_dim)
    : g_dim_(g_dim), s_dim_(s_dim), maps_(s_dim * s_dim, RationalMatrix(g_dim, g_dim)) {}

RationalMatrix AlphaMap::eval(const Vec& s, const Vec& t) const {
  if (s.size() != s_dim_ || t.size() != s_dim_)
    throw Error(ErrorCode::DimensionMismatch, "alpha eval operand length mismatch");
  RationalMatrix acc(g_dim_, g_dim_);
  for (std::size_t a = 0; a < s_dim_; ++a) {
    if (s[a] == 0) continue;
    for (std::size_t b = 0; b < s_dim_; ++b) {
      if (t[b] == 0) continue;
      acc = acc + at(a, b).scaled(s[a] * t[b]);
    }
  }
  return acc;
}

AlphaMap AlphaMap::operator+(const AlphaMap& other) const {
  if (g_dim_ != other.g_dim_ || s_dim_ != other.s_dim_)
    throw Error(ErrorCode::DimensionMismatch, "alpha add shape mismatch");
  AlphaMap r(g_dim_, s_dim_);
  for (std::size_t i = 0; i < maps_.size(); ++i) r.maps_[i] = maps_[i] + other.maps_[i];
  return r;
}

AlphaMap AlphaMap::scaled(const Rational& c) const {
  AlphaMap r(g_dim_, s_dim_);
  for (std::size_t i = 0; i < maps_.size(); ++i) r.maps_[i] = maps_[i].scaled(c);
  return r;
}

std::optional<std::vector<Vec>> AlphaMap::coords_over(
    const std::vector<RationalMatrix>& centroid) const {
  RationalMatrix basis_mat(g_dim_ * g_dim_, centroid.size());
  for (std::size_t r = 0; r < centroid.size(); ++r) basis_mat.set_col(r, vectorize(centroid[r]));
  std::vector<Vec> coords;
  for (const auto& m : maps_) {
    auto x = basis_mat.solve(vectorize(m));
    if (!x) return std::nullopt;
    coords.push_back(std::move(*x));
  }
  return coords;
}

CurrentAlgebra build_current(const LieAlgebra& g, const AssocAlgebra& S) {
  std::size_t n = g.dim(), m = S.dim();
  std::vector<std::string> names;
  names.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      names.push_back(g.basis_names()[i] + "(x)" + S.basis_names()[a]);
  LieAlgebra big(n * m, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t d = 0; d < m; ++d) {
              Rational value = g.c(i, j, k) * S.mu(a, b, d);
              if (value != 0) big.c(i * m + a, j * m + b, k * m + d) = value;
            }
  CurrentAlgebra current{g, S, std::move(big)};
  // iota_1 must be a Lie algebra homomorphism.
  RationalMatrix emb = iota_matrix(n, S.unit());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec base(n);
      for (std::size_t k = 0; k < n; ++k) base[k] = g.c(i, j, k);
      Vec lhs = emb * base;
      Vec rhs = bracket(current.as_lie, emb * unit_vec(n, i), emb * unit_vec(n, j));
      if (lhs != rhs)
        throw Error(ErrorCode::InternalInconsistency, "iota_1 is not a Lie homomorphism");
    }
  return current;
}

RationalMatrix iota_matrix(std::size_t g_dim, const Vec& s) {
  std::size_t m = s.size();
  RationalMatrix emb(g_dim * m, g_dim);
  for (std::size_t i = 0; i < g_dim; ++i)
    for (std::size_t a = 0; a < m; ++a) emb.at(i * m + a, i) = s[a];
  return emb;
}

RationalMatrix curly_f_matrix(const AlphaMap& alpha, const Vec& s) {
  std::size_t n = alpha.g_dim(), m = alpha.s_dim();
  if (s.size() != m) throw Error(ErrorCode::DimensionMismatch, "F(s) argument length mismatch");
  RationalMatrix f(n, n * m);
  for (std::size_t b = 0; b < m; ++b) {
    RationalMatrix op(n, n);
    for (std::size_t a = 0; a < m; ++a) {
      if (s[a] == 0) continue;
      op = op + alpha.at(a, b).scaled(s[a]);
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) f.at(k, j * m + b) = op.at(k, j);
  }
  return f;
}

std::vector<Vec> common_f_kernel(const AlphaMap& alpha) {
  std::size_t m = alpha.s_dim();
  std::vector<RationalMatrix> blocks;
  blocks.reserve(m);
  for (std::size_t a = 0; a < m; ++a)
    blocks.push_back(curly_f_matrix(alpha, unit_vec(m, a)));
  return RationalMatrix::vstack(blocks).nullspace();
}

std::vector<AlphaMap> alpha_condition_space(const LieAlgebra& g, const BilinearForm& B,
                                            const AssocAlgebra& S) {
  std::size_t n = g.dim(), m = S.dim();
  if (B.dim() != n) throw Error(ErrorCode::DimensionMismatch, "form/algebra dimension mismatch");
  if (!B.is_nondegenerate()) throw Error(ErrorCode::DegenerateForm, "base form is degenerate");

  std::vector<RationalMatrix> centroid = centroid_basis(g);
  std::size_t r = centroid.size();
  std::vector<RationalMatrix> centroid_adj;
  centroid_adj.reserve(r);
  for (const auto& t : centroid) centroid_adj.push_back(adjoint_wrt_form(t, B.matrix()));

  Subspace commutator = derived_subalgebra(g);
  // Unknowns x_{a,b,t}: alpha(s_a, s_b) = sum_t x_{a,b,t} centroid[t].
  auto unknown = [&](std::size_t a, std::size_t b, std::size_t t) {
    return (a * m + b) * r + t;
  };
  std::size_t cols = m * m * r;

  std::vector<Vec> rows;
  // (i) alpha(s_a, s_b)(v) = alpha(s_a s_b, 1)(v) for v spanning [g,g].
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec prod(m);
      for (std::size_t c = 0; c < m; ++c) prod[c] = S.mu(a, b, c);
      const Vec& one = S.unit();
      for (const auto& v : commutator.basis()) {
        std::vector<Vec> images(r);
        for (std::size_t t = 0; t < r; ++t) images[t] = centroid[t] * v;
        for (std::size_t k = 0; k < n; ++k) {
          Vec row(cols, Rational(0));
          for (std::size_t t = 0; t < r; ++t) {
            row[unknown(a, b, t)] += images[t][k];
            for (std::size_t c = 0; c < m; ++c)
              for (std::size_t d = 0; d < m; ++d) {
                Rational coeff = prod[c] * one[d];
                if (coeff != 0) row[unknown(c, d, t)] -= coeff * images[t][k];
              }
          }
          rows.push_back(std::move(row));
        }
      }
    }
  // (iii) alpha(s_a, s_b)^* = alpha(s_b, s_a).
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Vec row(cols, Rational(0));
          for (std::size_t t = 0; t < r; ++t) {
            row[unknown(a, b, t)] += centroid_adj[t].at(p, q);
            row[unknown(b, a, t)] -= centroid[t].at(p, q);
          }
          if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }

  std::vector<Vec> solution;
  if (rows.empty()) {
    for (std::size_t u = 0; u < cols; ++u) solution.push_back(unit_vec(cols, u));
  } else {
    solution = RationalMatrix::from_rows(rows).nullspace();
  }

  std::vector<AlphaMap> basis;
  for (const auto& x : solution) {
    AlphaMap alpha(n, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        RationalMatrix op(n, n);
        for (std::size_t t = 0; t < r; ++t) {
          if (x[unknown(a, b, t)] == 0) continue;
          op = op + centroid[t].scaled(x[unknown(a, b, t)]);
        }
        alpha.at(a, b) = std::move(op);
      }
    basis.push_back(std::move(alpha));
  }
  return basis;
}

BilinearForm metric_from_alpha(const LieAlgebra& g, const BilinearForm& B, const AssocAlgebra& S,
                               const AlphaMap& alpha) {
  std::size_t n = g.dim(), m = S.dim();
  RationalMatrix big(n * m, n * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      // B(alpha(s_b, s_a) e_i, e_j) over all (i, j)
      RationalMatrix block = alpha.at(b, a).transposed() * B.matrix();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) big.at(i * m + a, j * m + b) = block.at(i, j);
    }
  return BilinearForm(std::move(big));
}

BilinearForm product_metric(const BilinearForm& B, const BilinearForm& gamma) {
  std::size_t n = B.dim(), m = gamma.dim();
  RationalMatrix big(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          big.at(i * m + a, j * m + b) = B.at(i, j) * gamma.at(a, b);
  return BilinearForm(std::move(big));
}

namespace {

CurrentMetricSolution finish_solution(const LieAlgebra& g, const BilinearForm& B,
                                      const AssocAlgebra& S, AlphaMap alpha) {
  BilinearForm metric = metric_from_alpha(g, B, S, alpha);
  std::vector<Vec> kernel = common_f_kernel(alpha);
  if (kernel.empty() != metric.is_nondegenerate())
    throw Error(ErrorCode::InternalInconsistency,
                "kernel condition disagrees with metric nondegeneracy");
  MetricReport report = verify_invariant_metric(build_current(g, S).as_lie, metric);
  if (!report.all_ok())
    throw Error(ErrorCode::InternalInconsistency, "solved metric fails verification");
  return CurrentMetricSolution{std::move(alpha), std::move(metric), std::move(kernel)};
}

}  // namespace

std::optional<CurrentMetricSolution> solve_current_metric(const LieAlgebra& g,
                                                          const BilinearForm& B,
                                                          const AssocAlgebra& S,
                                                          std::optional<long> kmax) {
  std::size_t n = g.dim(), m = S.dim();
  std::vector<AlphaMap> space = alpha_condition_space(g, B, S);

  // Fast path: the product candidate alpha = gamma * Id (Id is always a
  // centroid and gamma Frobenius makes conditions (i) and (iii) automatic).
  if (auto gamma = find_nondegenerate(frobenius_forms(S))) {
    AlphaMap alpha(n, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        alpha.at(a, b) = RationalMatrix::identity(n).scaled(gamma->at(a, b));
    return finish_solution(g, B, S, std::move(alpha));
  }

  if (space.empty()) return std::nullopt;
  // metric_from_alpha is linear in alpha: precompute the basis metrics and
  // bail out (certified) when they share a kernel vector.
  std::vector<RationalMatrix> basis_metrics;
  basis_metrics.reserve(space.size());
  for (const auto& alpha : space)
    basis_metrics.push_back(metric_from_alpha(g, B, S, alpha).matrix());
  if (!RationalMatrix::vstack(basis_metrics).nullspace().empty()) return std::nullopt;

  long bound = kmax.value_or(nondegeneracy_search_bound(n * m));
  std::optional<AlphaMap> found;
  enumerate_integer_boxes(space.size(), bound, [&](const std::vector<long>& coeffs) {
    RationalMatrix candidate_metric(n * m, n * m);
    for (std::size_t t = 0; t < space.size(); ++t) {
      if (coeffs[t] == 0) continue;
      candidate_metric = candidate_metric + basis_metrics[t].scaled(Rational(coeffs[t]));
    }
    if (candidate_metric.det() != 0) {
      AlphaMap candidate(n, m);
      for (std::size_t t = 0; t < space.size(); ++t) {
        if (coeffs[t] == 0) continue;
        candidate = candidate + space[t].scaled(Rational(coeffs[t]));
      }
      found = std::move(candidate);
      return true;
    }
    return false;
  });
  if (!found) return std::nullopt;
  return finish_solution(g, B, S, std::move(*found));
}

FrobeniusExtraction extract_frobenius_from_alpha(const LieAlgebra& g, const BilinearForm& B,
                                                 const AssocAlgebra& S, const AlphaMap& alpha) {
  std::size_t n = g.dim(), m = alpha.s_dim();
  if (alpha.g_dim() != n || S.dim() != m || B.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "alpha/algebra dimension mismatch");
  RationalMatrix gamma_mat(m, m);
  std::vector<RationalMatrix> sigma(m * m, RationalMatrix(n, n));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      ScalarPlusNilpotent split = scalar_plus_nilpotent_split(alpha.at(a, b) + alpha.at(b, a));
      gamma_mat.at(a, b) = split.scalar;
      sigma[a * m + b] = std::move(split.nilpotent);
    }
  BilinearForm gamma(std::move(gamma_mat));
  // Unreachable under the stated preconditions.
  if (!gamma.is_symmetric())
    throw Error(ErrorCode::InternalInconsistency, "extracted gamma is not symmetric");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Rational left(0), right(0);
        for (std::size_t d = 0; d < m; ++d) {
          left += S.mu(a, b, d) * gamma.at(d, c);   // gamma(ab, c)
          right += S.mu(b, c, d) * gamma.at(a, d);  // gamma(a, bc)
        }
        if (left != right)
          throw Error(ErrorCode::InternalInconsistency, "extracted gamma is not invariant");
      }
  if (!gamma.is_nondegenerate())
    throw Error(ErrorCode::InternalInconsistency, "extracted gamma is degenerate");
  return FrobeniusExtraction{std::move(gamma), std::move(sigma)};
}

}  // namespace quadraform
