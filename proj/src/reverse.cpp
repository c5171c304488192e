#include "quadraform/reverse.hpp"

#include "quadraform/errors.hpp"

namespace quadraform {

namespace {

RationalMatrix require_inverse(const RationalMatrix& m, const char* what) {
  auto inv = m.inverse();
  if (!inv) throw Error(ErrorCode::DegenerateForm, std::string(what) + " is degenerate");
  return *inv;
}

/// Composite coordinates of [e_j (x) s_b, e_k (x) 1].
Vec composite_bracket_with_unit(const CurrentAlgebra& current, std::size_t j, std::size_t b,
                                std::size_t k) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  Vec unit_rep = current.S.unit();
  Vec w(n * m, Rational(0));
  // [e_j, e_k] (x) (s_b * 1) = sum_l c[j][k][l] e_l (x) s_b
  Vec sb = product(current.S, unit_vec(m, b), unit_rep);
  for (std::size_t l = 0; l < n; ++l) {
    if (current.g.c(j, k, l) == 0) continue;
    for (std::size_t d = 0; d < m; ++d) w[l * m + d] += current.g.c(j, k, l) * sb[d];
  }
  return w;
}

void assert_equivariant(const CurrentAlgebra& current, const RationalMatrix& F) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = F * composite_bracket_with_unit(current, j, b, k);
        Vec rhs = bracket(current.g, F.col(j * m + b), unit_vec(n, k));
        if (lhs != rhs)
          throw Error(ErrorCode::InternalInconsistency,
                      "canonical F fails equivariance; the current metric is not invariant");
      }
}

bool equivariance_witness(const CurrentAlgebra& current, const RationalMatrix& F,
                          std::string* witness) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = F * composite_bracket_with_unit(current, j, b, k);
        Vec rhs = bracket(current.g, F.col(j * m + b), unit_vec(n, k));
        if (lhs != rhs) {
          if (witness)
            *witness = "F([x(x)t, y(x)1]) != [F(x(x)t), y] at (j,b,k) = (" + std::to_string(j) +
                       "," + std::to_string(b) + "," + std::to_string(k) + ")";
          return false;
        }
      }
  return true;
}

}  // namespace

Vec unit_dual_functional(const AssocAlgebra& S) {
  std::size_t m = S.dim();
  std::vector<Vec> cols{S.unit()};
  Subspace span = Subspace::from_span(m, cols);
  for (std::size_t i = 0; i < m && cols.size() < m; ++i) {
    Vec e = unit_vec(m, i);
    if (!span.contains(e)) {
      cols.push_back(e);
      span = Subspace::from_span(m, cols);
    }
  }
  RationalMatrix q(m, m);
  for (std::size_t j = 0; j < m; ++j) q.set_col(j, cols[j]);
  RationalMatrix q_inv = require_inverse(q, "unit completion");
  return q_inv.row(0);
}

RationalMatrix canonical_F(const CurrentAlgebra& current, const BilinearForm& candidate_B,
                           const BilinearForm& current_metric) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  if (candidate_B.dim() != n || current_metric.dim() != n * m)
    throw Error(ErrorCode::DimensionMismatch, "canonical_F input shapes");
  RationalMatrix g_inv = require_inverse(candidate_B.matrix(), "candidate form");
  if (!current_metric.is_nondegenerate())
    throw Error(ErrorCode::DegenerateForm, "current metric is degenerate");
  RationalMatrix f =
      g_inv * iota_matrix(n, current.S.unit()).transposed() * current_metric.matrix();
  if (verify_invariant_metric(current.as_lie, current_metric).invariant)
    assert_equivariant(current, f);
  return f;
}

RationalMatrix canonical_H(const CurrentAlgebra& current, const BilinearForm& candidate_B,
                           const BilinearForm& current_metric) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  if (candidate_B.dim() != n || current_metric.dim() != n * m)
    throw Error(ErrorCode::DimensionMismatch, "canonical_H input shapes");
  RationalMatrix big_inv = require_inverse(current_metric.matrix(), "current metric");
  Vec p1 = unit_dual_functional(current.S);
  RationalMatrix p_tilde(n, n * m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t b = 0; b < m; ++b) p_tilde.at(j, j * m + b) = p1[b];
  RationalMatrix h = big_inv * p_tilde.transposed() * candidate_B.matrix();
  RationalMatrix f = canonical_F(current, candidate_B, current_metric);
  if (f * h != RationalMatrix::identity(n))
    throw Error(ErrorCode::InternalInconsistency, "canonical F o H != Id");
  return h;
}

RationalMatrix transfer_psi(const CurrentAlgebra& current, const BilinearForm& current_metric,
                            const Vec& s, const RationalMatrix& H) {
  std::size_t n = current.g.dim();
  return H.transposed() * current_metric.matrix() * iota_matrix(n, s);
}

DiagramVerdict check_diagram(const CurrentAlgebra& current, const BilinearForm& current_metric,
                             const Vec& s, const RationalMatrix& F, const RationalMatrix& H) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  if (s.size() != m || F.rows() != n || F.cols() != n * m || H.rows() != n * m || H.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "check_diagram input shapes");
  if (!current_metric.is_nondegenerate())
    throw Error(ErrorCode::DegenerateForm, "the diagram test needs a nondegenerate form");
  if (vec_is_zero(s)) throw Error(ErrorCode::HypothesisViolated, "s must be nonzero");
  if (F.rank() != n) throw Error(ErrorCode::HypothesisViolated, "F must be surjective");
  if (F * H != RationalMatrix::identity(n))
    throw Error(ErrorCode::HypothesisViolated, "F o H must be the identity");

  RationalMatrix iota = iota_matrix(n, s);
  RationalMatrix lhs = current_metric.matrix() * iota;                       // Bbar^flat o iota_s
  RationalMatrix rhs = F.transposed() * transfer_psi(current, current_metric, s, H);
  bool entrywise = (lhs == rhs);

  Subspace image = Subspace::from_span(n * m, [&] {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(iota.col(j));
    return cols;
  }());
  Subspace perp = image.perp(current_metric.matrix());
  Subspace kernel = Subspace::from_span(n * m, F.nullspace());
  bool subspaces = (perp == kernel);

  if (entrywise != subspaces)
    throw Error(ErrorCode::InternalInconsistency,
                "diagram test and subspace test disagree");

  DiagramVerdict verdict{entrywise, entrywise, subspaces, std::move(perp), std::move(kernel), ""};
  if (!verdict.commutes) {
    for (std::size_t r = 0; r < lhs.rows() && verdict.witness.empty(); ++r)
      for (std::size_t c = 0; c < lhs.cols(); ++c)
        if (lhs.at(r, c) != rhs.at(r, c)) {
          verdict.witness = "Bbar^flat(iota_s) != F^* psi_s at entry (" + std::to_string(r) +
                            "," + std::to_string(c) + ")";
          break;
        }
  } else {
    // Prop: a commuting pair forces psi_s bijective.
    if (transfer_psi(current, current_metric, s, H).rank() != n)
      throw Error(ErrorCode::InternalInconsistency, "commuting diagram with singular psi_s");
  }
  return verdict;
}

RecoverOutcome recover_metric(const CurrentAlgebra& current, const BilinearForm& current_metric,
                              const Vec& s, const RationalMatrix& F, const RationalMatrix& H) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  if (s.size() != m || F.rows() != n || F.cols() != n * m || H.rows() != n * m || H.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "recover_metric input shapes");
  if (vec_is_zero(s)) throw Error(ErrorCode::HypothesisViolated, "s must be nonzero");
  if (F * H != RationalMatrix::identity(n))
    throw Error(ErrorCode::HypothesisViolated, "F o H must be the identity");
  if (!verify_invariant_metric(current.as_lie, current_metric).all_ok())
    throw Error(ErrorCode::HypothesisViolated, "the current-algebra form is not an invariant metric");

  if (F.rank() != n)
    return {RecoverOutcome::Failed::EquivarianceIII, std::nullopt, "F is not surjective"};

  DiagramVerdict diagram = check_diagram(current, current_metric, s, F, H);
  if (!diagram.commutes) return {RecoverOutcome::Failed::DiagramI, std::nullopt, diagram.witness};

  RationalMatrix psi = transfer_psi(current, current_metric, s, H);
  if (!psi.is_symmetric()) {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (psi.at(i, j) != psi.at(j, i)) {
          witness = "psi_s(x)(y) != psi_s(y)(x) at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
          break;
        }
    return {RecoverOutcome::Failed::SymmetryII, std::nullopt, witness};
  }

  std::string witness;
  if (!equivariance_witness(current, F, &witness))
    return {RecoverOutcome::Failed::EquivarianceIII, std::nullopt, witness};

  BilinearForm metric(psi);
  MetricReport report = verify_invariant_metric(current.g, metric);
  if (!report.all_ok())
    throw Error(ErrorCode::InternalInconsistency,
                "conditions (i)-(iii) hold but the recovered form is not an invariant metric");
  return {RecoverOutcome::Failed::None, std::move(metric), ""};
}

BilinearForm metric_from_nilpotent(const CurrentAlgebra& current,
                                   const BilinearForm& current_metric, const Vec& s) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  if (s.size() != m || current_metric.dim() != n * m)
    throw Error(ErrorCode::DimensionMismatch, "metric_from_nilpotent input shapes");
  if (!is_perfect(current.g)) throw Error(ErrorCode::NotPerfect, "g is not perfect");
  if (vec_is_zero(s)) throw Error(ErrorCode::WrongNilIndex, "s is zero");
  auto index = nil_index(current.S, s);
  if (!index || *index != m)
    throw Error(ErrorCode::WrongNilIndex,
                "s must have nil index exactly dim S = " + std::to_string(m));
  if (!verify_invariant_metric(current.as_lie, current_metric).all_ok())
    throw Error(ErrorCode::HypothesisViolated, "the current-algebra form is not an invariant metric");

  Vec t = element_power(current.S, s, m - 1);
  RationalMatrix gram = iota_matrix(n, t).transposed() * current_metric.matrix() *
                        iota_matrix(n, current.S.unit());
  BilinearForm result(std::move(gram));
  MetricReport report = verify_invariant_metric(current.g, result);
  if (!report.all_ok())
    throw Error(ErrorCode::InternalInconsistency,
                "B_{s^{m-1}} fails verification; contradicts the nilpotent-transfer result");
  return result;
}

std::vector<RationalMatrix> equivariant_f_space(const CurrentAlgebra& current) {
  std::size_t n = current.g.dim(), m = current.S.dim();
  std::size_t cols = n * n * m;
  // Unknowns x_{r,(l,d)} = F(r, l*m+d).
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Vec w = composite_bracket_with_unit(current, j, b, k);
        for (std::size_t r = 0; r < n; ++r) {
          Vec row(cols, Rational(0));
          for (std::size_t ld = 0; ld < n * m; ++ld) row[r * n * m + ld] += w[ld];
          for (std::size_t mm = 0; mm < n; ++mm)
            row[mm * n * m + (j * m + b)] -= current.g.c(mm, k, r);
          if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }
      }
  std::vector<RationalMatrix> basis;
  if (rows.empty()) {
    for (std::size_t u = 0; u < cols; ++u)
      basis.push_back(unvectorize(unit_vec(cols, u), n, n * m));
    return basis;
  }
  for (const auto& v : RationalMatrix::from_rows(rows).nullspace())
    basis.push_back(unvectorize(v, n, n * m));
  return basis;
}

}  // namespace quadraform
