#include "quadraform/constructions.hpp"

#include "quadraform/errors.hpp"
#include "quadraform/exact_arith.hpp"

namespace quadraform {

namespace {

std::vector<std::string> heisenberg_names(std::size_t n, bool extended) {
  std::vector<std::string> names;
  if (extended) names.push_back("D");
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
  names.push_back("h");
  return names;
}

RationalMatrix standard_symplectic(std::size_t n) {
  RationalMatrix omega(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    omega.at(i, n + i) = 1;
    omega.at(n + i, i) = -1;
  }
  return omega;
}

}  // namespace

LieAlgebra heisenberg(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "heisenberg needs n >= 1");
  LieAlgebra g(2 * n + 1, heisenberg_names(n, false));
  Vec hbar = unit_vec(2 * n + 1, 2 * n);
  for (std::size_t i = 0; i < n; ++i) g.set_bracket(i, n + i, hbar);
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g(3, {"e", "f", "h"});
  g.set_bracket(0, 1, Vec{Rational(0), Rational(0), Rational(1)});   // [e,f] = h
  g.set_bracket(0, 2, Vec{Rational(-2), Rational(0), Rational(0)});  // [e,h] = -2e
  g.set_bracket(1, 2, Vec{Rational(0), Rational(2), Rational(0)});   // [f,h] = 2f
  return g;
}

ExtendedHeisenberg heisenberg_extended(std::size_t n, std::optional<RationalMatrix> phi_opt) {
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "heisenberg_extended needs n >= 1");
  std::size_t v = 2 * n;
  RationalMatrix omega = standard_symplectic(n);
  RationalMatrix phi(v, v);
  if (phi_opt) {
    phi = std::move(*phi_opt);
    if (phi.rows() != v || phi.cols() != v)
      throw Error(ErrorCode::InvalidPhi, "phi must act on the 2n-dimensional symplectic space");
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      phi.at(i, i) = 1;
      phi.at(n + i, n + i) = -1;
    }
  }
  auto phi_inv = phi.inverse();
  if (!phi_inv) throw Error(ErrorCode::InvalidPhi, "phi is not invertible");
  if (phi.transposed() * omega + omega * phi != RationalMatrix(v, v))
    throw Error(ErrorCode::InvalidPhi, "phi is not omega-anti-self-adjoint");

  std::size_t dim = v + 2;  // (D, V_n, hbar)
  LieAlgebra g(dim, heisenberg_names(n, true));
  Vec hbar = unit_vec(dim, dim - 1);
  // [D, x] = phi(x) for x in V_n
  for (std::size_t j = 0; j < v; ++j) {
    Vec image(dim, Rational(0));
    for (std::size_t i = 0; i < v; ++i) image[1 + i] = phi.at(i, j);
    g.set_bracket(0, 1 + j, image);
  }
  // [x, y] = omega(x, y) hbar for x, y in V_n
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) {
      if (omega.at(i, j) == 0) continue;
      g.set_bracket(1 + i, 1 + j, vec_scale(omega.at(i, j), hbar));
    }

  RationalMatrix B(dim, dim);
  RationalMatrix restricted = phi_inv->transposed() * omega;  // B(x,y) = omega(phi^{-1} x, y)
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) B.at(1 + i, 1 + j) = restricted.at(i, j);
  B.at(0, dim - 1) = 1;
  B.at(dim - 1, 0) = 1;

  ExtendedHeisenberg data{std::move(g), BilinearForm(std::move(B)), std::move(phi),
                          std::move(omega)};
  MetricReport report = verify_invariant_metric(data.algebra, data.metric);
  if (!report.all_ok())
    throw Error(ErrorCode::InternalInconsistency, "extended Heisenberg metric fails verification");
  return data;
}

AlphaMap heisenberg_current_alpha(std::size_t n, const AssocAlgebra& S, const BilinearForm& gamma,
                                  const BilinearForm& xi) {
  std::size_t m = S.dim();
  if (gamma.dim() != m) throw Error(ErrorCode::BadGamma, "gamma has wrong dimension");
  if (xi.dim() != m) throw Error(ErrorCode::BadXi, "xi has wrong dimension");
  if (!gamma.is_symmetric()) throw Error(ErrorCode::BadGamma, "gamma is not symmetric");
  if (!is_invariant_form(S, gamma)) throw Error(ErrorCode::BadGamma, "gamma is not invariant");
  if (!gamma.is_nondegenerate()) throw Error(ErrorCode::BadGamma, "gamma is degenerate");
  if (!xi.is_symmetric()) throw Error(ErrorCode::BadXi, "xi is not symmetric");

  std::size_t dim = 2 * n + 2;
  RationalMatrix nil(dim, dim);
  nil.at(dim - 1, 0) = 1;  // N(D) = hbar
  AlphaMap alpha(dim, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      alpha.at(a, b) =
          RationalMatrix::identity(dim).scaled(gamma.at(a, b)) + nil.scaled(xi.at(a, b));
  return alpha;
}

DoubleExtensionData double_extension(const LieAlgebra& h, const BilinearForm& B_h,
                                     const RationalMatrix& D) {
  std::size_t nh = h.dim();
  if (B_h.dim() != nh || D.rows() != nh || D.cols() != nh)
    throw Error(ErrorCode::DimensionMismatch, "double extension input shape mismatch");
  MetricReport base = verify_invariant_metric(h, B_h);
  if (!base.all_ok())
    throw Error(ErrorCode::DegenerateForm, "B_h is not an invariant metric on h");
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = i + 1; j < nh; ++j) {
      Vec base_bracket(nh);
      for (std::size_t k = 0; k < nh; ++k) base_bracket[k] = h.c(i, j, k);
      Vec lhs = D * base_bracket;
      Vec rhs = vec_add(bracket(h, D.col(i), unit_vec(nh, j)),
                        bracket(h, unit_vec(nh, i), D.col(j)));
      if (lhs != rhs)
        throw Error(ErrorCode::NotDerivation,
                    "D is not a derivation at basis pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
  if (D.transposed() * B_h.matrix() + B_h.matrix() * D != RationalMatrix(nh, nh))
    throw Error(ErrorCode::NotSkew, "D is not B_h-skew-symmetric");

  std::size_t dim = nh + 2;  // (d, h..., c)
  std::vector<std::string> names;
  names.push_back("d");
  for (const auto& nm : h.basis_names()) names.push_back(nm);
  names.push_back("c");
  LieAlgebra result(dim, std::move(names));
  Vec c_vec = unit_vec(dim, dim - 1);
  for (std::size_t j = 0; j < nh; ++j) {
    Vec image(dim, Rational(0));
    for (std::size_t i = 0; i < nh; ++i) image[1 + i] = D.at(i, j);
    result.set_bracket(0, 1 + j, image);
  }
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = i + 1; j < nh; ++j) {
      Vec image(dim, Rational(0));
      for (std::size_t k = 0; k < nh; ++k) image[1 + k] = h.c(i, j, k);
      image[dim - 1] = vec_dot(D.col(i), B_h.matrix() * unit_vec(nh, j));  // B_h(D e_i, e_j)
      result.set_bracket(1 + i, 1 + j, image);
    }

  RationalMatrix B(dim, dim);
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nh; ++j) B.at(1 + i, 1 + j) = B_h.at(i, j);
  B.at(0, dim - 1) = 1;
  B.at(dim - 1, 0) = 1;

  if (validate(result))
    throw Error(ErrorCode::InternalInconsistency, "double extension violates the Lie axioms");
  BilinearForm B_ext(std::move(B));
  MetricReport report = verify_invariant_metric(result, B_ext);
  if (!report.all_ok())
    throw Error(ErrorCode::InternalInconsistency, "double extension metric fails verification");
  if (!center(result).contains(c_vec))
    throw Error(ErrorCode::InternalInconsistency, "c is not central in the double extension");
  bool c_in_derived = derived_subalgebra(result).contains(c_vec);
  return DoubleExtensionData{h,       B_h,   D, std::move(result), std::move(B_ext),
                             c_in_derived};
}

std::vector<RationalMatrix> skew_derivations(const LieAlgebra& h, const BilinearForm& B_h) {
  std::size_t n = h.dim();
  if (B_h.dim() != n) throw Error(ErrorCode::DimensionMismatch, "form/algebra dimension mismatch");
  if (n == 0) return {};
  std::size_t pair_rows = n * (n - 1) / 2 * n;
  RationalMatrix system(pair_rows + n * n, n * n);
  std::size_t row = 0;
  // D([e_i,e_j]) = [D e_i, e_j] + [e_i, D e_j]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t m = 0; m < n; ++m) {
          system.at(row, k * n + m) += h.c(i, j, m);
          system.at(row, m * n + i) -= h.c(m, j, k);
          system.at(row, m * n + j) -= h.c(i, m, k);
        }
      }
  // D^T G + G D = 0
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c, ++row) {
      for (std::size_t m = 0; m < n; ++m) {
        system.at(row, m * n + r) += B_h.at(m, c);
        system.at(row, m * n + c) += B_h.at(r, m);
      }
    }
  std::vector<RationalMatrix> basis;
  for (const auto& v : system.nullspace()) basis.push_back(unvectorize(v, n, n));
  return basis;
}

AlphaMap double_extension_alpha(const LieAlgebra& h, const BilinearForm& B_h,
                                const RationalMatrix& D, const AssocAlgebra& S,
                                std::optional<AlphaMap> alpha_h_opt, const BilinearForm& gammap,
                                const PairVectorMap& f, const BilinearForm& zeta) {
  std::size_t nh = h.dim(), m = S.dim();
  if (gammap.dim() != m || zeta.dim() != m)
    throw Error(ErrorCode::DimensionMismatch, "gamma'/zeta dimension mismatch");
  if (!gammap.is_symmetric())
    throw Error(ErrorCode::CompatibilityFailed, "gamma' is not symmetric");
  if (!is_invariant_form(S, gammap))
    throw Error(ErrorCode::CompatibilityFailed, "gamma'(st,u) = gamma'(s,tu) fails");
  if (!gammap.is_nondegenerate())
    throw Error(ErrorCode::CompatibilityFailed, "gamma' is degenerate");
  if (!zeta.is_symmetric()) throw Error(ErrorCode::CompatibilityFailed, "zeta is not symmetric");
  if (!f.values.empty() && (f.s_dim != m || f.values.size() != m * m))
    throw Error(ErrorCode::DimensionMismatch, "f has wrong pair layout");

  AlphaMap alpha_h(nh, m);
  if (alpha_h_opt) {
    alpha_h = std::move(*alpha_h_opt);
    if (alpha_h.g_dim() != nh || alpha_h.s_dim() != m)
      throw Error(ErrorCode::DimensionMismatch, "alpha_h shape mismatch");
  } else {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        alpha_h.at(a, b) = RationalMatrix::identity(nh).scaled(gammap.at(a, b));
  }

  Subspace admissible = center(h).intersect(Subspace::from_span(nh, D.nullspace()));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (const Vec* fv = f.value(a, b); fv && !vec_is_zero(*fv)) {
        if (fv->size() != nh)
          throw Error(ErrorCode::DimensionMismatch, "f value has wrong length");
        if (!admissible.contains(*fv))
          throw Error(ErrorCode::CompatibilityFailed,
                      "f(s,t) is not in C(h) /\\ Ker(D) at pair (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
      }
      RationalMatrix scaled_d = D.scaled(gammap.at(a, b));
      if (alpha_h.at(a, b) * D != scaled_d || D * alpha_h.at(a, b) != scaled_d)
        throw Error(ErrorCode::CompatibilityFailed,
                    "alpha_h(s,t) o D = D o alpha_h(s,t) = gamma'(s,t) D fails at pair (" +
                        std::to_string(a) + "," + std::to_string(b) + ")");
    }

  DoubleExtensionData ext = double_extension(h, B_h, D);
  std::size_t dim = nh + 2;
  AlphaMap alpha(dim, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      RationalMatrix op(dim, dim);
      const Vec* fv = f.value(a, b);
      // column for d
      op.at(0, 0) = gammap.at(a, b);
      if (fv)
        for (std::size_t i = 0; i < nh; ++i) op.at(1 + i, 0) = (*fv)[i];
      op.at(dim - 1, 0) = zeta.at(a, b);
      // columns for h: alpha_h block plus the B_h(f, x) c term
      for (std::size_t j = 0; j < nh; ++j) {
        for (std::size_t i = 0; i < nh; ++i) op.at(1 + i, 1 + j) = alpha_h.at(a, b).at(i, j);
        if (fv) op.at(dim - 1, 1 + j) = vec_dot(*fv, B_h.matrix() * unit_vec(nh, j));
      }
      // column for c
      op.at(dim - 1, dim - 1) = gammap.at(a, b);
      alpha.at(a, b) = std::move(op);
    }

  // Full output verification against the characterization conditions.
  const LieAlgebra& big = ext.result;
  const BilinearForm& B = ext.B_ext;
  Subspace commutator = derived_subalgebra(big);
  Vec one = S.unit();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const RationalMatrix& op = alpha.at(a, b);
      for (std::size_t i = 0; i < dim; ++i) {
        if (op * big.ad(i) != big.ad(op.col(i)))
          throw Error(ErrorCode::CompatibilityFailed,
                      "alpha(s,t) is not a centroid of the double extension");
      }
      Vec prod(m);
      for (std::size_t c = 0; c < m; ++c) prod[c] = S.mu(a, b, c);
      RationalMatrix at_prod = alpha.eval(prod, one);
      for (const auto& v : commutator.basis()) {
        if (op * v != at_prod * v)
          throw Error(ErrorCode::CompatibilityFailed,
                      "alpha(s,t) != alpha(st,1) on the derived subalgebra");
      }
      if (adjoint_wrt_form(op, B.matrix()) != alpha.at(b, a))
        throw Error(ErrorCode::CompatibilityFailed, "alpha(s,t)^* != alpha(t,s)");
    }
  if (!common_f_kernel(alpha).empty())
    throw Error(ErrorCode::CompatibilityFailed, "kernel condition fails for the extended alpha");
  // Metric entries of the double-extension recipe.
  BilinearForm induced = metric_from_alpha(big, B, S, alpha);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (induced.at(a, (dim - 1) * m + b) != gammap.at(a, b))
        throw Error(ErrorCode::CompatibilityFailed, "induced metric violates B(d(x)s, c(x)t)");
      if (induced.at((dim - 1) * m + a, (dim - 1) * m + b) != 0)
        throw Error(ErrorCode::CompatibilityFailed, "induced metric violates B(c(x)s, c(x)t)");
      if (induced.at(a, b) != zeta.at(a, b))
        throw Error(ErrorCode::CompatibilityFailed, "induced metric violates B(d(x)s, d(x)t)");
    }
  return alpha;
}

WittSplitData witt_split(const LieAlgebra& g, const BilinearForm& B, const Vec& c) {
  std::size_t n = g.dim();
  if (B.dim() != n || c.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "witt_split input shape mismatch");
  if (!verify_invariant_metric(g, B).all_ok())
    throw Error(ErrorCode::DegenerateForm, "B is not an invariant metric on g");
  if (vec_is_zero(c)) throw Error(ErrorCode::BadCenterVector, "c is zero");
  if (!center(g).contains(c)) throw Error(ErrorCode::BadCenterVector, "c is not central");
  if (B.eval(c, c) != 0) throw Error(ErrorCode::BadCenterVector, "c is not isotropic");
  // Membership in [g,g] is automatic for indecomposable g; reported, not required.
  bool c_in_derived = derived_subalgebra(g).contains(c);

  // d0 with B(c, d0) = 1, canonical RREF solution, then make d isotropic.
  RationalMatrix functional(1, n);
  functional.set_row(0, B.matrix().transposed() * c);  // entry i: B(c, e_i)
  auto d0 = functional.solve(Vec{Rational(1)});
  if (!d0) throw Error(ErrorCode::InternalInconsistency, "no B-dual for nonzero c");
  Vec d = vec_sub(*d0, vec_scale(B.eval(*d0, *d0) / 2, c));

  Subspace span_cd = Subspace::from_span(n, {c, d});
  Subspace h_space = span_cd.perp(B.matrix());
  if (h_space.dim() != n - 2)
    throw Error(ErrorCode::InternalInconsistency, "Witt complement has wrong dimension");

  RationalMatrix to_witt(n, n);
  to_witt.set_col(0, d);
  for (std::size_t j = 0; j < n - 2; ++j) to_witt.set_col(1 + j, h_space.basis()[j]);
  to_witt.set_col(n - 1, c);
  auto from_witt = to_witt.inverse();
  if (!from_witt)
    throw Error(ErrorCode::InternalInconsistency, "Witt basis is not a basis");

  std::size_t k = n - 2;
  LieAlgebra h(k, {});
  RationalMatrix D(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Vec image = bracket(g, d, h_space.basis()[j]);
    Vec coords = *from_witt * image;
    if (coords[0] != 0)
      throw Error(ErrorCode::InternalInconsistency, "[d, h] leaves the Witt complement");
    if (coords[n - 1] != 0)
      throw Error(ErrorCode::InternalInconsistency, "[d, h] has a c component");
    for (std::size_t i = 0; i < k; ++i) D.at(i, j) = coords[1 + i];
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vec image = bracket(g, h_space.basis()[i], h_space.basis()[j]);
      Vec coords = *from_witt * image;
      if (coords[0] != 0)
        throw Error(ErrorCode::InternalInconsistency, "[h, h] has a d component");
      Vec inner(k);
      for (std::size_t t = 0; t < k; ++t) inner[t] = coords[1 + t];
      h.set_bracket(i, j, inner);
    }

  RationalMatrix B_h(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      B_h.at(i, j) = B.eval(h_space.basis()[i], h_space.basis()[j]);

  return WittSplitData{std::move(d), h_space.basis(),        std::move(h),
                       BilinearForm(std::move(B_h)), std::move(D), std::move(to_witt),
                       c_in_derived};
}

}  // namespace quadraform
