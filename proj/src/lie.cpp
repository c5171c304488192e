#include "quadraform/lie.hpp"

#include <algorithm>

#include "quadraform/errors.hpp"
#include "quadraform/exact_arith.hpp"

namespace quadraform {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), basis_names_(std::move(basis_names)) {
  if (basis_names_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) basis_names_.push_back("e" + std::to_string(i));
  }
  if (basis_names_.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "basis name count != dim");
  tensor_.assign(dim_, RationalMatrix(dim_, dim_));
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "set_bracket index/length out of range");
  if (i == j && !vec_is_zero(value))
    throw Error(ErrorCode::DimensionMismatch, "[e_i, e_i] must vanish");
  for (std::size_t k = 0; k < dim_; ++k) {
    tensor_[i].at(j, k) = value[k];
    tensor_[j].at(i, k) = -value[k];
  }
}

RationalMatrix LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "ad vector length mismatch");
  RationalMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    m = m + ad(i).scaled(x[i]);
  }
  return m;
}

BilinearForm::BilinearForm(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw Error(ErrorCode::DimensionMismatch, "bilinear form matrix must be square");
}

Rational BilinearForm::eval(const Vec& x, const Vec& y) const {
  return vec_dot(x, matrix_ * y);
}

bool BilinearForm::is_symmetric() const {
  if (!symmetric_) symmetric_ = matrix_.is_symmetric();
  return *symmetric_;
}

Rational BilinearForm::det() const {
  if (!det_) det_ = matrix_.det();
  return *det_;
}

bool BilinearForm::is_nondegenerate() const {
  return det() != 0;
}

std::optional<LieViolation> validate(const LieAlgebra& g) {
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational residue = g.c(i, j, k) + g.c(j, i, k);
        if (residue != 0)
          return LieViolation{LieViolation::Kind::Antisymmetry, {i, j, k, 0}, residue};
      }
  // Antisymmetry holds, so Jacobi on triples i<j<k is enough.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational residue(0);
          for (std::size_t m = 0; m < n; ++m) {
            residue += g.c(i, j, m) * g.c(m, k, l);
            residue += g.c(j, k, m) * g.c(m, i, l);
            residue += g.c(k, i, m) * g.c(m, j, l);
          }
          if (residue != 0)
            return LieViolation{LieViolation::Kind::Jacobi, {i, j, k, l}, residue};
        }
  return std::nullopt;
}

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  std::size_t n = g.dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "bracket operand length mismatch");
  Vec r(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Rational coeff = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) r[k] += coeff * g.c(i, j, k);
    }
  }
  return r;
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<Vec> spans;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = g.c(i, j, k);
      if (!vec_is_zero(v)) spans.push_back(std::move(v));
    }
  return Subspace::from_span(n, spans);
}

Subspace center(const LieAlgebra& g) {
  std::size_t n = g.dim();
  if (n == 0) return Subspace(0);
  std::vector<RationalMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  return Subspace::from_span(n, RationalMatrix::vstack(ads).nullspace());
}

Vec vectorize(const RationalMatrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

RationalMatrix unvectorize(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "unvectorize length mismatch");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
  return m;
}

std::vector<RationalMatrix> centroid_basis(const LieAlgebra& g) {
  std::size_t n = g.dim();
  if (n == 0) return {};
  std::vector<RationalMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  // Unknowns x_{r,m} = T(r,m), row-major. Constraint T ad(e_i) = ad(T e_i):
  //   sum_m ad_i(m,c) x_{r,m} - sum_k ad_k(r,c) x_{k,i} = 0  for all (i,r,c).
  RationalMatrix system(n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t m = 0; m < n; ++m) system.at(row, r * n + m) += ads[i].at(m, c);
        for (std::size_t k = 0; k < n; ++k) system.at(row, k * n + i) -= ads[k].at(r, c);
      }
  std::vector<RationalMatrix> basis;
  for (const auto& v : system.nullspace()) basis.push_back(unvectorize(v, n, n));
  return basis;
}

std::vector<BilinearForm> invariant_symmetric_forms(const LieAlgebra& g) {
  std::size_t n = g.dim();
  if (n == 0) return {};
  std::vector<RationalMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  // G ad(e_i) + ad(e_i)^T G = 0 plus symmetry G = G^T.
  std::size_t inv_rows = n * n * n, sym_rows = n * (n - 1) / 2;
  RationalMatrix system(inv_rows + sym_rows, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t m = 0; m < n; ++m) {
          system.at(row, r * n + m) += ads[i].at(m, c);  // (G ad_i)(r,c)
          system.at(row, m * n + c) += ads[i].at(m, r);  // (ad_i^T G)(r,c)
        }
      }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c, ++row) {
      system.at(row, r * n + c) = 1;
      system.at(row, c * n + r) = -1;
    }
  std::vector<BilinearForm> basis;
  for (const auto& v : system.nullspace()) basis.emplace_back(unvectorize(v, n, n));
  return basis;
}

bool enumerate_integer_boxes(std::size_t dim, long kmax,
                             const std::function<bool(const std::vector<long>&)>& visit) {
  if (dim == 0) return false;
  std::vector<long> digits(dim), values(dim);
  auto digit_value = [](long idx) { return (idx % 2 == 1) ? (idx + 1) / 2 : -(idx / 2); };
  for (long k = 1; k <= kmax; ++k) {
    long radix = 2 * k + 1;
    std::fill(digits.begin(), digits.end(), 0);
    for (;;) {
      long sup = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        values[i] = digit_value(digits[i]);
        sup = std::max(sup, std::abs(values[i]));
      }
      if (sup == k && visit(values)) return true;
      // odometer, first coordinate slowest
      std::size_t pos = dim;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < radix) break;
        digits[pos] = 0;
        if (pos == 0) goto next_shell;
      }
    }
  next_shell:;
  }
  return false;
}

long nondegeneracy_search_bound(std::size_t ambient_dim) {
  // det of an n x n combination has degree <= n in the coefficients; a box
  // of side 2k+1 >= n+1 per axis then certifies a vanishing determinant.
  return static_cast<long>((ambient_dim + 1) / 2) + 1;
}

std::optional<BilinearForm> find_nondegenerate(const std::vector<BilinearForm>& forms,
                                               std::optional<long> kmax) {
  if (forms.empty()) return std::nullopt;
  std::size_t n = forms[0].dim();
  // A common kernel vector of the basis kills every combination: certified
  // "none" without touching the grid.
  std::vector<RationalMatrix> stacked;
  for (const auto& f : forms) stacked.push_back(f.matrix());
  if (!RationalMatrix::vstack(stacked).nullspace().empty()) return std::nullopt;
  long bound = kmax.value_or(nondegeneracy_search_bound(n));
  std::optional<BilinearForm> found;
  enumerate_integer_boxes(forms.size(), bound, [&](const std::vector<long>& coeffs) {
    RationalMatrix candidate(n, n);
    for (std::size_t t = 0; t < forms.size(); ++t) {
      if (coeffs[t] == 0) continue;
      candidate = candidate + forms[t].matrix().scaled(Rational(coeffs[t]));
    }
    if (candidate.det() != 0) {
      found = BilinearForm(std::move(candidate));
      return true;
    }
    return false;
  });
  return found;
}

bool is_nilpotent(const LieAlgebra& g) {
  std::size_t n = g.dim();
  Subspace term = Subspace::full(n);
  for (std::size_t step = 0; step <= n; ++step) {
    if (term.dim() == 0) return true;
    std::vector<Vec> next_span;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : term.basis()) next_span.push_back(bracket(g, unit_vec(n, i), v));
    Subspace next = Subspace::from_span(n, next_span);
    if (next.dim() == term.dim()) return next.dim() == 0;
    term = next;
  }
  return term.dim() == 0;
}

bool is_perfect(const LieAlgebra& g) {
  return derived_subalgebra(g).dim() == g.dim();
}

std::vector<RationalMatrix> symmetric_centroids(const LieAlgebra& g, const BilinearForm& B) {
  std::size_t n = g.dim();
  if (B.dim() != n) throw Error(ErrorCode::DimensionMismatch, "form/algebra dimension mismatch");
  if (!B.is_nondegenerate()) throw Error(ErrorCode::DegenerateForm, "form is degenerate");
  if (n == 0) return {};
  std::vector<RationalMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  // Centroid constraints plus self-adjointness T^T B = B T.
  RationalMatrix system(n * n * n + n * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t m = 0; m < n; ++m) system.at(row, r * n + m) += ads[i].at(m, c);
        for (std::size_t k = 0; k < n; ++k) system.at(row, k * n + i) -= ads[k].at(r, c);
      }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c, ++row) {
      for (std::size_t m = 0; m < n; ++m) {
        system.at(row, m * n + r) += B.at(m, c);  // (T^T B)(r,c)
        system.at(row, m * n + c) -= B.at(r, m);  // (B T)(r,c)
      }
    }
  std::vector<RationalMatrix> basis;
  for (const auto& v : system.nullspace()) basis.push_back(unvectorize(v, n, n));
  return basis;
}

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients, no trailing zeros

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return poly_trim(std::move(a));
}

// Division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  Poly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational factor = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num = poly_trim(std::move(num));
  }
  return {poly_trim(std::move(quot)), num};
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RationalMatrix poly_eval_matrix(const Poly& p, const RationalMatrix& m) {
  std::size_t n = m.rows();
  RationalMatrix acc(n, n);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * m;
    if (p[i] != 0) acc = acc + RationalMatrix::identity(n).scaled(p[i]);
  }
  return acc;
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
std::tuple<Poly, Poly, Poly> poly_ext_gcd(Poly a, Poly b) {
  Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    Poly v2 = poly_sub(v0, poly_mul(q, v1));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(u2);
    v1 = std::move(v2);
  }
  if (!a.empty() && a.back() != 1) {
    Rational lead = a.back();
    for (auto& x : a) x /= lead;
    for (auto& x : u0) x /= lead;
    for (auto& x : v0) x /= lead;
  }
  return {a, u0, v0};
}

Poly minimal_polynomial(const RationalMatrix& m) {
  std::size_t n = m.rows();
  std::vector<Vec> powers;
  RationalMatrix p = RationalMatrix::identity(n);
  for (std::size_t deg = 0; deg <= n; ++deg) {
    Vec v = vectorize(p);
    if (Subspace::from_span(n * n, powers).contains(v)) {
      // m^deg depends on lower powers; solve in the power basis itself.
      RationalMatrix basis_mat(n * n, powers.size());
      for (std::size_t c = 0; c < powers.size(); ++c) basis_mat.set_col(c, powers[c]);
      auto in_powers = basis_mat.solve(v);
      if (!in_powers) throw Error(ErrorCode::InternalInconsistency, "dependent power not solvable");
      Poly mu(deg + 1, Rational(0));
      mu[deg] = 1;
      for (std::size_t c = 0; c < in_powers->size(); ++c) mu[c] -= (*in_powers)[c];
      return mu;
    }
    powers.push_back(v);
    p = p * m;
  }
  throw Error(ErrorCode::InternalInconsistency, "minimal polynomial not found");
}

std::vector<mpz_class> divisors(mpz_class value) {
  if (value < 0) value = -value;
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      divs.push_back(d);
      if (d * d != value) divs.push_back(value / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Rational> rational_roots(const Poly& p) {
  // Rational root theorem on the primitive integer form of p.
  Poly q = poly_trim(p);
  std::vector<Rational> roots;
  if (q.size() <= 1) return roots;
  while (q.front() == 0) {  // factor X
    if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end())
      roots.push_back(Rational(0));
    q.erase(q.begin());
    if (q.size() <= 1) break;
  }
  if (q.size() <= 1) return roots;
  mpz_class denom_lcm(1);
  for (const auto& c : q) {
    mpz_class d = c.get_den();
    denom_lcm = denom_lcm * d / gcd(denom_lcm, d);
  }
  mpz_class lead = mpz_class(q.back().get_num() * denom_lcm / q.back().get_den());
  mpz_class constant = mpz_class(q.front().get_num() * denom_lcm / q.front().get_den());
  for (const auto& pn : divisors(constant)) {
    for (const auto& qd : divisors(lead)) {
      for (int sign : {1, -1}) {
        Rational cand(sign * pn, qd);
        cand.canonicalize();
        if (poly_eval(q, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return roots;
}

// Nontrivial idempotent in Q[m] via a rational eigenvalue's CRT projector.
std::optional<RationalMatrix> idempotent_from(const RationalMatrix& m) {
  Poly mu = minimal_polynomial(m);
  std::size_t n = m.rows();
  for (const auto& lambda : rational_roots(mu)) {
    Poly linear{-lambda, Rational(1)};
    Poly rest = mu;
    Poly power{Rational(1)};
    for (;;) {
      auto [quot, rem] = poly_divmod(rest, linear);
      if (!rem.empty()) break;
      rest = quot;
      power = poly_mul(power, linear);
    }
    if (rest.size() <= 1) continue;  // mu = (X-lambda)^e: only trivial idempotents
    auto [gcd_poly, u, v] = poly_ext_gcd(power, rest);
    if (gcd_poly.size() != 1)
      throw Error(ErrorCode::InternalInconsistency, "coprime factors with nontrivial gcd");
    // E = v(m) rest(m) is 1 on the (X-lambda)^e component, 0 on the rest.
    RationalMatrix e = poly_eval_matrix(poly_mul(v, rest), m);
    if (e * e != e) throw Error(ErrorCode::InternalInconsistency, "projector is not idempotent");
    if (!e.is_zero() && e != RationalMatrix::identity(n)) return e;
  }
  return std::nullopt;
}

}  // namespace

DecomposabilityVerdict is_indecomposable(const LieAlgebra& g, const BilinearForm& B) {
  std::vector<RationalMatrix> sym = symmetric_centroids(g, B);
  std::size_t n = g.dim();
  if (n == 0 || sym.empty())
    return {DecomposabilityVerdict::Kind::Indecomposable, std::nullopt, "trivial"};

  std::vector<Vec> span_vecs;
  for (const auto& t : sym) span_vecs.push_back(vectorize(t));
  Subspace span = Subspace::from_span(n * n, span_vecs);

  bool closed_commutative = true;
  for (std::size_t a = 0; a < sym.size() && closed_commutative; ++a)
    for (std::size_t b = a; b < sym.size() && closed_commutative; ++b) {
      RationalMatrix prod = sym[a] * sym[b];
      if (prod != sym[b] * sym[a] || !span.contains(vectorize(prod)))
        closed_commutative = false;
    }

  bool all_split = true;
  for (const auto& t : sym) {
    if (!try_scalar_plus_nilpotent_split(t)) {
      all_split = false;
      break;
    }
  }

  // Closed commutative algebra whose basis elements are all scalar+nilpotent
  // has no nontrivial idempotents at all.
  if (closed_commutative && all_split)
    return {DecomposabilityVerdict::Kind::Indecomposable, std::nullopt,
            "every B-symmetric centroid is scalar + nilpotent"};

  if (sym.size() <= 4) {
    std::vector<RationalMatrix> candidates = sym;
    for (std::size_t a = 0; a < sym.size(); ++a)
      for (std::size_t b = a + 1; b < sym.size(); ++b) candidates.push_back(sym[a] + sym[b]);
    for (const auto& cand : candidates) {
      if (auto e = idempotent_from(cand)) {
        return {DecomposabilityVerdict::Kind::Splits, *e,
                "nontrivial B-symmetric centroid idempotent found"};
      }
    }
  }
  return {DecomposabilityVerdict::Kind::Inconclusive, std::nullopt,
          "semisimple part of a symmetric centroid is not rational-scalar"};
}

LieAlgebra change_of_basis(const LieAlgebra& g, const RationalMatrix& new_basis,
                           std::vector<std::string> names) {
  std::size_t n = g.dim();
  if (new_basis.rows() != n || new_basis.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "change of basis matrix must be n x n");
  auto inv = new_basis.inverse();
  if (!inv) throw Error(ErrorCode::DegenerateForm, "change of basis matrix is singular");
  LieAlgebra result(n, std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec value = *inv * bracket(g, new_basis.col(i), new_basis.col(j));
      result.set_bracket(i, j, value);
    }
  return result;
}

MetricReport verify_invariant_metric(const LieAlgebra& g, const BilinearForm& form) {
  std::size_t n = g.dim();
  if (form.dim() != n) throw Error(ErrorCode::DimensionMismatch, "form/algebra dimension mismatch");
  MetricReport report;

  report.symmetric = true;
  for (std::size_t i = 0; i < n && report.symmetric; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (form.at(i, j) != form.at(j, i)) {
        report.symmetric = false;
        report.symmetry_witness = {i, j};
        break;
      }

  report.invariant = true;
  for (std::size_t i = 0; i < n && report.invariant; ++i)
    for (std::size_t j = 0; j < n && report.invariant; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // B([e_i,e_j], e_k) vs B(e_i, [e_j,e_k])
        Rational left(0), right(0);
        for (std::size_t m = 0; m < n; ++m) {
          left += g.c(i, j, m) * form.at(m, k);
          right += g.c(j, k, m) * form.at(i, m);
        }
        if (left != right) {
          report.invariant = false;
          report.invariance_witness = {i, j, k};
          break;
        }
      }

  auto kernel = form.matrix().nullspace();
  report.nondegenerate = kernel.empty();
  if (!kernel.empty()) report.degeneracy_witness = kernel.front();
  return report;
}

BilinearForm killing_form(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<RationalMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  RationalMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational value = (ads[i] * ads[j]).trace();
      k.at(i, j) = value;
      k.at(j, i) = value;
    }
  return BilinearForm(std::move(k));
}

}  // namespace quadraform
