#include "quadraform/assoc.hpp"

#include "quadraform/errors.hpp"

namespace quadraform {

AssocAlgebra::AssocAlgebra(std::size_t dim, std::vector<std::string> basis_names, Vec unit)
    : dim_(dim), basis_names_(std::move(basis_names)), unit_(std::move(unit)) {
  if (basis_names_.empty()) {
    for (std::size_t a = 0; a < dim_; ++a) basis_names_.push_back("s" + std::to_string(a));
  }
  if (basis_names_.size() != dim_ || unit_.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "assoc algebra name/unit length mismatch");
  tensor_.assign(dim_, RationalMatrix(dim_, dim_));
}

void AssocAlgebra::set_product(std::size_t a, std::size_t b, const Vec& value) {
  if (a >= dim_ || b >= dim_ || value.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "set_product index/length out of range");
  for (std::size_t c = 0; c < dim_; ++c) {
    tensor_[a].at(b, c) = value[c];
    tensor_[b].at(a, c) = value[c];
  }
}

std::optional<AssocViolation> validate(const AssocAlgebra& S) {
  std::size_t m = S.dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Rational residue = S.mu(a, b, c) - S.mu(b, a, c);
        if (residue != 0)
          return AssocViolation{AssocViolation::Kind::Commutativity, {a, b, c, 0}, residue};
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t e = 0; e < m; ++e) {
          Rational residue(0);
          for (std::size_t d = 0; d < m; ++d) {
            residue += S.mu(a, b, d) * S.mu(d, c, e);
            residue -= S.mu(b, c, d) * S.mu(a, d, e);
          }
          if (residue != 0)
            return AssocViolation{AssocViolation::Kind::Associativity, {a, b, c, e}, residue};
        }
  for (std::size_t a = 0; a < m; ++a) {
    Vec prod = product(S, S.unit(), unit_vec(m, a));
    for (std::size_t c = 0; c < m; ++c) {
      Rational residue = prod[c] - (a == c ? Rational(1) : Rational(0));
      if (residue != 0) return AssocViolation{AssocViolation::Kind::Unit, {a, c, 0, 0}, residue};
    }
  }
  return std::nullopt;
}

Vec product(const AssocAlgebra& S, const Vec& s, const Vec& t) {
  std::size_t m = S.dim();
  if (s.size() != m || t.size() != m)
    throw Error(ErrorCode::DimensionMismatch, "product operand length mismatch");
  Vec r(m, Rational(0));
  for (std::size_t a = 0; a < m; ++a) {
    if (s[a] == 0) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (t[b] == 0) continue;
      Rational coeff = s[a] * t[b];
      for (std::size_t c = 0; c < m; ++c) r[c] += coeff * S.mu(a, b, c);
    }
  }
  return r;
}

std::vector<BilinearForm> frobenius_forms(const AssocAlgebra& S) {
  std::size_t m = S.dim();
  if (m == 0) return {};
  // Unknowns x_{d,c} = gamma(s_d, s_c); constraint per (a,b,c):
  //   sum_d mu[a][b][d] x_{d,c} - sum_d mu[b][c][d] x_{a,d} = 0.
  RationalMatrix system(m * m * m, m * m);
  std::size_t row = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c, ++row) {
        for (std::size_t d = 0; d < m; ++d) {
          system.at(row, d * m + c) += S.mu(a, b, d);
          system.at(row, a * m + d) -= S.mu(b, c, d);
        }
      }
  std::vector<BilinearForm> basis;
  for (const auto& v : system.nullspace()) {
    BilinearForm gamma(unvectorize(v, m, m));
    if (!gamma.is_symmetric())
      throw Error(ErrorCode::InternalInconsistency,
                  "invariant form on a commutative unital algebra must be symmetric");
    basis.push_back(std::move(gamma));
  }
  return basis;
}

bool is_invariant_form(const AssocAlgebra& S, const BilinearForm& gamma) {
  std::size_t m = S.dim();
  if (gamma.dim() != m) throw Error(ErrorCode::DimensionMismatch, "form/algebra dimension mismatch");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Rational left(0), right(0);
        for (std::size_t d = 0; d < m; ++d) {
          left += S.mu(a, b, d) * gamma.at(d, c);
          right += S.mu(b, c, d) * gamma.at(a, d);
        }
        if (left != right) return false;
      }
  return true;
}

AssocAlgebra truncated_polynomial_algebra(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::DimensionMismatch, "truncated polynomial algebra needs m >= 1");
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    if (a == 0)
      names.push_back("1");
    else if (a == 1)
      names.push_back("X");
    else
      names.push_back("X^" + std::to_string(a));
  }
  AssocAlgebra S(m, names, unit_vec(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      Vec value(m, Rational(0));
      if (a + b < m) value[a + b] = 1;
      S.set_product(a, b, value);
    }
  return S;
}

Vec element_power(const AssocAlgebra& S, const Vec& s, std::size_t k) {
  if (k == 0) return S.unit();
  Vec acc = s;
  for (std::size_t i = 1; i < k; ++i) acc = product(S, acc, s);
  return acc;
}

std::optional<std::size_t> nil_index(const AssocAlgebra& S, const Vec& s) {
  Vec acc = s;
  for (std::size_t k = 1; k <= S.dim() + 1; ++k) {
    if (vec_is_zero(acc)) return k;
    acc = product(S, acc, s);
  }
  return std::nullopt;
}

}  // namespace quadraform
