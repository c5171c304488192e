#ifndef QUADRAFORM_ASSOC_HPP
#define QUADRAFORM_ASSOC_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadraform/lie.hpp"
#include "quadraform/matrix.hpp"

namespace quadraform {

/// Commutative associative unital algebra by structure constants
/// mu[a][b][c] = coefficient of s_c in s_a * s_b, with an explicit unit.
class AssocAlgebra {
public:
  AssocAlgebra() = default;
  AssocAlgebra(std::size_t dim, std::vector<std::string> basis_names, Vec unit);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const Vec& unit() const { return unit_; }

  const Rational& mu(std::size_t a, std::size_t b, std::size_t c) const {
    return tensor_[a].at(b, c);
  }

  /// Sets s_a * s_b = value and s_b * s_a = value.
  void set_product(std::size_t a, std::size_t b, const Vec& value);

  bool operator==(const AssocAlgebra& other) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<std::string> basis_names_;
  std::vector<RationalMatrix> tensor_;
  Vec unit_;
};

struct AssocViolation {
  enum class Kind { Commutativity, Associativity, Unit } kind;
  std::array<std::size_t, 4> index;
  Rational residue;
};

std::optional<AssocViolation> validate(const AssocAlgebra& S);

Vec product(const AssocAlgebra& S, const Vec& s, const Vec& t);

/// Basis of { gamma : gamma(s t, u) = gamma(s, t u) on all basis triples }.
/// Symmetry follows from invariance + commutativity + unit and is asserted.
std::vector<BilinearForm> frobenius_forms(const AssocAlgebra& S);

/// gamma(st, u) == gamma(s, tu) on all basis triples.
bool is_invariant_form(const AssocAlgebra& S, const BilinearForm& gamma);

/// F[X]/(X^m) on basis {1, X, ..., X^{m-1}}.
AssocAlgebra truncated_polynomial_algebra(std::size_t m);

/// Smallest k >= 1 with s^k = 0, or nullopt when s is not nilpotent.
std::optional<std::size_t> nil_index(const AssocAlgebra& S, const Vec& s);

/// k-th power of an element (k >= 1).
Vec element_power(const AssocAlgebra& S, const Vec& s, std::size_t k);

}  // namespace quadraform

#endif
