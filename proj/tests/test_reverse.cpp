#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadraform/constructions.hpp"
#include "quadraform/errors.hpp"
#include "quadraform/reverse.hpp"
#include "test_support.hpp"

using namespace quadraform;
using qtest::q;
using qtest::qmat;
using qtest::qvec;

namespace {

BilinearForm antidiag_gamma(std::size_t m) {
  RationalMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) g.at(i, m - 1 - i) = 1;
  return BilinearForm(std::move(g));
}

}  // namespace

TEST_CASE("unit_dual_functional picks the unit coefficient") {
  AssocAlgebra S = truncated_polynomial_algebra(3);
  CHECK(unit_dual_functional(S) == qvec({1, 0, 0}));
  // an algebra whose unit is not a stored basis vector: basis (u, v) with
  // u = (1,1)-combination; concretely F x F with basis e0+e1, e1
  AssocAlgebra twisted(2, {}, qvec({1, 0}));
  // basis s0 = unit, s1 with s1*s1 = s1, s0*s1 = s1: F x F in a skew basis
  twisted.set_product(0, 0, qvec({1, 0}));
  twisted.set_product(0, 1, qvec({0, 1}));
  twisted.set_product(1, 1, qvec({0, 1}));
  CHECK(!validate(twisted).has_value());
  CHECK(unit_dual_functional(twisted) == qvec({1, 0}));
}

TEST_CASE("canonical F on product metrics") {
  SUBCASE("S = F: F is the identity") {
    AssocAlgebra field = truncated_polynomial_algebra(1);
    CurrentAlgebra cur = build_current(sl2(), field);
    BilinearForm k = killing_form(sl2());
    RationalMatrix f = canonical_F(cur, k, BilinearForm(k.matrix()));
    CHECK(f == RationalMatrix::identity(3));
  }
  SUBCASE("sl2 (x) F[X]/(X^3) with K (x) antidiagonal: F picks the X^2 slice") {
    AssocAlgebra S = truncated_polynomial_algebra(3);
    CurrentAlgebra cur = build_current(sl2(), S);
    BilinearForm k = killing_form(sl2());
    BilinearForm big = product_metric(k, antidiag_gamma(3));
    RationalMatrix f = canonical_F(cur, k, big);
    // F(y (x) X^j) = gamma(X^j, 1) y = delta_{j,2} y
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t b = 0; b < 3; ++b) {
        Vec image = f.col(j * 3 + b);
        if (b == 2)
          CHECK(image == unit_vec(3, j));
        else
          CHECK(vec_is_zero(image));
      }
    // defining identity: Bbar(x (x) s, y (x) 1) = B(F(x (x) s), y)
    RationalMatrix iota1 = iota_matrix(3, S.unit());
    for (std::size_t col = 0; col < 9; ++col)
      for (std::size_t y = 0; y < 3; ++y) {
        Vec u = unit_vec(9, col);
        CHECK(vec_dot(u, big.matrix() * (iota1 * unit_vec(3, y))) ==
              vec_dot(f * u, k.matrix() * unit_vec(3, y)));
      }
  }
  SUBCASE("general product form: F(y (x) t) = gamma(t, 1) y") {
    AssocAlgebra S = truncated_polynomial_algebra(2);
    BilinearForm gamma = qtest::qform({{1, 3}, {3, 0}});
    CurrentAlgebra cur = build_current(sl2(), S);
    BilinearForm k = killing_form(sl2());
    RationalMatrix f = canonical_F(cur, k, product_metric(k, gamma));
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t b = 0; b < 2; ++b)
        CHECK(f.col(j * 2 + b) == vec_scale(gamma.at(b, 0), unit_vec(3, j)));
  }
}

TEST_CASE("canonical H") {
  SUBCASE("S = F: H is the identity") {
    AssocAlgebra field = truncated_polynomial_algebra(1);
    CurrentAlgebra cur = build_current(sl2(), field);
    BilinearForm k = killing_form(sl2());
    CHECK(canonical_H(cur, k, BilinearForm(k.matrix())) == RationalMatrix::identity(3));
  }
  SUBCASE("sl2 (x) F[X]/(X^3): H(x) = x (x) X^2") {
    AssocAlgebra S = truncated_polynomial_algebra(3);
    CurrentAlgebra cur = build_current(sl2(), S);
    BilinearForm k = killing_form(sl2());
    BilinearForm big = product_metric(k, antidiag_gamma(3));
    RationalMatrix h = canonical_H(cur, k, big);
    for (std::size_t x = 0; x < 3; ++x) {
      Vec expected(9, Rational(0));
      expected[x * 3 + 2] = 1;
      CHECK(h.col(x) == expected);
    }
    RationalMatrix f = canonical_F(cur, k, big);
    CHECK(f * h == RationalMatrix::identity(3));
  }
  SUBCASE("defining identity Bbar(H(x), y (x) s) = p1(s) B(x, y)") {
    AssocAlgebra S = truncated_polynomial_algebra(2);
    BilinearForm gamma = qtest::qform({{1, 3}, {3, 0}});
    CurrentAlgebra cur = build_current(sl2(), S);
    BilinearForm k = killing_form(sl2());
    BilinearForm big = product_metric(k, gamma);
    RationalMatrix h = canonical_H(cur, k, big);
    Vec p1 = unit_dual_functional(S);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y)
        for (std::size_t b = 0; b < 2; ++b) {
          Vec target(6, Rational(0));
          target[y * 2 + b] = 1;
          CHECK(vec_dot(h.col(x), big.matrix() * target) == p1[b] * k.at(x, y));
        }
  }
}

TEST_CASE("check_diagram on sl2 (x) F[X]/(X^3)") {
  AssocAlgebra S = truncated_polynomial_algebra(3);
  CurrentAlgebra cur = build_current(sl2(), S);
  BilinearForm k = killing_form(sl2());
  BilinearForm big = product_metric(k, antidiag_gamma(3));
  RationalMatrix f = canonical_F(cur, k, big);
  RationalMatrix h = canonical_H(cur, k, big);

  SUBCASE("s = 1 commutes, both subspaces equal sl2 (x) span{1, X}") {
    DiagramVerdict verdict = check_diagram(cur, big, S.unit(), f, h);
    CHECK(verdict.commutes);
    CHECK(verdict.entrywise_equal);
    CHECK(verdict.subspaces_equal);
    // sl2 (x) span{1, X}: composite indices j*3 + {0,1}
    std::vector<Vec> expected;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t b = 0; b < 2; ++b) expected.push_back(unit_vec(9, j * 3 + b));
    CHECK(verdict.ker_f == Subspace::from_span(9, expected));
    CHECK(verdict.im_iota_perp == verdict.ker_f);
  }
  SUBCASE("s = X^2 with the same F fails, with the predicted perp") {
    Vec x2 = qvec({0, 0, 1});
    DiagramVerdict verdict = check_diagram(cur, big, x2, f, h);
    CHECK(!verdict.commutes);
    CHECK(!verdict.entrywise_equal);
    CHECK(!verdict.subspaces_equal);
    std::vector<Vec> expected;  // sl2 (x) span{X, X^2}
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t b = 1; b < 3; ++b) expected.push_back(unit_vec(9, j * 3 + b));
    CHECK(verdict.im_iota_perp == Subspace::from_span(9, expected));
    CHECK(verdict.im_iota_perp != verdict.ker_f);
    CHECK(!verdict.witness.empty());
  }
  SUBCASE("S = F with F = H = Id commutes") {
    AssocAlgebra field = truncated_polynomial_algebra(1);
    CurrentAlgebra trivial = build_current(sl2(), field);
    DiagramVerdict verdict =
        check_diagram(trivial, BilinearForm(k.matrix()), field.unit(),
                      RationalMatrix::identity(3), RationalMatrix::identity(3));
    CHECK(verdict.commutes);
  }
  SUBCASE("precondition violations throw") {
    CHECK_THROWS_AS(check_diagram(cur, big, qvec({0, 0, 0}), f, h), Error);  // s = 0
    RationalMatrix not_right_inverse(9, 3);
    CHECK_THROWS_AS(check_diagram(cur, big, S.unit(), f, not_right_inverse), Error);
  }
}

TEST_CASE("recover_metric") {
  SUBCASE("sl2 (x) F[X]/(X^3): the Killing form comes back exactly") {
    AssocAlgebra S = truncated_polynomial_algebra(3);
    CurrentAlgebra cur = build_current(sl2(), S);
    BilinearForm k = killing_form(sl2());
    BilinearForm big = product_metric(k, antidiag_gamma(3));
    RationalMatrix f = canonical_F(cur, k, big);
    RationalMatrix h = canonical_H(cur, k, big);
    RecoverOutcome outcome = recover_metric(cur, big, S.unit(), f, h);
    REQUIRE(outcome.failed == RecoverOutcome::Failed::None);
    CHECK(outcome.metric->matrix() == k.matrix());
  }
  SUBCASE("S = F: identity round trip") {
    AssocAlgebra field = truncated_polynomial_algebra(1);
    CurrentAlgebra cur = build_current(sl2(), field);
    BilinearForm k = killing_form(sl2());
    RecoverOutcome outcome = recover_metric(cur, BilinearForm(k.matrix()), field.unit(),
                                            RationalMatrix::identity(3),
                                            RationalMatrix::identity(3));
    REQUIRE(outcome.failed == RecoverOutcome::Failed::None);
    CHECK(outcome.metric->matrix() == k.matrix());
  }
  SUBCASE("product round trip holds for the extended Heisenberg too") {
    ExtendedHeisenberg ext = heisenberg_extended(1);
    AssocAlgebra S = truncated_polynomial_algebra(2);
    CurrentAlgebra cur = build_current(ext.algebra, S);
    BilinearForm big = product_metric(ext.metric, antidiag_gamma(2));
    RationalMatrix f = canonical_F(cur, ext.metric, big);
    RationalMatrix h = canonical_H(cur, ext.metric, big);
    RecoverOutcome outcome = recover_metric(cur, big, S.unit(), f, h);
    REQUIRE(outcome.failed == RecoverOutcome::Failed::None);
    CHECK(outcome.metric->matrix() == ext.metric.matrix());
  }
  SUBCASE("full pipeline on the extended-Heisenberg current metric with xi != 0") {
    ExtendedHeisenberg ext = heisenberg_extended(1);
    AssocAlgebra S = truncated_polynomial_algebra(2);
    CurrentAlgebra cur = build_current(ext.algebra, S);
    BilinearForm gamma = antidiag_gamma(2);
    BilinearForm xi = qtest::qform({{1, 0}, {0, 1}});
    AlphaMap alpha = heisenberg_current_alpha(1, S, gamma, xi);
    BilinearForm big = metric_from_alpha(ext.algebra, ext.metric, S, alpha);
    REQUIRE(verify_invariant_metric(cur.as_lie, big).all_ok());
    RationalMatrix f = canonical_F(cur, ext.metric, big);
    RationalMatrix h = canonical_H(cur, ext.metric, big);
    RecoverOutcome outcome = recover_metric(cur, big, S.unit(), f, h);
    REQUIRE(outcome.failed == RecoverOutcome::Failed::None);
    CHECK(verify_invariant_metric(ext.algebra, *outcome.metric).all_ok());
  }
  SUBCASE("diagram failure is reported as condition (i)") {
    AssocAlgebra S = truncated_polynomial_algebra(3);
    CurrentAlgebra cur = build_current(sl2(), S);
    BilinearForm k = killing_form(sl2());
    BilinearForm big = product_metric(k, antidiag_gamma(3));
    RationalMatrix f = canonical_F(cur, k, big);
    RationalMatrix h = canonical_H(cur, k, big);
    RecoverOutcome outcome = recover_metric(cur, big, qvec({0, 0, 1}), f, h);
    CHECK(outcome.failed == RecoverOutcome::Failed::DiagramI);
    CHECK(!outcome.witness.empty());
  }
  SUBCASE("asymmetric psi is reported as condition (ii)") {
    // S = F, F = (I + E02)^{-1}, H = I + E02: diagram commutes, psi = H^T K
    AssocAlgebra field = truncated_polynomial_algebra(1);
    CurrentAlgebra cur = build_current(sl2(), field);
    BilinearForm k = killing_form(sl2());
    RationalMatrix h = RationalMatrix::identity(3);
    h.at(0, 2) = 1;
    RationalMatrix f = *h.inverse();
    RecoverOutcome outcome = recover_metric(cur, BilinearForm(k.matrix()), field.unit(), f, h);
    CHECK(outcome.failed == RecoverOutcome::Failed::SymmetryII);
  }
  SUBCASE("non-equivariant F is reported as condition (iii)") {
    // S = F, F = K as an operator: psi = K^{-1} K = I stays symmetric, the
    // diagram commutes, but K is not a centroid of sl2
    AssocAlgebra field = truncated_polynomial_algebra(1);
    CurrentAlgebra cur = build_current(sl2(), field);
    BilinearForm k = killing_form(sl2());
    RationalMatrix f = k.matrix();
    RationalMatrix h = *f.inverse();
    RecoverOutcome outcome = recover_metric(cur, BilinearForm(k.matrix()), field.unit(), f, h);
    CHECK(outcome.failed == RecoverOutcome::Failed::EquivarianceIII);
  }
}

TEST_CASE("metric_from_nilpotent") {
  SUBCASE("sl2 (x) F[X]/(X^3) with s = X recovers the Killing form") {
    AssocAlgebra S = truncated_polynomial_algebra(3);
    CurrentAlgebra cur = build_current(sl2(), S);
    BilinearForm k = killing_form(sl2());
    BilinearForm big = product_metric(k, antidiag_gamma(3));
    BilinearForm recovered = metric_from_nilpotent(cur, big, qvec({0, 1, 0}));
    CHECK(recovered.matrix() == k.matrix());
  }
  SUBCASE("wrong nil index and the m = 1 edge") {
    AssocAlgebra field = truncated_polynomial_algebra(1);
    CurrentAlgebra cur = build_current(sl2(), field);
    BilinearForm k(killing_form(sl2()).matrix());
    CHECK_THROWS_AS(metric_from_nilpotent(cur, k, qvec({0})), Error);  // s = 0
    CHECK_THROWS_AS(metric_from_nilpotent(cur, k, qvec({1})), Error);  // s = 1 not nilpotent

    AssocAlgebra S = truncated_polynomial_algebra(3);
    CurrentAlgebra big_cur = build_current(sl2(), S);
    BilinearForm big = product_metric(killing_form(sl2()), antidiag_gamma(3));
    CHECK_THROWS_AS(metric_from_nilpotent(big_cur, big, qvec({0, 0, 1})), Error);  // index 2 != 3
  }
  SUBCASE("non-perfect g is rejected") {
    ExtendedHeisenberg ext = heisenberg_extended(1);
    AssocAlgebra S = truncated_polynomial_algebra(2);
    CurrentAlgebra cur = build_current(ext.algebra, S);
    BilinearForm big = product_metric(ext.metric, antidiag_gamma(2));
    CHECK_THROWS_AS(metric_from_nilpotent(cur, big, qvec({0, 1})), Error);
  }
  SUBCASE("the B_t chain identity holds for every t, nondegenerate or not") {
    AssocAlgebra S = truncated_polynomial_algebra(3);
    CurrentAlgebra cur = build_current(sl2(), S);
    BilinearForm k = killing_form(sl2());
    BilinearForm big = product_metric(k, antidiag_gamma(3));
    for (std::size_t a = 0; a < 3; ++a) {
      RationalMatrix gram = iota_matrix(3, unit_vec(3, a)).transposed() * big.matrix() *
                            iota_matrix(3, S.unit());
      BilinearForm form_t(gram);
      MetricReport report = verify_invariant_metric(sl2(), form_t);
      CHECK(report.symmetric);
      CHECK(report.invariant);
    }
  }
}

TEST_CASE("equivariant_f_space contains the canonical F") {
  AssocAlgebra S = truncated_polynomial_algebra(2);
  CurrentAlgebra cur = build_current(sl2(), S);
  BilinearForm k = killing_form(sl2());
  BilinearForm big = product_metric(k, antidiag_gamma(2));
  RationalMatrix f = canonical_F(cur, k, big);
  auto space = equivariant_f_space(cur);
  CHECK(!space.empty());
  std::vector<Vec> span;
  for (const auto& m : space) span.push_back(vectorize(m));
  CHECK(Subspace::from_span(3 * 6, span).contains(vectorize(f)));
}
