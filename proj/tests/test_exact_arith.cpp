#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quadraform/errors.hpp"
#include "quadraform/exact_arith.hpp"
#include "test_support.hpp"

using namespace quadraform;
using qtest::q;
using qtest::qmat;
using qtest::qvec;

namespace {

// Metric of the extended Heisenberg h_1(D) in basis order (D, p, q, hbar):
// B(p,q) = B(q,p) = 1, B(D,hbar) = B(hbar,D) = 1, everything else 0.
RationalMatrix h1d_metric() {
  return qmat({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
}

}  // namespace

TEST_CASE("adjoint: identity and the form itself") {
  RationalMatrix b = qmat({{2, 1}, {1, 1}});
  CHECK(adjoint_wrt_form(RationalMatrix::identity(2), b) == RationalMatrix::identity(2));
  // B symmetric viewed as operator: B* = B^{-1} B^T B = B
  CHECK(adjoint_wrt_form(b, b) == b);
}

TEST_CASE("adjoint: N on h_1(D) is self-adjoint for the canonical metric") {
  RationalMatrix nil(4, 4);
  nil.at(3, 0) = 1;  // N(D) = hbar
  RationalMatrix b = h1d_metric();
  RationalMatrix adj = adjoint_wrt_form(nil, b);
  CHECK(adj == nil);
  // the defining identity on all 16 basis pairs
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      Vec ex = unit_vec(4, x), ey = unit_vec(4, y);
      CHECK(vec_dot(nil * ex, b * ey) == vec_dot(ex, b * (adj * ey)));
    }
}

TEST_CASE("adjoint is an involution for symmetric forms") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 12; ++trial) {
    RationalMatrix b(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
          b.at(i, j) = q(entry(rng));
          b.at(j, i) = b.at(i, j);
        }
    } while (b.det() == 0);
    RationalMatrix t(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) t.at(i, j) = q(entry(rng));
    CHECK(adjoint_wrt_form(adjoint_wrt_form(t, b), b) == t);
  }
}

TEST_CASE("adjoint rejects degenerate forms") {
  CHECK_THROWS_AS(adjoint_wrt_form(RationalMatrix::identity(2), qmat({{1, 0}, {0, 0}})), Error);
}

TEST_CASE("scalar_plus_nilpotent_split") {
  SUBCASE("multiple of the identity") {
    auto split = scalar_plus_nilpotent_split(RationalMatrix::identity(3).scaled(q(5)));
    CHECK(split.scalar == q(5));
    CHECK(split.nilpotent.is_zero());
  }
  SUBCASE("identity plus strictly upper triangular") {
    RationalMatrix t = RationalMatrix::identity(3);
    t.at(0, 1) = q(2);
    t.at(1, 2) = q(-7);
    t.at(0, 2) = q(3);
    auto split = scalar_plus_nilpotent_split(t);
    CHECK(split.scalar == q(1));
    CHECK(split.nilpotent == t - RationalMatrix::identity(3));
    CHECK(split.nilpotent.pow(3).is_zero());
    // round trip
    CHECK(RationalMatrix::identity(3).scaled(split.scalar) + split.nilpotent == t);
  }
  SUBCASE("diag(1,2) is not scalar plus nilpotent") {
    CHECK_THROWS_AS(scalar_plus_nilpotent_split(qmat({{1, 0}, {0, 2}})), Error);
    CHECK(!try_scalar_plus_nilpotent_split(qmat({{1, 0}, {0, 2}})).has_value());
  }
}

TEST_CASE("common kernel of nilpotent maps") {
  RationalMatrix j3(3, 3);
  j3.at(0, 1) = 1;
  j3.at(1, 2) = 1;

  SUBCASE("zero map on a 2-dim space returns the first basis vector") {
    Subspace space = Subspace::full(2);
    auto v = common_kernel_of_nilpotents({RationalMatrix(2, 2)}, space);
    REQUIRE(v.has_value());
    CHECK(*v == qvec({1, 0}));
  }
  SUBCASE("single Jordan block: kernel is e1") {
    auto v = common_kernel_of_nilpotents({j3}, Subspace::full(3));
    REQUIRE(v.has_value());
    CHECK(*v == qvec({1, 0, 0}));
  }
  SUBCASE("J3 and its square: stacked-nullspace oracle agrees") {
    auto v = common_kernel_of_nilpotents({j3, j3 * j3}, Subspace::full(3));
    REQUIRE(v.has_value());
    CHECK(*v == qvec({1, 0, 0}));
    // independent oracle: intersect nullspaces by stacking
    auto stacked = RationalMatrix::vstack({j3, j3 * j3}).nullspace();
    REQUIRE(stacked.size() == 1);
    CHECK(stacked[0] == *v);
    CHECK(vec_is_zero(j3 * *v));
    CHECK(vec_is_zero((j3 * j3) * *v));
  }
  SUBCASE("zero subspace yields none") {
    CHECK(!common_kernel_of_nilpotents({j3}, Subspace(3)).has_value());
  }
  SUBCASE("non-nilpotent map is rejected") {
    CHECK_THROWS_AS(common_kernel_of_nilpotents({RationalMatrix::identity(2)}, Subspace::full(2)),
                    Error);
  }
  SUBCASE("non-commuting maps are rejected") {
    RationalMatrix a(2, 2), b(2, 2);
    a.at(0, 1) = 1;  // upper
    b.at(1, 0) = 1;  // lower
    CHECK_THROWS_AS(common_kernel_of_nilpotents({a, b}, Subspace::full(2)), Error);
  }
  SUBCASE("map not preserving the subspace is rejected") {
    // span{e1}: J3^T maps e1 to e2, leaving the subspace
    Subspace line = Subspace::from_span(3, {qvec({1, 0, 0})});
    CHECK_THROWS_AS(common_kernel_of_nilpotents({j3.transposed()}, line), Error);
  }
}

TEST_CASE("common kernel annihilates under every map, exactly") {
  // commuting nilpotents: polynomials in J4 without constant term
  RationalMatrix j4(4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) j4.at(i, i + 1) = 1;
  std::vector<RationalMatrix> maps{j4, j4 * j4 + j4.scaled(q(3)), j4.scaled(q(-2))};
  auto v = common_kernel_of_nilpotents(maps, Subspace::full(4));
  REQUIRE(v.has_value());
  CHECK(!vec_is_zero(*v));
  for (const auto& m : maps) CHECK(vec_is_zero(m * *v));
}
