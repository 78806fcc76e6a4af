#include <doctest.h>

#include "gwa/error.hpp"
#include "gwa/oracle.hpp"
#include "support/oracles.hpp"

using namespace gwa;

namespace {

const Field Q = Field::rationals();

Poly lin(long c) { return Poly::from_ints(Q, {c, 1}); }
Poly P(std::initializer_list<long> c) { return Poly::from_ints(Q, c); }

FactoredElement fe(std::vector<std::pair<Poly, int>> fs, long unit = 1) {
  return FactoredElement::from_polys(Scalar(Q, unit), fs);
}

PolyMatrix random_matrix(Sampler& s, std::size_t n, int deg) {
  PolyMatrix m(Q, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s.poly(deg, 3);
  return m;
}

}  // namespace

TEST_CASE("determinant and adjugate") {
  Sampler s(Q, 21);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int i = 0; i < 8; ++i) {
      const PolyMatrix m = random_matrix(s, n, 2);
      CHECK(m.det() == testing::laplace_det(m));
      CHECK(m * m.adjugate() == PolyMatrix::identity(Q, n) * m.det());
    }
  CHECK_THROWS_AS(PolyMatrix::from_rows(Q, {{P({1})}, {P({1}), P({2})}}), MathError);
}

TEST_CASE("Smith normal form agrees with the minor-gcd oracle") {
  Sampler s(Q, 8);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int i = 0; i < 6; ++i) {
      const PolyMatrix m = random_matrix(s, n, n <= 2 ? 2 : 1);
      const SmithForm snf = smith_normal_form(m);
      CHECK(snf.s * snf.d * snf.t == m);
      CHECK(snf.d.is_diagonal());
      CHECK(snf.invariants == testing::minor_gcd_invariants(m));
      CHECK(snf.s.det().degree() == 0);
      CHECK(snf.t.det().degree() == 0);
    }
  const PolyMatrix m = PolyMatrix::from_rows(Q, {{P({1}), P({0, 1})}, {P({0, 1}), P({1})}});
  CHECK(smith_normal_form(m).invariants == std::vector<Poly>{P({1}), P({-1, 0, 1})});
  const PolyMatrix singular = PolyMatrix::from_rows(Q, {{lin(1), lin(1)}, {lin(1), lin(1)}});
  CHECK(smith_normal_form(singular).invariants == testing::minor_gcd_invariants(singular));
}

TEST_CASE("matrix modules") {
  const GwaSpec s = sl2_spec(Scalar(Q, 3));
  const MatrixModule diag(s, PolyMatrix::diagonal({lin(3), lin(-1)}));
  CHECK(diag.rank() == 2);
  CHECK(relation_suite(diag, 4).passed);
  CHECK_THROWS_AS(MatrixModule(s, PolyMatrix::diagonal({lin(3), Poly(Q)})), MathError);
  CHECK_THROWS_AS(MatrixModule(s, PolyMatrix::diagonal({lin(5), P({1})})), MathError);
  const PolyVector v{P({1, 1}), P({0, 2})};
  CHECK(diag.act_x(diag.act_y(v)) == diag.act_ring(s.a_poly(), v));
  CHECK(diag.act_word("yx", v) == diag.act_y(diag.act_x(v)));
  const PolyMatrix sw = PolyMatrix::from_rows(Q, {{P({0}), P({1})}, {P({1}), P({0})}});
  const MatrixModule swapped(s, PolyMatrix::diagonal({lin(-1), lin(3)}));
  CHECK(verify_iso_conjugate(diag, swapped, sw));
  CHECK_THROWS_AS(verify_iso_conjugate(diag, swapped, PolyMatrix::diagonal({lin(0), P({1})})), MathError);
}

TEST_CASE("companion matrix") {
  const PolyMatrix c = companion(lin(1), 3);
  CHECK(c(1, 0) == P({1}));
  CHECK(c(2, 1) == P({1}));
  CHECK(c(0, 2) == lin(1));
  CHECK(c.det() == lin(1));
}

TEST_CASE("simple modules of higher rank") {
  const Scalar half(Q, mpq_class(1, 2));
  const GwaSpec s = sl2_spec(half);
  const auto a0 = FactoredElement::single(Poly::linear(half));
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto vn = construct_simple_vn(s, a0, n);
    CHECK(vn.certified);
    for (const auto& c : vn.checks) CHECK_MESSAGE(c.passed, c.name);
    CHECK(vn.module.invariant_factors() == testing::minor_gcd_invariants(vn.module.P()));
    CHECK(relation_suite(vn.module, 40 + n, 4, 3).passed);
  }
  const GwaSpec quantum(Q, Sigma::quantum(Scalar(Q, 2)), fe({{lin(1), 1}}));
  CHECK_THROWS_AS(construct_simple_vn(quantum, FactoredElement::single(lin(1)), 2), MathError);
  CHECK_THROWS_AS(construct_simple_vn(s, FactoredElement::single(lin(9)), 2), MathError);
}

TEST_CASE("sl2 family") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto fam = construct_sl2_family(Scalar(Q, mpq_class(1, 2)), n);
    CHECK(fam.chi == Scalar(Q, mpq_class(-3, 16)));
    for (const auto& c : fam.checks) CHECK_MESSAGE(c.passed, c.name);
  }
  const auto fam = construct_sl2_family(Scalar(Q, 3), 2);
  CHECK(fam.chi == Scalar(Q, mpq_class(3, 4)));
}

TEST_CASE("set equation") {
  CHECK(solve_set_equation(0, 0, 0).has_value());
  CHECK_FALSE(solve_set_equation(0, 1, 0).has_value());
  CHECK_FALSE(solve_set_equation(0, 3, 2).has_value());
  const auto up = solve_set_equation(0, 4, 2);
  REQUIRE(up);
  CHECK(up->t == std::vector<long>{2, 4});
  CHECK(up->s.empty());
  CHECK(check_set_equation(0, 4, 2, *up));
  const auto down = solve_set_equation(4, 0, 2);
  REQUIRE(down);
  CHECK(check_set_equation(4, 0, 2, *down));
  CHECK(brute_set_equation(1, 3, 2, 2, 5));
  CHECK_FALSE(brute_set_equation(1, 2, 2, 3, 5));
}
