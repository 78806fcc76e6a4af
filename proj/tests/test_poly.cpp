#include <doctest.h>

#include "gwa/error.hpp"
#include "gwa/irreducible.hpp"
#include "support/oracles.hpp"

using namespace gwa;
using gwa::testing::RatPoly;

namespace {

const Field Q = Field::rationals();

Poly P(std::initializer_list<long> c, Field f = Q) { return Poly::from_ints(f, c); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const MathError& e) {
    return e.kind();
  }
  FAIL("no MathError thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("scalar parsing and canonical form") {
  CHECK(Scalar::parse(Q, "6/-4").to_string() == "-3/2");
  CHECK(Scalar::parse(Q, "-3/4").to_string() == "-3/4");
  CHECK(Scalar::parse(Q, "+5").to_string() == "5");
  const Field f7 = Field::prime(7);
  CHECK(Scalar::parse(f7, "-1").to_string() == "6");
  CHECK(Scalar::parse(f7, "1/2").to_string() == "4");
  CHECK(kind_of([] { Scalar::parse(Q, "1/0"); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { Scalar::parse(Q, "abc"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Field::prime(9); }) == ErrorKind::InvalidField);
  CHECK(kind_of([] { Field::prime(1); }) == ErrorKind::InvalidField);
}

TEST_CASE("scalar field arithmetic") {
  const Field f5 = Field::prime(5);
  for (long v = 1; v < 5; ++v) CHECK((Scalar(f5, v) * Scalar(f5, v).inverse()).is_one());
  CHECK(Scalar(f5, 2).pow(4).is_one());
  CHECK(Scalar(f5, 2).pow(-1) == Scalar(f5, 3));
  CHECK(kind_of([&] { (void)Scalar(f5, 0).inverse(); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { (void)(Scalar(f5, 1) + Scalar(Q, 1)); }) == ErrorKind::FieldMismatch);
  CHECK((Scalar(Q, mpq_class(1, 3)) + Scalar(Q, mpq_class(1, 6))).to_string() == "1/2");
}

TEST_CASE("polynomial normal form and printing") {
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(P({0}).degree() == -1);
  CHECK(P({-1, 0, 1}).to_string() == "h^2 - 1");
  CHECK(Poly::parse(Q, {"-3/4", "0", "1"}) == P({-3, 0, 4}) * Scalar(Q, mpq_class(1, 4)));
  CHECK(Poly::linear(Scalar(Q, 3)) == P({3, 1}));
}

TEST_CASE("multiplication agrees with the schoolbook oracle") {
  Sampler s(Q, 17);
  for (int i = 0; i < 200; ++i) {
    const Poly a = s.poly(7), b = s.poly(7);
    CHECK(testing::to_rat(a * b) == testing::schoolbook_mul(testing::to_rat(a), testing::to_rat(b)));
  }
}

TEST_CASE("division identity and gcd") {
  for (Field f : {Q, Field::prime(11)}) {
    Sampler s(f, 3);
    for (int i = 0; i < 100; ++i) {
      const Poly a = s.poly(8), b = s.poly(4);
      if (b.is_zero()) continue;
      const auto [quo, rem] = divmod(a, b);
      CHECK(quo * b + rem == a);
      CHECK(rem.degree() < b.degree());
      const Poly c = s.poly(3);
      const Poly g = gcd(a * c, b * c);
      if (!c.is_zero() && !g.is_zero()) {
        CHECK(g.is_monic());
        CHECK(divides(g, a * c));
        CHECK(divides(normalize_monic(c).second, g));
      }
    }
  }
  CHECK(gcd(Poly(Q), Poly(Q)).is_zero());
  CHECK(kind_of([] { divmod(P({1, 1}), Poly(Q)); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { exact_div(P({1, 0, 1}), P({1, 1})); }) == ErrorKind::NotADivisor);
}

TEST_CASE("affine composition and variable scaling") {
  const Poly p = P({1, 2, 3});
  const Scalar two(Q, 2), three(Q, 3);
  CHECK(p.compose_affine(two, three).eval(Scalar(Q, 5)) == p.eval(Scalar(Q, 13)));
  CHECK(p.scale_variable(two).eval(Scalar(Q, 5)) == p.eval(Scalar(Q, 10)));
  CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("powmod matches repeated multiplication") {
  const Field f = Field::prime(7);
  const Poly m = P({3, 1, 0, 1}, f), r = P({1, 2}, f);
  Poly acc = Poly::constant(f, 1);
  for (int e = 0; e < 20; ++e) {
    CHECK(powmod(r, e, m) == divmod(acc, m).second);
    acc *= r;
  }
}

TEST_CASE("irreducibility over prime fields agrees with trial division") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const Field f = Field::prime(p);
    Sampler s(f, p);
    for (int i = 0; i < 120; ++i) {
      Poly z = s.poly(5);
      if (z.degree() < 1) continue;
      z = normalize_monic(z).second;
      const bool brute = testing::brute_irreducible_mod_p(z);
      CHECK((is_irreducible(z) == Irreducibility::Yes) == brute);
      if (z.degree() >= 2 && z.degree() <= 3) CHECK(brute == testing::roots_mod_p(z).empty());
    }
  }
}

TEST_CASE("irreducibility over the rationals") {
  CHECK(is_irreducible(P({1, 1})) == Irreducibility::Yes);
  CHECK(is_irreducible(P({1, 0, 1})) == Irreducibility::Yes);
  CHECK(is_irreducible(P({-1, 0, 1})) == Irreducibility::No);
  CHECK(is_irreducible(P({-2, 0, 0, 1})) == Irreducibility::Yes);
  CHECK(is_irreducible(P({1, 0, 0, 0, 4})) == Irreducibility::No);  // (2h^2+2h+1)(2h^2-2h+1)
  CHECK(is_irreducible(P({2, 0, 0, 0, 1})) == Irreducibility::Yes);
  CHECK(is_irreducible(P({1, 0, 2, 0, 1})) == Irreducibility::No);
  CHECK_THROWS_AS(is_irreducible(P({5})), MathError);
}
