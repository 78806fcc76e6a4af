#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gwa/scalar.hpp"

namespace gwa {

/// Dense univariate polynomial over a Field, constant term first. The zero
/// polynomial has no coefficients and the leading coefficient is never zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly constant(Field f, long c) { return constant(Scalar(f, c)); }
  /// The variable h.
  static Poly variable(Field f);
  /// Integer coefficients, constant first: from_ints(Q, {-1, 0, 1}) = h^2 - 1.
  static Poly from_ints(Field f, std::initializer_list<long> coeffs);
  /// Coefficient strings such as "-3/4", constant first.
  static Poly parse(Field f, const std::vector<std::string>& coeffs);
  /// h + c
  static Poly linear(const Scalar& c);

  Field field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const;
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(int i) const;
  Scalar leading() const;

  Scalar eval(const Scalar& at) const;
  /// p(alpha*h + beta)
  Poly compose_affine(const Scalar& alpha, const Scalar& beta) const;
  /// Multiplies the coefficient of h^i by scale^i.
  Poly scale_variable(const Scalar& scale) const;
  Poly pow(unsigned e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) = default;
  /// Deterministic total order: degree first, then coefficients from the
  /// constant term upward.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "h") const;

 private:
  void trim();
  void check_same_field(const Poly& o) const;

  Field field_;
  std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Returns (u, m) with m monic and p = u*m.
std::pair<Scalar, Poly> normalize_monic(const Poly& p);
bool divides(const Poly& d, const Poly& p);
/// Exact quotient; throws NotADivisor when the division leaves a remainder.
Poly exact_div(const Poly& p, const Poly& d);
/// r^e mod m
Poly powmod(const Poly& r, const mpz_class& e, const Poly& m);

}  // namespace gwa
