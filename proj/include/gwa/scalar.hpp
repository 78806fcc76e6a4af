#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gwa {

/// The coefficient field: the rationals (characteristic 0) or a prime field.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact element of a Field. Rationals are kept canonical by GMP
/// (positive denominator, coprime); prime-field residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f) : field_(f) {}
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);

  /// Accepts "n", "-n", "n/d".
  static Scalar parse(Field f, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// For prime fields the representative in [0, p) as a rational.
  mpq_class to_rational() const;
  std::uint64_t residue() const noexcept { return r_; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used only for deterministic output: numeric for rationals,
  /// by residue for prime fields.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;          // used when field_ is rational
  std::uint64_t r_ = 0;  // used when field_ is prime
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gwa
