#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

struct Factor {
  Poly poly;  // monic irreducible
  int mult = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// unit * prod factor^mult, factors monic, pairwise distinct and kept in the
/// canonical Poly order. Irreducibility is the caller's responsibility.
class FactoredElement {
 public:
  FactoredElement() = default;
  explicit FactoredElement(Scalar unit);
  FactoredElement(Scalar unit, std::vector<Factor> factors);

  /// Monic parts are taken from the given polynomials; leading coefficients
  /// are folded into the unit.
  static FactoredElement from_polys(Scalar unit, const std::vector<std::pair<Poly, int>>& factors);
  static FactoredElement one(Field f) { return FactoredElement(Scalar(f, 1)); }
  static FactoredElement single(const Poly& z, int mult = 1);

  Field field() const { return unit_.field(); }
  const Scalar& unit() const noexcept { return unit_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }
  /// Total number of irreducible factors with multiplicity.
  int count() const;
  int degree() const;
  int mult(const Poly& z) const;

  Poly expand() const;
  /// Same multiset with unit 1.
  FactoredElement monic() const;
  FactoredElement with_unit(const Scalar& u) const;

  /// Multiset inclusion of the factors (units ignored).
  bool divides(const FactoredElement& other) const;

  FactoredElement& operator*=(const FactoredElement& o);
  friend FactoredElement operator*(FactoredElement a, const FactoredElement& b) { return a *= b; }
  /// Exact multiset division; throws NotADivisor.
  friend FactoredElement operator/(const FactoredElement& a, const FactoredElement& b);

  /// Equal units and equal multisets.
  friend bool operator==(const FactoredElement&, const FactoredElement&) = default;
  bool associate(const FactoredElement& o) const { return factors_ == o.factors_; }

  std::string to_string() const;

 private:
  void normalize();

  Scalar unit_;
  std::vector<Factor> factors_;
};

}  // namespace gwa
