#include "gwa/factored_element.hpp"

#include <algorithm>
#include <sstream>

#include "gwa/error.hpp"

namespace gwa {

FactoredElement::FactoredElement(Scalar unit) : unit_(std::move(unit)) {
  if (unit_.is_zero()) throw MathError(ErrorKind::ZeroUnit, "factored element with zero unit");
}

FactoredElement::FactoredElement(Scalar unit, std::vector<Factor> factors)
    : unit_(std::move(unit)), factors_(std::move(factors)) {
  if (unit_.is_zero()) throw MathError(ErrorKind::ZeroUnit, "factored element with zero unit");
  normalize();
}

FactoredElement FactoredElement::from_polys(Scalar unit, const std::vector<std::pair<Poly, int>>& factors) {
  std::vector<Factor> fs;
  for (const auto& [p, m] : factors) {
    if (p.is_constant()) throw MathError(ErrorKind::ConstantInput, "constant factor " + p.to_string());
    auto [u, monic] = normalize_monic(p);
    unit *= u.pow(m);
    fs.push_back({monic, m});
  }
  return FactoredElement(unit, std::move(fs));
}

FactoredElement FactoredElement::single(const Poly& z, int mult) {
  return from_polys(Scalar(z.field(), 1), {{z, mult}});
}

void FactoredElement::normalize() {
  for (const auto& f : factors_) {
    if (!f.poly.is_monic() || f.poly.degree() < 1)
      throw MathError(ErrorKind::InvalidSpec, "factor " + f.poly.to_string() + " is not a monic nonconstant polynomial");
    if (!(f.poly.field() == unit_.field())) throw MathError(ErrorKind::FieldMismatch, "factor field differs from unit");
  }
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  std::vector<Factor> merged;
  for (auto& f : factors_) {
    if (f.mult < 0) throw MathError(ErrorKind::InvalidSpec, "negative multiplicity");
    if (f.mult == 0) continue;
    if (!merged.empty() && merged.back().poly == f.poly) {
      merged.back().mult += f.mult;
    } else {
      merged.push_back(std::move(f));
    }
  }
  factors_ = std::move(merged);
}

int FactoredElement::count() const {
  int n = 0;
  for (const auto& f : factors_) n += f.mult;
  return n;
}

int FactoredElement::degree() const {
  int n = 0;
  for (const auto& f : factors_) n += f.mult * f.poly.degree();
  return n;
}

int FactoredElement::mult(const Poly& z) const {
  for (const auto& f : factors_)
    if (f.poly == z) return f.mult;
  return 0;
}

Poly FactoredElement::expand() const {
  Poly r = Poly::constant(unit_);
  for (const auto& f : factors_) r *= f.poly.pow(static_cast<unsigned>(f.mult));
  return r;
}

FactoredElement FactoredElement::monic() const { return with_unit(Scalar(field(), 1)); }

FactoredElement FactoredElement::with_unit(const Scalar& u) const {
  FactoredElement r = *this;
  if (u.is_zero()) throw MathError(ErrorKind::ZeroUnit, "zero unit");
  r.unit_ = u;
  return r;
}

bool FactoredElement::divides(const FactoredElement& other) const {
  for (const auto& f : factors_)
    if (other.mult(f.poly) < f.mult) return false;
  return true;
}

FactoredElement& FactoredElement::operator*=(const FactoredElement& o) {
  unit_ *= o.unit_;
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  normalize();
  return *this;
}

FactoredElement operator/(const FactoredElement& a, const FactoredElement& b) {
  if (!b.divides(a)) throw MathError(ErrorKind::NotADivisor, b.to_string() + " does not divide " + a.to_string());
  std::vector<Factor> out;
  for (const auto& f : a.factors_) out.push_back({f.poly, f.mult - b.mult(f.poly)});
  return FactoredElement(a.unit_ / b.unit_, std::move(out));
}

std::string FactoredElement::to_string() const {
  std::ostringstream os;
  const bool show_unit = !unit_.is_one() || factors_.empty();
  if (show_unit) os << unit_;
  for (const auto& f : factors_) {
    if (show_unit || &f != &factors_.front()) os << "*";
    os << "(" << f.poly << ")";
    if (f.mult > 1) os << "^" << f.mult;
  }
  return os.str();
}

}  // namespace gwa
