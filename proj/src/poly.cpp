#include "gwa/poly.hpp"

#include <ostream>
#include <sstream>

#include "gwa/error.hpp"

namespace gwa {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& s : c_)
    if (!(s.field() == f)) throw MathError(ErrorKind::FieldMismatch, "coefficient outside " + f.to_string());
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::variable(Field f) { return Poly(f, {Scalar(f, 0), Scalar(f, 1)}); }

Poly Poly::from_ints(Field f, std::initializer_list<long> coeffs) {
  std::vector<Scalar> c;
  for (long v : coeffs) c.emplace_back(f, v);
  return Poly(f, std::move(c));
}

Poly Poly::parse(Field f, const std::vector<std::string>& coeffs) {
  std::vector<Scalar> c;
  for (const auto& s : coeffs) c.push_back(Scalar::parse(f, s));
  return Poly(f, std::move(c));
}

Poly Poly::linear(const Scalar& c) { return Poly(c.field(), {c, Scalar(c.field(), 1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
  if (!(field_ == o.field_))
    throw MathError(ErrorKind::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(field_);
  return c_[i];
}

Scalar Poly::leading() const {
  if (c_.empty()) return Scalar(field_);
  return c_.back();
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar r(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
  return r;
}

Poly Poly::compose_affine(const Scalar& alpha, const Scalar& beta) const {
  const Poly lin(field_, {beta, alpha});
  Poly r(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * lin;
    r += Poly::constant(*it);
  }
  return r;
}

Poly Poly::scale_variable(const Scalar& scale) const {
  Poly r = *this;
  Scalar f(field_, 1);
  for (auto& c : r.c_) {
    c *= f;
    f *= scale;
  }
  r.trim();
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly base = *this;
  Poly r = Poly::constant(field_, 1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.field_, std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (!(s.field() == field_)) throw MathError(ErrorKind::FieldMismatch, "scalar outside " + field_.to_string());
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = field_.is_rational() && cs.front() == '-';
    if (neg) cs.erase(cs.begin());
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit_coeff = cs == "1";
    if (i == 0) {
      os << cs;
      continue;
    }
    if (!unit_coeff) os << (cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (!(dividend.field() == divisor.field()))
    throw MathError(ErrorKind::FieldMismatch, dividend.field().to_string() + " vs " + divisor.field().to_string());
  if (divisor.is_zero()) throw MathError(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field f = dividend.field();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Poly(f), dividend};
  std::vector<Scalar> rem = dividend.coeffs();
  std::vector<Scalar> quo(dividend.degree() - dd + 1, Scalar(f));
  const Scalar inv_lead = divisor.leading().inverse();
  const auto& dc = divisor.coeffs();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    Scalar t = rem[k + dd] * inv_lead;
    quo[k] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= t * dc[j];
  }
  rem.resize(dd);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return normalize_monic(x).second;
}

std::pair<Scalar, Poly> normalize_monic(const Poly& p) {
  if (p.is_zero()) throw MathError(ErrorKind::ZeroPolynomial, "cannot normalize the zero polynomial");
  Scalar u = p.leading();
  return {u, p * u.inverse()};
}

bool divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

Poly exact_div(const Poly& p, const Poly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw MathError(ErrorKind::NotADivisor, d.to_string() + " does not divide " + p.to_string());
  return q;
}

Poly powmod(const Poly& r, const mpz_class& e, const Poly& m) {
  Poly base = divmod(r, m).second;
  Poly acc = divmod(Poly::constant(r.field(), 1), m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = divmod(acc * acc, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = divmod(acc * base, m).second;
  }
  return acc;
}

}  // namespace gwa
