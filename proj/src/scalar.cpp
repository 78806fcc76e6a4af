#include "gwa/scalar.hpp"

#include <ostream>

#include "gwa/error.hpp"

namespace gwa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FactorOutsideOrbit: return "FactorOutsideOrbit";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::InfiniteLength: return "InfiniteLength";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::ZeroUnit: return "ZeroUnit";
    case ErrorKind::NoMaximalSubmodule: return "NoMaximalSubmodule";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::ReducibleIdeal: return "ReducibleIdeal";
    case ErrorKind::SingularP: return "SingularP";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::FiniteOrbit: return "FiniteOrbit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class m = v % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2) throw MathError(ErrorKind::InvalidField, "characteristic must be a prime, got " + std::to_string(p));
  mpz_class z(std::to_string(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw MathError(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
  } else {
    r_ = reduce(mpz_class(v), f.characteristic());
  }
}

Scalar::Scalar(Field f, const mpq_class& v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
    q_.canonicalize();
    return;
  }
  const std::uint64_t p = f.characteristic();
  std::uint64_t den = reduce(v.get_den(), p);
  if (den == 0) throw MathError(ErrorKind::DivisionByZero, "denominator vanishes in " + f.to_string());
  r_ = mulmod(reduce(v.get_num(), p), powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw MathError(ErrorKind::ParseError, "empty scalar");
  if (s.front() == '+') s.erase(s.begin());
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw MathError(ErrorKind::ParseError, "bad scalar '" + std::string(text) + "'");
  if (v.get_den() == 0) throw MathError(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  v.canonicalize();
  return Scalar(f, v);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return q_;
  return mpq_class(mpz_class(std::to_string(r_)));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw MathError(ErrorKind::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar r(field_);
  if (field_.is_rational()) {
    r.q_ = 1 / q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r.r_ = powmod(r_, p - 2, p);
  }
  return r;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Scalar r(field_, 1);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rational()) {
    r.q_ = -q_;
  } else {
    r.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r_) + o.r_) % p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_rational()) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  return a.r_ <=> b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace gwa
