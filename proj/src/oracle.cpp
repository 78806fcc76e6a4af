#include "gwa/oracle.hpp"

#include <sstream>

#include "gwa/error.hpp"

namespace gwa {

AlgebraElement AlgebraElement::ring(const Poly& r) {
  AlgebraElement e(r.field());
  e.add(0, r);
  return e;
}

AlgebraElement AlgebraElement::x(Field f, long power) {
  AlgebraElement e(f);
  e.add(power, Poly::constant(f, 1));
  return e;
}

AlgebraElement AlgebraElement::y(Field f, long power) {
  AlgebraElement e(f);
  e.add(-power, Poly::constant(f, 1));
  return e;
}

Poly AlgebraElement::component(long d) const {
  auto it = c_.find(d);
  return it == c_.end() ? Poly(field_) : it->second;
}

void AlgebraElement::add(long d, const Poly& r) {
  Poly& slot = c_.try_emplace(d, Poly(field_)).first->second;
  slot += r;
  if (slot.is_zero()) c_.erase(d);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [d, r] : o.c_) add(d, r);
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, r] : c_) {
    os << (first ? "" : " + ") << "(" << r << ")";
    if (d > 0) os << "*x^" << d;
    if (d < 0) os << "*y^" << -d;
    first = false;
  }
  return os.str();
}

AlgebraElement nf_mul(const AlgebraElement& u, const AlgebraElement& v, const GwaSpec& spec) {
  if (!(u.field() == spec.field()) || !(v.field() == spec.field()))
    throw MathError(ErrorKind::SpecMismatch, "algebra elements over another field");
  const Poly a = spec.a_poly();
  AlgebraElement out(spec.field());
  for (const auto& [d1, r] : u.components())
    for (const auto& [d2, s] : v.components()) {
      Poly coef = r * spec.apply_sigma(s, -d1);
      if (d1 > 0 && d2 < 0) {
        const long m = d1, n = -d2;
        for (long i = 0; i < std::min(m, n); ++i) coef *= spec.apply_sigma(a, -(m - 1 - i));
      } else if (d1 < 0 && d2 > 0) {
        const long n = -d1, m = d2;
        for (long i = 0; i < std::min(m, n); ++i) coef *= spec.apply_sigma(a, n - i);
      }
      out.add(d1 + d2, coef);
    }
  return out;
}

namespace {

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& r, const Poly& v) { return r * v; }
PolyVector add(const PolyVector& a, const PolyVector& b) {
  PolyVector o = a;
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += b[i];
  return o;
}
PolyVector mul(const Poly& r, const PolyVector& v) {
  PolyVector o = v;
  for (auto& e : o) e *= r;
  return o;
}

template <class Module, class Vec>
Vec act_words(const Module& m, const AlgebraElement& u, const Vec& v, Vec zero) {
  Vec out = std::move(zero);
  for (const auto& [d, r] : u.components()) {
    Vec w = v;
    for (long i = 0; i < d; ++i) w = m.act_x(w);
    for (long i = 0; i < -d; ++i) w = m.act_y(w);
    out = add(out, mul(r, w));
  }
  return out;
}

}  // namespace

Poly act_via_words(const Rank1Module& m, const AlgebraElement& u, const Poly& v) {
  if (!(u.field() == m.spec().field())) throw MathError(ErrorKind::SpecMismatch, "element over another field");
  return act_words(m, u, v, Poly(m.spec().field()));
}

PolyVector act_via_words(const MatrixModule& m, const AlgebraElement& u, const PolyVector& v) {
  if (!(u.field() == m.spec().field())) throw MathError(ErrorKind::SpecMismatch, "element over another field");
  return act_words(m, u, v, PolyVector(m.rank(), Poly(m.spec().field())));
}

bool brute_submodule_closure(const Rank1Module& m, const Poly& g, int steps) {
  if (g.is_zero()) throw MathError(ErrorKind::ZeroPolynomial, "zero generator");
  const Poly h = Poly::variable(g.field());
  std::vector<Poly> frontier{g};
  for (int round = 0; round < steps; ++round) {
    std::vector<Poly> next;
    for (const auto& e : frontier)
      for (Poly image : {m.act_x(e), m.act_y(e), h * e}) {
        if (!divides(g, image)) return false;
        next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  return true;
}

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Scalar Sampler::scalar(long height) {
  if (!field_.is_rational()) {
    const auto p = field_.characteristic();
    return Scalar(field_, static_cast<long>(std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng_)));
  }
  return Scalar(field_, mpq_class(integer(-height, height), integer(1, 3)));
}

Poly Sampler::poly(int max_deg, long height) {
  const int deg = static_cast<int>(integer(0, max_deg));
  std::vector<Scalar> c;
  for (int i = 0; i <= deg; ++i) c.push_back(scalar(height));
  return Poly(field_, std::move(c));
}

AlgebraElement Sampler::element(int max_grade, int max_deg, long height) {
  AlgebraElement e(field_);
  const int terms = static_cast<int>(integer(1, 3));
  for (int i = 0; i < terms; ++i) e.add(integer(-max_grade, max_grade), poly(max_deg, height));
  return e;
}

namespace {

template <class Vec>
std::string show(const Vec& v) {
  if constexpr (std::is_same_v<Vec, Poly>) {
    return v.to_string();
  } else {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
  }
}

template <class Module, class Vec>
OracleReport relations(const Module& m, std::uint64_t seed, int samples, int max_deg, std::vector<Vec> vectors,
                       const std::function<Vec(Sampler&)>& random_vec) {
  const GwaSpec& spec = m.spec();
  Sampler rng(spec.field(), seed);
  OracleReport rep{seed, samples, max_deg, true, {}};
  for (int i = 0; i < samples; ++i) vectors.push_back(random_vec(rng));
  const Poly a = spec.a_poly();
  const Poly sa = spec.apply_sigma(a, 1);
  auto fail = [&](const std::string& what, const Vec& v) {
    if (rep.passed) rep.counterexample = what + " at v = " + show(v);
    rep.passed = false;
  };
  for (const auto& v : vectors) {
    const Poly r = rng.poly(max_deg);
    if (!(m.act_x(mul(spec.apply_sigma(r, 1), v)) == mul(r, m.act_x(v)))) fail("x sigma(r) = r x", v);
    if (!(m.act_y(mul(r, v)) == mul(spec.apply_sigma(r, 1), m.act_y(v)))) fail("y r = sigma(r) y", v);
    if (!(m.act_x(m.act_y(v)) == mul(a, v))) fail("xy = a", v);
    if (!(m.act_y(m.act_x(v)) == mul(sa, v))) fail("yx = sigma(a)", v);
    const AlgebraElement u = rng.element(2, 2), w = rng.element(2, 2);
    if (!(act_via_words(m, nf_mul(u, w, spec), v) == act_via_words(m, u, act_via_words(m, w, v))))
      fail("(uw).v = u.(w.v) for u = " + u.to_string() + ", w = " + w.to_string(), v);
  }
  return rep;
}

}  // namespace

OracleReport relation_suite(const Rank1Module& m, std::uint64_t seed, int samples, int max_deg) {
  const Field f = m.spec().field();
  return relations<Rank1Module, Poly>(m, seed, samples, max_deg, {Poly::constant(f, 1)},
                                      [&](Sampler& s) { return s.poly(max_deg); });
}

OracleReport relation_suite(const MatrixModule& m, std::uint64_t seed, int samples, int max_deg) {
  const Field f = m.spec().field();
  std::vector<PolyVector> basis;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    PolyVector e(m.rank(), Poly(f));
    e[i] = Poly::constant(f, 1);
    basis.push_back(std::move(e));
  }
  return relations<MatrixModule, PolyVector>(m, seed, samples, max_deg, basis, [&](Sampler& s) {
    PolyVector v;
    for (std::size_t i = 0; i < m.rank(); ++i) v.push_back(s.poly(max_deg));
    return v;
  });
}

OracleReport associativity_suite(const GwaSpec& spec, std::uint64_t seed, int triples, int max_deg) {
  Sampler rng(spec.field(), seed);
  OracleReport rep{seed, triples, max_deg, true, {}};
  for (int i = 0; i < triples && rep.passed; ++i) {
    const auto u = rng.element(max_deg, max_deg), v = rng.element(max_deg, max_deg), w = rng.element(max_deg, max_deg);
    const auto left = nf_mul(nf_mul(u, v, spec), w, spec);
    const auto right = nf_mul(u, nf_mul(v, w, spec), spec);
    if (!(left == right)) {
      rep.passed = false;
      rep.counterexample = "u = " + u.to_string() + ", v = " + v.to_string() + ", w = " + w.to_string();
    }
  }
  return rep;
}

}  // namespace gwa
