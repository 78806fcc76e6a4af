#include "gwa/rankn.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gwa/error.hpp"
#include "gwa/rank1.hpp"

namespace gwa {

MatrixModule::MatrixModule(GwaSpec spec, PolyMatrix p) : spec_(std::move(spec)), p_(std::move(p)) {
  if (!(p_.field() == spec_.field())) throw MathError(ErrorKind::FieldMismatch, "matrix over another field");
  const Poly det = p_.det();
  if (det.is_zero()) throw MathError(ErrorKind::SingularP, "det P = 0");
  invariants_ = smith_normal_form(p_).invariants;
  const Poly a = spec_.a_poly();
  if (!divides(invariants_.back(), a))
    throw MathError(ErrorKind::NotCompatible, "d_n = " + invariants_.back().to_string() + " does not divide a");
  const PolyMatrix a_inv = (p_.adjugate() * a).map([&](const Poly& e) { return exact_div(e, det); });
  q_ = a_inv.sigma(spec_, 1);
  const std::size_t n = p_.size();
  const Field f = spec_.field();
  if (!(p_ * q_.sigma(spec_, -1) == PolyMatrix::identity(f, n) * a) ||
      !(q_ * p_.sigma(spec_, 1) == PolyMatrix::identity(f, n) * spec_.apply_sigma(a, 1)))
    throw MathError(ErrorKind::NotCompatible, "compatibility identities fail");
}

void MatrixModule::check(const PolyVector& v) const {
  if (v.size() != p_.size())
    throw MathError(ErrorKind::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " for rank " + std::to_string(p_.size()));
}

PolyVector MatrixModule::act_x(const PolyVector& v) const {
  check(v);
  return p_ * sigma(v, spec_, -1);
}

PolyVector MatrixModule::act_y(const PolyVector& v) const {
  check(v);
  return q_ * sigma(v, spec_, 1);
}

PolyVector MatrixModule::act_ring(const Poly& r, const PolyVector& v) const {
  check(v);
  PolyVector out = v;
  for (auto& e : out) e *= r;
  return out;
}

PolyVector MatrixModule::act_word(std::string_view word, const PolyVector& v) const {
  PolyVector r = v;
  const Poly h = Poly::variable(spec_.field());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'x': r = act_x(r); break;
      case 'y': r = act_y(r); break;
      case 'h': r = act_ring(h, r); break;
      default: throw MathError(ErrorKind::ParseError, std::string("unknown generator '") + *it + "'");
    }
  }
  return r;
}

MatrixModule make_matrix_module(const GwaSpec& spec, const PolyMatrix& p) { return MatrixModule(spec, p); }

bool verify_iso_conjugate(const MatrixModule& m, const MatrixModule& m2, const PolyMatrix& s) {
  if (!(m.spec() == m2.spec())) throw MathError(ErrorKind::SpecMismatch, "modules over different algebras");
  if (s.size() != m.rank() || m.rank() != m2.rank()) throw MathError(ErrorKind::DimensionMismatch, "rank mismatch");
  const Poly d = s.det();
  if (d.is_zero() || d.degree() > 0) throw MathError(ErrorKind::NotInvertible, "det S = " + d.to_string());
  return m2.P() * s.sigma(m.spec(), -1) == s * m.P();
}

PolyMatrix companion(const Poly& a0, std::size_t n) {
  PolyMatrix c(a0.field(), n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = Poly::constant(a0.field(), 1);
  c(0, n - 1) += a0;
  return c;
}

namespace {

Check make_check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

std::vector<Poly> monic_all(const std::vector<Poly>& v) {
  std::vector<Poly> out;
  for (const auto& p : v) out.push_back(p.is_zero() ? p : normalize_monic(p).second);
  return out;
}

}  // namespace

VnConstruction construct_simple_vn(const GwaSpec& spec, const FactoredElement& a0, std::size_t n) {
  if (n < 1) throw MathError(ErrorKind::InvalidSpec, "rank must be positive");
  if (!spec.all_orbits_infinite()) throw MathError(ErrorKind::FiniteOrbit, "some sigma-orbit in Irr(R) is finite");
  if (a0.is_unit() || !a0.divides(spec.a()))
    throw MathError(ErrorKind::NotADivisor, a0.to_string() + " is not a nonunit factor of a");
  for (const auto& z : a0.factors())
    for (const auto& w : spec.a().factors()) {
      auto k = spec.orbit_shift(w.poly, z.poly);
      if (k && *k > 0)
        throw MathError(ErrorKind::NotMinimal, "sigma^-" + std::to_string(*k) + "(" + z.poly.to_string() +
                                                   ") ~ " + w.poly.to_string() + " divides a");
    }

  const Field f = spec.field();
  const Poly a = spec.a_poly();
  const Poly a0p = a0.expand();
  const PolyMatrix p = companion(a0p, n);
  PolyMatrix q_display(f, n);
  const Poly corner = spec.apply_sigma(exact_div(a, a0p), 1);
  if (n == 1) {
    q_display(0, 0) = corner;
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) q_display(i, i + 1) = spec.apply_sigma(a, 1);
    q_display(n - 1, 0) = corner;
  }

  // A' = R(sigma^n, a sigma^-1(a) ... sigma^-(n-1)(a))
  const Sigma& s = spec.sigma();
  Sigma reduced_sigma = s.is_classical() ? Sigma::classical(s.param * Scalar(f, static_cast<long>(n)))
                                         : Sigma::quantum(s.param.pow(static_cast<long>(n)));
  FactoredElement reduced_a = FactoredElement::one(f);
  for (std::size_t i = 0; i < n; ++i) reduced_a *= spec.apply_sigma(spec.a(), -static_cast<long>(i));
  std::vector<bool> asserted(reduced_a.factors().size(), false);
  for (std::size_t i = 0; i < asserted.size(); ++i)
    for (const auto& note : spec.notes())
      if (note.asserted && spec.orbit_shift(note.poly, reduced_a.factors()[i].poly)) asserted[i] = true;
  GwaSpec reduced(f, reduced_sigma, reduced_a, asserted);

  VnConstruction out{MatrixModule(spec, p), reduced, {}, false};
  const MatrixModule& m = out.module;

  PolyMatrix xn = PolyMatrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) xn = xn * p.sigma(spec, -static_cast<long>(i));
  bool diag = xn.is_diagonal();
  for (std::size_t i = 0; i < n && diag; ++i) diag = xn(i, i) == spec.apply_sigma(a0p, -static_cast<long>(i));
  out.checks.push_back(make_check("x^n acts diagonally with entries sigma^-i(a0)", diag, xn.to_string()));

  std::vector<Poly> expect(n, Poly::constant(f, 1));
  expect.back() = normalize_monic(a0p).second;
  out.checks.push_back(make_check("SNF(P) = (1, ..., 1, a0)", m.invariant_factors() == expect));

  const auto& d = m.invariant_factors();
  std::vector<Poly> dual;
  for (std::size_t i = n; i-- > 0;) dual.push_back(spec.apply_sigma(exact_div(a, d[i]), 1));
  out.checks.push_back(make_check("SNF(Q) = (sigma(a/d_n), ..., sigma(a/d_1))",
                                  smith_normal_form(m.Q()).invariants == monic_all(dual)));

  out.checks.push_back(make_check("displayed Q equals sigma(a P^-1)", q_display == m.Q(), q_display.to_string()));

  bool minimal_transfer = true;
  for (const auto& z : a0.factors())
    for (const auto& w : reduced.a().factors()) {
      auto k = reduced.orbit_shift(w.poly, z.poly);
      if (k && *k > 0) minimal_transfer = false;
    }
  out.checks.push_back(make_check("a0 stays minimal for A'", minimal_transfer));

  const Rank1Module re1(reduced, a0);
  const auto simple = is_simple(re1);
  out.checks.push_back(make_check("R e_1 ~ V_{a0} over A' is simple", simple.simple,
                                  simple.pair ? "pair (" + simple.pair->z.to_string() + ", " +
                                                    simple.pair->w.to_string() + ")"
                                              : ""));

  out.certified = std::all_of(out.checks.begin(), out.checks.end(), [](const Check& c) { return c.passed; });
  return out;
}

GwaSpec sl2_spec(const Scalar& b) {
  const Field f = b.field();
  const Scalar one(f, 1), two(f, 2);
  auto a = FactoredElement::from_polys(Scalar(f, mpq_class(-1, 4)),
                                       {{Poly::linear(b), 1}, {Poly::linear(two - b), 1}});
  return GwaSpec(f, Sigma::classical(two), a);
}

PolyVector Sl2Family::h(const PolyVector& v) const { return module.act_ring(Poly::variable(b.field()), v); }
PolyVector Sl2Family::e(const PolyVector& v) const { return module.act_y(v); }
PolyVector Sl2Family::f(const PolyVector& v) const { return module.act_x(v); }

PolyVector Sl2Family::casimir(const PolyVector& v) const {
  const Field fld = b.field();
  const Poly t = Poly::variable(fld);
  const Poly quarter = Poly::constant(Scalar(fld, mpq_class(1, 4)));
  PolyVector fe = f(e(v));
  PolyVector out = module.act_ring(quarter * t * (t + Poly::constant(fld, 2)), v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += fe[i];
  return out;
}

namespace {

PolyVector sub(const PolyVector& a, const PolyVector& b) {
  PolyVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

PolyVector scale(const PolyVector& a, const Poly& r) {
  PolyVector out = a;
  for (auto& e : out) e *= r;
  return out;
}

}  // namespace

Sl2Family construct_sl2_family(const Scalar& b, std::size_t n) {
  if (!b.field().is_rational()) throw MathError(ErrorKind::InvalidField, "the sl2 family needs characteristic 0");
  if (n < 1) throw MathError(ErrorKind::InvalidSpec, "rank must be positive");
  const Field f = b.field();
  const GwaSpec spec = sl2_spec(b);
  const Poly t = Poly::variable(f);
  const Poly a0 = t + Poly::constant(b);
  Sl2Family fam{MatrixModule(spec, companion(a0, n)), b, Scalar(f, mpq_class(1, 4)) * b * (b - Scalar(f, 2)), {}};

  // e = -(1/4) [superdiagonal theta, corner t - b] composed with v(t) -> v(t - 2)
  const Poly theta = (t + Poly::constant(b - Scalar(f, 2))) * (t - Poly::constant(b));
  PolyMatrix e_display(f, n);
  if (n == 1) {
    e_display(0, 0) = t - Poly::constant(b);
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) e_display(i, i + 1) = theta;
    e_display(n - 1, 0) = t - Poly::constant(b);
  }
  e_display = e_display * Poly::constant(Scalar(f, mpq_class(-1, 4)));
  PolyMatrix f_display = companion(a0, n);
  fam.checks.push_back({"e matrix matches the displayed action", e_display == fam.module.Q(), e_display.to_string()});
  fam.checks.push_back({"f matrix matches the displayed action", f_display == fam.module.P(), f_display.to_string()});

  bool he = true, hf = true, ef = true, cas = true;
  const Poly two = Poly::constant(f, 2);
  const Poly chi = Poly::constant(fam.chi);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned k = 0; k <= 6; ++k) {
      PolyVector v(n, Poly(f));
      v[i] = t.pow(k);
      const PolyVector ev = fam.e(v), fv = fam.f(v);
      he = he && sub(fam.h(ev), fam.e(fam.h(v))) == scale(ev, two);
      hf = hf && sub(fam.h(fv), fam.f(fam.h(v))) == scale(fv, -two);
      ef = ef && sub(fam.e(fv), fam.f(ev)) == fam.h(v);
      cas = cas && fam.casimir(v) == scale(v, chi);
    }
  fam.checks.push_back({"[h,e] = 2e", he, ""});
  fam.checks.push_back({"[h,f] = -2f", hf, ""});
  fam.checks.push_back({"[e,f] = h", ef, ""});
  fam.checks.push_back({"fe + (1/4)h(h+2) = chi", cas, "chi = " + fam.chi.to_string()});
  return fam;
}

std::optional<SetSolution> solve_set_equation(long j, long k, long n) {
  if (n == 0) {
    if (j == k) return SetSolution{};
    return std::nullopt;
  }
  if ((k - j) % n != 0) return std::nullopt;
  const long m = (k - j) / n;
  SetSolution sol;
  if (m >= 0) {
    for (long i = 1; i <= m; ++i) sol.t.push_back(j + i * n);
  } else {
    for (long i = 1; i <= -m; ++i) sol.s.push_back(k + i * n);
  }
  return sol;
}

bool check_set_equation(long j, long k, long n, const SetSolution& sol) {
  std::multiset<long> lhs{j}, rhs{k};
  for (long v : sol.s) {
    lhs.insert(v - n);
    rhs.insert(v);
  }
  for (long v : sol.t) {
    lhs.insert(v);
    rhs.insert(v - n);
  }
  return lhs == rhs;
}

namespace {

using Signed = std::map<long, long>;

void bump(Signed& m, long key, long by) {
  if ((m[key] += by) == 0) m.erase(key);
}

void enumerate_multisets(int max_size, long lo, long hi, std::vector<long>& cur,
                         const std::function<void(const std::vector<long>&)>& visit) {
  visit(cur);
  if (static_cast<int>(cur.size()) == max_size) return;
  for (long v = cur.empty() ? lo : cur.back(); v <= hi; ++v) {
    cur.push_back(v);
    enumerate_multisets(max_size, lo, hi, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

bool brute_set_equation(long j, long k, long n, int max_size, long range) {
  // Rewritten as 1_{S-n} - 1_S + 1_j - 1_k = 1_{T-n} - 1_T and matched through a set.
  std::set<Signed> left;
  std::vector<long> cur;
  enumerate_multisets(max_size, -range, range, cur, [&](const std::vector<long>& s) {
    Signed v;
    bump(v, j, 1);
    bump(v, k, -1);
    for (long x : s) {
      bump(v, x - n, 1);
      bump(v, x, -1);
    }
    left.insert(std::move(v));
  });
  bool found = false;
  enumerate_multisets(max_size, -range, range, cur, [&](const std::vector<long>& t) {
    if (found) return;
    Signed v;
    for (long x : t) {
      bump(v, x - n, 1);
      bump(v, x, -1);
    }
    if (left.count(v)) found = true;
  });
  return found;
}

}  // namespace gwa
