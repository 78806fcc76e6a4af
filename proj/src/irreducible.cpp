#include "gwa/irreducible.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "gwa/error.hpp"

namespace gwa {

const char* to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Yes: return "yes";
    case Irreducibility::No: return "no";
    case Irreducibility::Unverified: return "unverified";
  }
  return "?";
}

namespace {

Irreducibility prime_field_test(const Poly& f) {
  const Poly h = Poly::variable(f.field());
  const mpz_class p(std::to_string(f.field().characteristic()));
  Poly power = h;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    power = powmod(power, p, f);
    if (gcd(power - h, f).degree() > 0) return Irreducibility::No;
  }
  return Irreducibility::Yes;
}

// Primitive integer multiple of a rational polynomial.
std::vector<mpz_class> integer_coeffs(const Poly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) {
    mpz_class d = c.to_rational().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.to_rational() * den;
    out.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  for (auto& v : out) v /= g;
  return out;
}

// Positive divisors by trial division, or nullopt when |n| is too large.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  if (n > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), large.begin(), large.end());
  return small;
}

bool has_rational_root(const Poly& f, const std::vector<mpz_class>& z, bool& gave_up) {
  if (z.front() == 0) return true;
  auto num = divisors(z.front());
  auto den = divisors(z.back());
  if (!num || !den) {
    gave_up = true;
    return false;
  }
  for (const auto& a : *num)
    for (const auto& b : *den)
      for (int sign : {1, -1}) {
        Scalar r(f.field(), mpq_class(sign * a, b));
        if (f.eval(r).is_zero()) return true;
      }
  return false;
}

Poly lagrange(Field f, const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
  Poly out(f);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly term = Poly::constant(Scalar(f, mpq_class(ys[i])));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      Poly lin = Poly::from_ints(f, {-xs[j], 1});
      term *= lin * Scalar(f, xs[i] - xs[j]).inverse();
    }
    out += term;
  }
  return out;
}

Irreducibility kronecker(const Poly& f, const std::vector<mpz_class>& z, std::uint64_t limit) {
  std::uint64_t work = 0;
  const Field fld = f.field();
  const Poly fz(fld, [&] {
    std::vector<Scalar> c;
    for (const auto& v : z) c.emplace_back(fld, mpq_class(v));
    return c;
  }());
  for (int d = 2; 2 * d <= f.degree(); ++d) {
    std::vector<long> xs;
    std::vector<std::vector<mpz_class>> choices;
    for (long x = 0; static_cast<int>(xs.size()) < d + 1 && x < 64; x = x <= 0 ? 1 - x : -x) {
      mpq_class v = fz.eval(Scalar(fld, x)).to_rational();
      auto ds = divisors(v.get_num());
      if (!ds) continue;
      std::vector<mpz_class> signed_ds;
      for (const auto& e : *ds) {
        signed_ds.push_back(e);
        signed_ds.push_back(-e);
      }
      xs.push_back(x);
      choices.push_back(std::move(signed_ds));
    }
    if (static_cast<int>(xs.size()) < d + 1) return Irreducibility::Unverified;
    std::vector<std::size_t> idx(xs.size(), 0);
    while (true) {
      if (++work > limit) return Irreducibility::Unverified;
      std::vector<mpz_class> ys;
      for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(choices[i][idx[i]]);
      Poly g = lagrange(fld, xs, ys);
      if (g.degree() >= 1 && g.degree() < f.degree() && divides(g, fz)) return Irreducibility::No;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return Irreducibility::Yes;
}

}  // namespace

Irreducibility is_irreducible(const Poly& p, std::uint64_t work_limit) {
  if (p.is_constant()) throw MathError(ErrorKind::ConstantInput, "irreducibility of a constant");
  if (p.degree() == 1) return Irreducibility::Yes;
  if (!p.field().is_rational()) return prime_field_test(p);
  const auto z = integer_coeffs(p);
  bool gave_up = false;
  if (has_rational_root(p, z, gave_up)) return Irreducibility::No;
  if (p.degree() <= 3) return gave_up ? Irreducibility::Unverified : Irreducibility::Yes;
  return kronecker(p, z, work_limit);
}

}  // namespace gwa
