#include "gwa/gwa.hpp"

#include <sstream>

#include "gwa/error.hpp"

namespace gwa {

GwaSpec::GwaSpec(Field field, Sigma sigma, FactoredElement a, const std::vector<bool>& asserted)
    : field_(field), sigma_(std::move(sigma)), a_(std::move(a)) {
  if (!(sigma_.param.field() == field_) || !(a_.field() == field_))
    throw MathError(ErrorKind::FieldMismatch, "algebra data over different fields");
  if (a_.unit().is_zero()) throw MathError(ErrorKind::InvalidSpec, "a must be nonzero");
  if (!sigma_.is_classical() && sigma_.param.is_zero())
    throw MathError(ErrorKind::InvalidSpec, "gamma must be nonzero");
  const auto& fs = a_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    FactorNote note{fs[i].poly, Irreducibility::Yes, i < asserted.size() && asserted[i]};
    note.status = is_irreducible(fs[i].poly);
    if (note.status == Irreducibility::No && !note.asserted)
      throw MathError(ErrorKind::NotIrreducible, fs[i].poly.to_string() + " is reducible");
    notes_.push_back(std::move(note));
  }
}

bool GwaSpec::is_identity() const {
  return sigma_.is_classical() ? sigma_.param.is_zero() : sigma_.param.is_one();
}

Poly GwaSpec::apply_sigma(const Poly& p, long k) const {
  if (k == 0) return p;
  if (sigma_.is_classical()) return p.compose_affine(Scalar(field_, 1), -(Scalar(field_, k) * sigma_.param));
  return p.scale_variable(sigma_.param.pow(k));
}

FactoredElement GwaSpec::apply_sigma(const FactoredElement& f, long k) const {
  Scalar unit = f.unit();
  std::vector<Factor> out;
  for (const auto& fac : f.factors()) {
    auto [u, m] = normalize_monic(apply_sigma(fac.poly, k));
    unit *= u.pow(fac.mult);
    out.push_back({std::move(m), fac.mult});
  }
  return FactoredElement(unit, std::move(out));
}

std::optional<long> GwaSpec::sigma_order() const {
  if (is_identity()) return 1;
  if (sigma_.is_classical()) {
    if (field_.is_rational()) return std::nullopt;
    return static_cast<long>(field_.characteristic());
  }
  if (field_.is_rational()) {
    if (sigma_.param == Scalar(field_, -1)) return 2;
    return std::nullopt;
  }
  const Scalar one(field_, 1);
  Scalar g = sigma_.param;
  long k = 1;
  while (!(g == one)) {
    g *= sigma_.param;
    ++k;
  }
  return k;
}

std::optional<long> GwaSpec::quantum_shift(const Poly& z, const Poly& w) const {
  const Poly h = Poly::variable(field_);
  if (z == h || w == h) return std::nullopt;
  if (auto order = sigma_order()) {
    for (long k = 0; k < *order; ++k)
      if (shift_monic(z, k) == w) return k;
    return std::nullopt;
  }
  // gamma^(k d) = z(0) / w(0), gamma rational of absolute value != 1.
  const mpq_class target = z.coeff(0).to_rational() / w.coeff(0).to_rational();
  const mpq_class g = sigma_.param.pow(z.degree()).to_rational();
  auto verify = [&](long k) -> std::optional<long> {
    if (shift_monic(z, k) == w) return k;
    return std::nullopt;
  };
  if (abs(target) == 1) return target == 1 ? verify(0) : std::nullopt;
  const bool grows = abs(g) > 1;
  const bool target_big = abs(target) > 1;
  const mpq_class step = grows == target_big ? g : 1 / g;
  const long dir = grows == target_big ? 1 : -1;
  // |step^k| moves monotonically toward |target|; stop once it overshoots.
  mpq_class acc = step;
  for (long k = 1;; ++k) {
    if (acc == target) return verify(dir * k);
    if (target_big ? abs(acc) > abs(target) : abs(acc) < abs(target)) return std::nullopt;
    acc *= step;
  }
}

std::optional<long> GwaSpec::orbit_shift(const Poly& z_in, const Poly& w_in) const {
  if (!(z_in.field() == field_) || !(w_in.field() == field_))
    throw MathError(ErrorKind::FieldMismatch, "orbit_shift over a different field");
  if (z_in.degree() != w_in.degree() || z_in.is_constant()) return std::nullopt;
  const Poly z = normalize_monic(z_in).second, w = normalize_monic(w_in).second;
  if (z == w) return 0;
  if (is_identity()) return std::nullopt;
  if (!sigma_.is_classical()) return quantum_shift(z, w);
  const int d = z.degree();
  // sigma^k shifts every root by k*c, so the root sum moves by d*k*c.
  const Scalar diff = z.coeff(d - 1) - w.coeff(d - 1);
  if (field_.is_rational()) {
    const mpq_class k = (diff / (Scalar(field_, d) * sigma_.param)).to_rational();
    if (k.get_den() != 1 || !k.get_num().fits_slong_p()) return std::nullopt;
    const long kl = k.get_num().get_si();
    if (shift_monic(z, kl) == w) return kl;
    return std::nullopt;
  }
  const auto p = static_cast<long>(field_.characteristic());
  if (d % p != 0) {
    const long k = static_cast<long>((diff / (Scalar(field_, d) * sigma_.param)).residue());
    if (shift_monic(z, k) == w) return k;
    return std::nullopt;
  }
  for (long k = 1; k < p; ++k)
    if (shift_monic(z, k) == w) return k;
  return std::nullopt;
}

bool GwaSpec::preceq(const Poly& z, const Poly& w) const {
  auto k = orbit_shift(z, w);
  return k && *k >= 0;
}

std::optional<long> GwaSpec::orbit_size(const Poly& z) const {
  if (is_identity()) return 1;
  auto order = sigma_order();
  if (!sigma_.is_classical() && z == Poly::variable(field_)) return 1;
  if (!order) return std::nullopt;
  for (long k = 1; k < *order; ++k)
    if (*order % k == 0 && shift_monic(z, k) == z) return k;
  return *order;
}

bool GwaSpec::all_orbits_infinite() const {
  return sigma_.is_classical() && field_.is_rational() && !sigma_.param.is_zero();
}

SimpleRingCertificate GwaSpec::is_simple_ring() const {
  SimpleRingCertificate cert;
  if (is_identity()) {
    cert.reason = "sigma is the identity";
    return cert;
  }
  if (auto order = sigma_order()) {
    cert.reason = "sigma has finite order " + std::to_string(*order);
    return cert;
  }
  if (!sigma_.is_classical()) {
    cert.reason = "the ideal <h> is sigma-stable";
    return cert;
  }
  for (const auto& z : a_.factors())
    for (const auto& w : a_.factors()) {
      auto k = orbit_shift(z.poly, w.poly);
      if (k && *k >= 1) {
        cert.reason = "gcd(a, sigma^n(a)) is not a unit";
        cert.witness = {z.poly, w.poly};
        cert.shift = *k;
        return cert;
      }
    }
  cert.simple = true;
  cert.reason = "sigma has infinite order, no sigma-ideals, R = Ra + R sigma^n(a) for n >= 1";
  return cert;
}

CenterReport GwaSpec::center_report() const {
  CenterReport r;
  const Poly h = Poly::variable(field_);
  if (is_identity()) {
    r.invariants = "R (sigma is the identity)";
    r.witness = h;
    r.note = "every element is sigma-invariant";
    return r;
  }
  if (sigma_.is_classical()) {
    if (field_.is_rational()) {
      r.invariants = "F (constants)";
      r.center_is_field = true;
      r.finite_length_possible = true;
      r.note = "R^{<inf} consists of constants";
      return r;
    }
    const auto p = field_.characteristic();
    const Poly inv = h.pow(static_cast<unsigned>(p)) - h * sigma_.param.pow(static_cast<long>(p) - 1);
    r.invariants = field_.to_string() + "[" + inv.to_string() + "]";
    r.witness = inv;
    r.note = "sigma-invariant nonunit";
    return r;
  }
  if (auto order = sigma_order()) {
    r.invariants = field_.to_string() + "[h^" + std::to_string(*order) + "]";
  } else {
    r.invariants = "F (constants)";
    r.center_is_field = true;
  }
  r.witness = h;
  r.note = "sigma(h) = " + sigma_.param.to_string() + "*h with a unit factor";
  return r;
}

std::string GwaSpec::to_string() const {
  std::ostringstream os;
  os << field_.to_string() << "[h], sigma(h) = ";
  if (sigma_.is_classical()) {
    os << "h - (" << sigma_.param << ")";
  } else {
    os << sigma_.param << "*h";
  }
  os << ", a = " << a_.to_string();
  return os.str();
}

}  // namespace gwa
