#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwa/factored_element.hpp"
#include "gwa/irreducible.hpp"

namespace gwa {

/// sigma(h) = h - c (classical) or sigma(h) = gamma*h (quantum).
struct Sigma {
  enum class Kind { Classical, Quantum };
  Kind kind = Kind::Classical;
  Scalar param;  // c or gamma

  static Sigma classical(Scalar shift) { return {Kind::Classical, std::move(shift)}; }
  static Sigma quantum(Scalar gamma) { return {Kind::Quantum, std::move(gamma)}; }

  bool is_classical() const { return kind == Kind::Classical; }
  friend bool operator==(const Sigma&, const Sigma&) = default;
};

/// Status of a factor of a whose irreducibility is not proven by the library.
struct FactorNote {
  Poly poly;
  Irreducibility status = Irreducibility::Yes;
  bool asserted = false;
};

struct SimpleRingCertificate {
  bool simple = false;
  std::string reason;
  /// For the failing coprimality condition: sigma^shift(first) ~ second.
  std::optional<std::pair<Poly, Poly>> witness;
  long shift = 0;
};

struct CenterReport {
  std::string invariants;  // description of R^sigma
  bool center_is_field = false;
  bool finite_length_possible = false;
  std::optional<Poly> witness;  // element of R^{<inf} that is not a unit
  std::string note;
};

/// The algebra A = F[h](sigma, a).
class GwaSpec {
 public:
  /// Validates a != 0, gamma != 0 and irreducibility of every factor of a
  /// unless flagged as asserted.
  GwaSpec(Field field, Sigma sigma, FactoredElement a, const std::vector<bool>& asserted = {});

  Field field() const noexcept { return field_; }
  const Sigma& sigma() const noexcept { return sigma_; }
  const FactoredElement& a() const noexcept { return a_; }
  Poly a_poly() const { return a_.expand(); }
  const std::vector<FactorNote>& notes() const noexcept { return notes_; }
  /// sigma is the identity (c = 0 or gamma = 1).
  bool is_identity() const;

  Poly apply_sigma(const Poly& p, long k) const;
  FactoredElement apply_sigma(const FactoredElement& f, long k) const;

  /// k with sigma^k(z) ~ w: unique on infinite orbits, least k >= 0 on finite ones.
  std::optional<long> orbit_shift(const Poly& z, const Poly& w) const;
  /// z precedes-or-equals w: some k >= 0 with sigma^k(z) ~ w.
  bool preceq(const Poly& z, const Poly& w) const;
  /// nullopt means infinite.
  std::optional<long> orbit_size(const Poly& z) const;
  /// Order of sigma as an automorphism of F[h]; nullopt means infinite.
  std::optional<long> sigma_order() const;
  bool all_orbits_infinite() const;
  SimpleRingCertificate is_simple_ring() const;
  CenterReport center_report() const;

  /// Monic part of sigma^k(z).
  Poly shift_monic(const Poly& z, long k) const { return normalize_monic(apply_sigma(z, k)).second; }

  /// Same field, sigma and a (up to the stored factorization).
  friend bool operator==(const GwaSpec& a, const GwaSpec& b) {
    return a.field_ == b.field_ && a.sigma_ == b.sigma_ && a.a_ == b.a_;
  }

  std::string to_string() const;

 private:
  std::optional<long> quantum_shift(const Poly& z, const Poly& w) const;

  Field field_;
  Sigma sigma_;
  FactoredElement a_;
  std::vector<FactorNote> notes_;
};

}  // namespace gwa
