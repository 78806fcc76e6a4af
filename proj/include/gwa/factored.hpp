#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gwa/gwa.hpp"

namespace gwa {

struct OrbitPart {
  Poly rep;
  FactoredElement part;        // unit 1
  std::optional<long> size;    // nullopt: infinite orbit
};

/// Representative of the orbit containing all of `members` (which must be
/// non-empty): the preceq-least on an infinite orbit, the least in the
/// canonical order on a finite one.
Poly orbit_rep(const std::vector<Poly>& members, const GwaSpec& spec);

/// Groups the factors of f by sigma-orbit, parts ordered by representative.
std::vector<OrbitPart> orbit_partition(const FactoredElement& f, const GwaSpec& spec);

/// Integer function k -> multiplicity of sigma^k(rep). Values may be signed
/// for difference profiles. Cycle profiles use keys in [0, n).
struct Profile {
  Poly rep;
  std::optional<long> cycle;
  std::map<long, long> values;

  long at(long k) const;
  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Throws FactorOutsideOrbit if some factor of f is not a translate of rep.
Profile profile_of(const FactoredElement& f, const Poly& rep, const GwaSpec& spec);
/// Only the factors of f lying in the orbit of rep.
Profile restricted_profile(const FactoredElement& f, const Poly& rep, const GwaSpec& spec);
/// Monic element with the given (nonnegative) profile.
FactoredElement from_profile(const Profile& p, const GwaSpec& spec);

/// (Delta f)(k) = f(k+1) - f(k), (Nabla f)(k) = f(k) - f(k-1).
std::pair<Profile, Profile> delta_nabla(const Profile& p);

struct ChainProduct {
  Poly q0, p0;
  long n = 0;
  bool basic = true;
  FactoredElement product;
};

/// prod_{i=0}^{n} sigma^i(q0) with sigma^n(q0) ~ p0, n >= 0 least.
ChainProduct chain_product(const Poly& q0, const Poly& p0, const GwaSpec& spec);

struct OmegaPair {
  Poly z;     // factor of q
  Poly w;     // factor of p
  long shift = 0;
  long count = 1;  // mult(z) * mult(w)

  friend bool operator==(const OmegaPair&, const OmegaPair&) = default;
};

std::vector<OmegaPair> omega_pairs(const FactoredElement& p, const FactoredElement& q, const GwaSpec& spec);
long omega_size(const std::vector<OmegaPair>& pairs);

}  // namespace gwa
