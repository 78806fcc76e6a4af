#include "gwa/factored.hpp"

#include <algorithm>

#include "gwa/error.hpp"

namespace gwa {

Poly orbit_rep(const std::vector<Poly>& members, const GwaSpec& spec) {
  Poly best = members.front();
  const bool finite = spec.orbit_size(best).has_value();
  for (const auto& m : members) {
    if (finite ? m < best : spec.orbit_shift(m, best).value_or(0) > 0) best = m;
  }
  return best;
}

std::vector<OrbitPart> orbit_partition(const FactoredElement& f, const GwaSpec& spec) {
  std::vector<std::vector<Factor>> groups;
  for (const auto& fac : f.factors()) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const std::vector<Factor>& g) {
      return spec.orbit_shift(g.front().poly, fac.poly).has_value();
    });
    if (it == groups.end()) {
      groups.push_back({fac});
    } else {
      it->push_back(fac);
    }
  }
  std::vector<OrbitPart> out;
  for (auto& g : groups) {
    std::vector<Poly> members;
    for (const auto& fac : g) members.push_back(fac.poly);
    Poly rep = orbit_rep(members, spec);
    auto size = spec.orbit_size(rep);
    out.push_back({std::move(rep), FactoredElement(Scalar(f.field(), 1), std::move(g)), size});
  }
  std::sort(out.begin(), out.end(), [](const OrbitPart& a, const OrbitPart& b) { return a.rep < b.rep; });
  return out;
}

long Profile::at(long k) const {
  if (cycle) k = ((k % *cycle) + *cycle) % *cycle;
  auto it = values.find(k);
  return it == values.end() ? 0 : it->second;
}

namespace {

Profile build_profile(const FactoredElement& f, const Poly& rep, const GwaSpec& spec, bool strict) {
  Profile prof{rep, spec.orbit_size(rep), {}};
  for (const auto& fac : f.factors()) {
    auto k = spec.orbit_shift(rep, fac.poly);
    if (!k) {
      if (strict)
        throw MathError(ErrorKind::FactorOutsideOrbit, fac.poly.to_string() + " is not in the orbit of " + rep.to_string());
      continue;
    }
    prof.values[*k] += fac.mult;
  }
  return prof;
}

}  // namespace

Profile profile_of(const FactoredElement& f, const Poly& rep, const GwaSpec& spec) {
  return build_profile(f, rep, spec, true);
}

Profile restricted_profile(const FactoredElement& f, const Poly& rep, const GwaSpec& spec) {
  return build_profile(f, rep, spec, false);
}

FactoredElement from_profile(const Profile& p, const GwaSpec& spec) {
  std::vector<Factor> fs;
  for (const auto& [k, v] : p.values) {
    if (v < 0) throw MathError(ErrorKind::InvalidSpec, "negative profile value");
    if (v > 0) fs.push_back({spec.shift_monic(p.rep, k), static_cast<int>(v)});
  }
  return FactoredElement(Scalar(spec.field(), 1), std::move(fs));
}

std::pair<Profile, Profile> delta_nabla(const Profile& p) {
  Profile delta{p.rep, p.cycle, {}}, nabla{p.rep, p.cycle, {}};
  std::vector<long> keys;
  if (p.cycle) {
    for (long k = 0; k < *p.cycle; ++k) keys.push_back(k);
  } else {
    for (const auto& [k, v] : p.values) {
      keys.push_back(k - 1);
      keys.push_back(k);
      keys.push_back(k + 1);
    }
  }
  for (long k : keys) {
    const long d = p.at(k + 1) - p.at(k);
    const long n = p.at(k) - p.at(k - 1);
    if (d != 0) delta.values[k] = d;
    if (n != 0) nabla.values[k] = n;
  }
  return {delta, nabla};
}

ChainProduct chain_product(const Poly& q0, const Poly& p0, const GwaSpec& spec) {
  auto n = spec.orbit_shift(q0, p0);
  if (!n || *n < 0)
    throw MathError(ErrorKind::NotComparable, q0.to_string() + " does not precede " + p0.to_string());
  ChainProduct c{q0, p0, *n, true, FactoredElement::one(spec.field())};
  if (auto size = spec.orbit_size(q0)) c.basic = *n < *size - 1;
  std::vector<Factor> fs;
  for (long i = 0; i <= *n; ++i) fs.push_back({spec.shift_monic(q0, i), 1});
  c.product = FactoredElement(Scalar(spec.field(), 1), std::move(fs));
  return c;
}

std::vector<OmegaPair> omega_pairs(const FactoredElement& p, const FactoredElement& q, const GwaSpec& spec) {
  std::vector<OmegaPair> out;
  for (const auto& z : q.factors())
    for (const auto& w : p.factors()) {
      auto k = spec.orbit_shift(z.poly, w.poly);
      if (k && *k >= 0) out.push_back({z.poly, w.poly, *k, static_cast<long>(z.mult) * w.mult});
    }
  return out;
}

long omega_size(const std::vector<OmegaPair>& pairs) {
  long n = 0;
  for (const auto& pr : pairs) n += pr.count;
  return n;
}

}  // namespace gwa
