#pragma once

#include <cstdint>

#include "gwa/poly.hpp"

namespace gwa {

enum class Irreducibility { Yes, No, Unverified };

const char* to_string(Irreducibility v);

/// Budget for the bounded integer factor search over Q (degree >= 4).
inline constexpr std::uint64_t kDefaultKroneckerLimit = 100000;

/// Over F_p: distinct-degree test, always decisive. Over Q: rational roots
/// for degree <= 3, Kronecker search afterwards (may give up).
Irreducibility is_irreducible(const Poly& p, std::uint64_t work_limit = kDefaultKroneckerLimit);

}  // namespace gwa
