#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwa/factored.hpp"
#include "gwa/weight_data.hpp"

namespace gwa {

/// The module V_p = R with x.r = sigma^-1(r) p and y.r = sigma(r) q,
/// q = sigma(a / p).
class Rank1Module {
 public:
  /// Throws NotADivisor unless p | a.
  Rank1Module(GwaSpec spec, FactoredElement p);

  const GwaSpec& spec() const noexcept { return spec_; }
  const FactoredElement& p() const noexcept { return p_; }
  const FactoredElement& q() const noexcept { return q_; }
  Poly p_poly() const { return p_.expand(); }
  Poly q_poly() const { return q_.expand(); }

  Poly act_x(const Poly& v) const;
  Poly act_y(const Poly& v) const;
  Poly act_ring(const Poly& r, const Poly& v) const { return r * v; }
  /// Letters x, y, h; the word is a product in A, so the last letter acts first.
  Poly act_word(std::string_view word, const Poly& v) const;

 private:
  GwaSpec spec_;
  FactoredElement p_;
  FactoredElement q_;
};

Rank1Module make_vp(const GwaSpec& spec, const FactoredElement& p);

enum class SubmoduleMethod { Multiset, Profile, Divisibility };

bool is_submodule(const Rank1Module& m, const FactoredElement& g, SubmoduleMethod method);
/// Dense test: g | sigma^-1(g) p and g | sigma(g) q.
bool is_submodule(const Rank1Module& m, const Poly& g);

/// <g> ~ V_{p'} with p' = sigma^-1(g) p / g; also returns q' = sigma(g) q / g.
std::pair<FactoredElement, FactoredElement> induced_parameters(const Rank1Module& m, const FactoredElement& g);

struct Piece {
  enum class Kind { Chain, FullOrbit };
  Kind kind = Kind::Chain;
  Poly start;      // sigma^0 of the piece
  long length = 1; // number of consecutive translates
  FactoredElement product;
};

/// Superlevel-set decomposition of a submodule generator into chain
/// products and full finite orbits.
std::vector<Piece> decompose(const FactoredElement& g, const GwaSpec& spec);

struct SubmoduleCert {
  enum class Tag { Basic, FullFiniteOrbit, General };
  Tag tag = Tag::General;
  FactoredElement g;
  std::vector<Piece> decomposition;
  FactoredElement p_induced;
  FactoredElement q_induced;
  WeightData quotient;  // filled for maximal submodules
  std::optional<ChainProduct> chain;
};

const char* to_string(SubmoduleCert::Tag t);

/// Basic ones first (ordered by position of q0 in its orbit, then shift),
/// then full finite orbits. Empty for a simple module. `probes` adds finite
/// orbits disjoint from the factors of p and q.
std::vector<SubmoduleCert> maximal_submodules(const Rank1Module& m, const std::vector<Poly>& probes = {});

struct SimplicityResult {
  bool simple = false;
  std::optional<OmegaPair> pair;
  std::optional<Poly> finite_orbit;  // representative of a finite orbit
};

SimplicityResult is_simple(const Rank1Module& m);

struct SeriesStep {
  FactoredElement p;        // V_{p} ~ this term of the series
  Poly generator;           // absolute generator inside the original V_p
  std::optional<ChainProduct> chain;  // chain cut out at this step
  std::optional<WeightData> quotient; // this term modulo the next
};

/// Throws InfiniteLength when some orbit is finite.
std::vector<SeriesStep> composition_series(const Rank1Module& m);
std::optional<long> length(const Rank1Module& m);

enum class SocleMethod { Iterate, ColorSwitch };
FactoredElement socle(const Rank1Module& m, SocleMethod method);

struct HomResult {
  std::vector<Poly> basis;  // monic solutions v, r -> r v
  bool isomorphic = false;
  bool cross_checked = false;
};

/// Solutions of sigma^-1(v) p_dst = p_src v with deg v <= max_deg.
HomResult hom_basis(const Rank1Module& src, const Rank1Module& dst, int max_deg);

/// V_{u p}; the twist is x -> u x, y -> y u^-1.
Rank1Module unit_twist(const Rank1Module& m, const Scalar& u);

struct Filtration {
  std::vector<SubmoduleCert> steps;      // relative to the previous term
  std::vector<FactoredElement> params;   // params[0] = p, then each submodule
  std::vector<Poly> generators;          // absolute generators inside V_p
  std::optional<std::pair<std::size_t, std::size_t>> period;  // (start, length)
};

Filtration filtration_steps(const Rank1Module& m, int depth, const std::vector<Poly>& probes = {});

}  // namespace gwa
