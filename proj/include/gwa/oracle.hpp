#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "gwa/rank1.hpp"
#include "gwa/rankn.hpp"

namespace gwa {

/// Normal form sum_d r_d X^d over the R-basis {1, x^d, y^d}: key d > 0 is
/// x^d, d < 0 is y^|d|, coefficients on the left.
class AlgebraElement {
 public:
  explicit AlgebraElement(Field f) : field_(f) {}
  static AlgebraElement ring(const Poly& r);
  static AlgebraElement x(Field f, long power = 1);
  static AlgebraElement y(Field f, long power = 1);

  Field field() const noexcept { return field_; }
  const std::map<long, Poly>& components() const noexcept { return c_; }
  Poly component(long d) const;
  void add(long d, const Poly& r);

  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const;

 private:
  Field field_;
  std::map<long, Poly> c_;
};

/// Product in R(sigma, a) rewritten with x r = sigma^-1(r) x, y r = sigma(r) y,
/// x y = a, y x = sigma(a).
AlgebraElement nf_mul(const AlgebraElement& u, const AlgebraElement& v, const GwaSpec& spec);

Poly act_via_words(const Rank1Module& m, const AlgebraElement& u, const Poly& v);
PolyVector act_via_words(const MatrixModule& m, const AlgebraElement& u, const PolyVector& v);

/// Applies x, y and h for `steps` rounds starting from g and checks every
/// element produced is a multiple of g.
bool brute_submodule_closure(const Rank1Module& m, const Poly& g, int steps);

/// Seeded sampling of exact values.
class Sampler {
 public:
  Sampler(Field f, std::uint64_t seed) : field_(f), rng_(seed) {}
  Scalar scalar(long height = 10);
  Poly poly(int max_deg, long height = 10);
  AlgebraElement element(int max_grade, int max_deg, long height = 10);
  long integer(long lo, long hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  Field field_;
  std::mt19937_64 rng_;
};

struct OracleReport {
  std::uint64_t seed = 0;
  int samples = 0;
  int max_deg = 0;
  bool passed = true;
  std::string counterexample;
};

/// x(sigma(r)v) = r(xv), y(rv) = sigma(r)(yv), x(yv) = av, y(xv) = sigma(a)v on
/// the basis and random vectors, plus agreement of act_via_words with the
/// native action on random products.
OracleReport relation_suite(const Rank1Module& m, std::uint64_t seed, int samples = 20, int max_deg = 8);
OracleReport relation_suite(const MatrixModule& m, std::uint64_t seed, int samples = 10, int max_deg = 6);
/// (uv)w = u(vw) on random triples.
OracleReport associativity_suite(const GwaSpec& spec, std::uint64_t seed, int triples = 30, int max_deg = 4);

}  // namespace gwa
