#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwa/poly_matrix.hpp"

namespace gwa {

/// Rank-n module V_P: x.v = P sigma^-1(v), y.v = Q sigma(v), Q = sigma(a P^-1).
class MatrixModule {
 public:
  /// Throws SingularP when det P = 0 and NotCompatible unless d_n | a.
  MatrixModule(GwaSpec spec, PolyMatrix p);

  const GwaSpec& spec() const noexcept { return spec_; }
  const PolyMatrix& P() const noexcept { return p_; }
  const PolyMatrix& Q() const noexcept { return q_; }
  const std::vector<Poly>& invariant_factors() const noexcept { return invariants_; }
  std::size_t rank() const noexcept { return p_.size(); }

  PolyVector act_x(const PolyVector& v) const;
  PolyVector act_y(const PolyVector& v) const;
  PolyVector act_ring(const Poly& r, const PolyVector& v) const;
  /// Same conventions as Rank1Module::act_word.
  PolyVector act_word(std::string_view word, const PolyVector& v) const;

 private:
  void check(const PolyVector& v) const;

  GwaSpec spec_;
  PolyMatrix p_, q_;
  std::vector<Poly> invariants_;
};

MatrixModule make_matrix_module(const GwaSpec& spec, const PolyMatrix& p);

/// Checks P' sigma^-1(S) = S P; throws NotInvertible unless det S is a
/// nonzero constant.
bool verify_iso_conjugate(const MatrixModule& m, const MatrixModule& m2, const PolyMatrix& s);

/// Companion matrix of t^n - a0: ones below the diagonal, a0 in the corner (1, n).
PolyMatrix companion(const Poly& a0, std::size_t n);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VnConstruction {
  MatrixModule module;
  GwaSpec reduced;             // R(sigma^n, a sigma^-1(a) ... sigma^-(n-1)(a))
  std::vector<Check> checks;
  bool certified = false;
};

/// The simple module of rank n built from a product of minimal factors a0.
/// Throws FiniteOrbit, NotADivisor or NotMinimal.
VnConstruction construct_simple_vn(const GwaSpec& spec, const FactoredElement& a0, std::size_t n);

/// The algebra for sl2 quotients: sigma(h) = h - 2, a = -(1/4)(h + b)(h - b + 2).
GwaSpec sl2_spec(const Scalar& b);

struct Sl2Family {
  MatrixModule module;
  Scalar b;
  Scalar chi;  // (1/4) b (b - 2)
  std::vector<Check> checks;

  PolyVector e(const PolyVector& v) const;
  PolyVector f(const PolyVector& v) const;
  PolyVector h(const PolyVector& v) const;
  PolyVector casimir(const PolyVector& v) const;  // fe + (1/4) h (h + 2)
};

/// Builds e, f, h on F[t]^n and verifies the sl2 relations and the Casimir
/// scalar on monomial vectors t^k e_i, k <= 6.
Sl2Family construct_sl2_family(const Scalar& b, std::size_t n);

struct SetSolution {
  std::vector<long> s, t;
};

/// {j} + (S - n) + T = {k} + S + (T - n) as multisets.
std::optional<SetSolution> solve_set_equation(long j, long k, long n);
/// Exhaustive search over multisets of size <= max_size with values in
/// [-range, range].
bool brute_set_equation(long j, long k, long n, int max_size, long range);
bool check_set_equation(long j, long k, long n, const SetSolution& sol);

}  // namespace gwa
