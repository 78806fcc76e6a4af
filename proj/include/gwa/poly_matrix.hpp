#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gwa/gwa.hpp"

namespace gwa {

using PolyVector = std::vector<Poly>;

/// Square matrix over F[h], row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field f, std::size_t n);
  /// Throws DimensionMismatch unless the rows form a square matrix.
  static PolyMatrix from_rows(Field f, const std::vector<std::vector<Poly>>& rows);
  static PolyMatrix identity(Field f, std::size_t n);
  static PolyMatrix diagonal(const std::vector<Poly>& d);

  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return n_; }
  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const Poly& r) const;
  PolyVector operator*(const PolyVector& v) const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  PolyMatrix map(const std::function<Poly(const Poly&)>& f) const;
  PolyMatrix sigma(const GwaSpec& spec, long k) const;
  bool is_diagonal() const;

  Poly det() const;
  /// adj(M) with M * adj(M) = det(M) I.
  PolyMatrix adjugate() const;
  PolyMatrix minor_matrix(std::size_t row, std::size_t col) const;

  std::string to_string() const;

 private:
  void check_same(const PolyMatrix& o) const;

  Field field_;
  std::size_t n_ = 0;
  std::vector<Poly> e_;
};

PolyVector sigma(const PolyVector& v, const GwaSpec& spec, long k);

struct SmithForm {
  PolyMatrix s, d, t;          // M = s * d * t
  std::vector<Poly> invariants; // monic d_1 | d_2 | ..., zero for rank deficiency
};

/// Least-degree pivoting with gcd-driven row and column reduction.
SmithForm smith_normal_form(const PolyMatrix& m);

}  // namespace gwa
