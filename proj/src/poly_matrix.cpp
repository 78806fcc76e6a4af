#include "gwa/poly_matrix.hpp"

#include <sstream>

#include "gwa/error.hpp"

namespace gwa {

PolyMatrix::PolyMatrix(Field f, std::size_t n) : field_(f), n_(n), e_(n * n, Poly(f)) {}

PolyMatrix PolyMatrix::from_rows(Field f, const std::vector<std::vector<Poly>>& rows) {
  PolyMatrix m(f, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw MathError(ErrorKind::DimensionMismatch, "matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!(rows[i][j].field() == f)) throw MathError(ErrorKind::FieldMismatch, "matrix entry over another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::identity(Field f, std::size_t n) {
  PolyMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(f, 1);
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& d) {
  PolyMatrix m(d.front().field(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

void PolyMatrix::check_same(const PolyMatrix& o) const {
  if (n_ != o.n_) throw MathError(ErrorKind::DimensionMismatch, "matrix sizes differ");
  if (!(field_ == o.field_)) throw MathError(ErrorKind::FieldMismatch, "matrices over different fields");
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  check_same(o);
  PolyMatrix r(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  check_same(o);
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  check_same(o);
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator*(const Poly& s) const {
  PolyMatrix r = *this;
  for (auto& e : r.e_) e *= s;
  return r;
}

PolyVector PolyMatrix::operator*(const PolyVector& v) const {
  if (v.size() != n_) throw MathError(ErrorKind::DimensionMismatch, "vector length differs from matrix size");
  PolyVector out(n_, Poly(field_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& f) const {
  PolyMatrix r = *this;
  for (auto& e : r.e_) e = f(e);
  return r;
}

PolyMatrix PolyMatrix::sigma(const GwaSpec& spec, long k) const {
  return map([&](const Poly& p) { return spec.apply_sigma(p, k); });
}

bool PolyMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Poly PolyMatrix::det() const {
  if (n_ == 0) return Poly::constant(field_, 1);
  // Fraction-free Bareiss elimination.
  PolyMatrix m = *this;
  Poly prev = Poly::constant(field_, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n_ && m(r, k).is_zero()) ++r;
      if (r == n_) return Poly(field_);
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n_; ++i)
      for (std::size_t j = k + 1; j < n_; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  Poly d = m(n_ - 1, n_ - 1);
  return negate ? -d : d;
}

PolyMatrix PolyMatrix::minor_matrix(std::size_t row, std::size_t col) const {
  PolyMatrix r(field_, n_ - 1);
  for (std::size_t i = 0, ri = 0; i < n_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, rj = 0; j < n_; ++j) {
      if (j == col) continue;
      r(ri, rj++) = (*this)(i, j);
    }
    ++ri;
  }
  return r;
}

PolyMatrix PolyMatrix::adjugate() const {
  PolyMatrix r(field_, n_);
  if (n_ == 1) {
    r(0, 0) = Poly::constant(field_, 1);
    return r;
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Poly c = minor_matrix(i, j).det();
      r(j, i) = (i + j) % 2 ? -c : c;
    }
  return r;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? "; " : "") << "[";
    for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyVector sigma(const PolyVector& v, const GwaSpec& spec, long k) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(spec.apply_sigma(p, k));
  return out;
}

namespace {

// Keeps m0 = s * cur * t while elementary operations are applied to cur.
struct Reducer {
  PolyMatrix s, cur, t;
  std::size_t n;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(cur(i, k), cur(j, k));
      std::swap(s(k, i), s(k, j));
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(cur(k, i), cur(k, j));
      std::swap(t(i, k), t(j, k));
    }
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Poly& c) {
    for (std::size_t k = 0; k < n; ++k) {
      cur(i, k) += c * cur(j, k);
      s(k, j) -= c * s(k, i);
    }
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Poly& c) {
    for (std::size_t k = 0; k < n; ++k) {
      cur(k, i) += c * cur(k, j);
      t(j, k) -= c * t(i, k);
    }
  }
  void scale_row(std::size_t i, const Scalar& u) {
    const Scalar inv = u.inverse();
    for (std::size_t k = 0; k < n; ++k) {
      cur(i, k) *= u;
      s(k, i) *= inv;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& m) {
  const Field f = m.field();
  const std::size_t n = m.size();
  Reducer r{PolyMatrix::identity(f, n), m, PolyMatrix::identity(f, n), n};
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Poly& e = r.cur(i, j);
          if (e.is_zero()) continue;
          if (pi == n || e.degree() < r.cur(pi, pj).degree()) {
            pi = i;
            pj = j;
          }
        }
      if (pi == n) break;
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (r.cur(i, t).is_zero()) continue;
        auto [q, rem] = divmod(r.cur(i, t), r.cur(t, t));
        r.add_row(i, t, -q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (r.cur(t, j).is_zero()) continue;
        auto [q, rem] = divmod(r.cur(t, j), r.cur(t, t));
        r.add_col(j, t, -q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < n && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(r.cur(t, t), r.cur(i, j))) {
            r.add_row(t, i, Poly::constant(f, 1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!r.cur(t, t).is_zero()) r.scale_row(t, r.cur(t, t).leading().inverse());
  }
  SmithForm out{r.s, r.cur, r.t, {}};
  for (std::size_t i = 0; i < n; ++i) out.invariants.push_back(out.d(i, i));
  return out;
}

}  // namespace gwa
