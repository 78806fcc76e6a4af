#include "gwa/rank1.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gwa/error.hpp"

namespace gwa {

Rank1Module::Rank1Module(GwaSpec spec, FactoredElement p)
    : spec_(std::move(spec)), p_(std::move(p)), q_(FactoredElement::one(spec_.field())) {
  if (!(p_.field() == spec_.field())) throw MathError(ErrorKind::FieldMismatch, "parameter over another field");
  if (!p_.divides(spec_.a())) throw MathError(ErrorKind::NotADivisor, p_.to_string() + " does not divide a");
  q_ = spec_.apply_sigma(spec_.a() / p_, 1);
}

Poly Rank1Module::act_x(const Poly& v) const { return spec_.apply_sigma(v, -1) * p_poly(); }

Poly Rank1Module::act_y(const Poly& v) const { return spec_.apply_sigma(v, 1) * q_poly(); }

Poly Rank1Module::act_word(std::string_view word, const Poly& v) const {
  Poly r = v;
  const Poly h = Poly::variable(spec_.field());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'x': r = act_x(r); break;
      case 'y': r = act_y(r); break;
      case 'h': r = h * r; break;
      default: throw MathError(ErrorKind::ParseError, std::string("unknown generator '") + *it + "'");
    }
  }
  return r;
}

Rank1Module make_vp(const GwaSpec& spec, const FactoredElement& p) { return Rank1Module(spec, p); }

const char* to_string(SubmoduleCert::Tag t) {
  switch (t) {
    case SubmoduleCert::Tag::Basic: return "basic";
    case SubmoduleCert::Tag::FullFiniteOrbit: return "full-finite-orbit";
    case SubmoduleCert::Tag::General: return "general";
  }
  return "?";
}

bool is_submodule(const Rank1Module& m, const FactoredElement& g, SubmoduleMethod method) {
  const GwaSpec& spec = m.spec();
  switch (method) {
    case SubmoduleMethod::Multiset:
      return g.divides(spec.apply_sigma(g, -1) * m.p()) && g.divides(spec.apply_sigma(g, 1) * m.q());
    case SubmoduleMethod::Profile:
      for (const auto& part : orbit_partition(g, spec)) {
        const Profile gbar = profile_of(part.part, part.rep, spec);
        const Profile pbar = restricted_profile(m.p(), part.rep, spec);
        const Profile qbar = restricted_profile(m.q(), part.rep, spec);
        const auto [delta, nabla] = delta_nabla(gbar);
        for (const auto& [k, d] : delta.values)
          if (pbar.at(k) < -d) return false;
        for (const auto& [k, n] : nabla.values)
          if (qbar.at(k) < n) return false;
      }
      return true;
    case SubmoduleMethod::Divisibility:
      return is_submodule(m, g.expand());
  }
  return false;
}

bool is_submodule(const Rank1Module& m, const Poly& g) {
  if (g.is_zero()) throw MathError(ErrorKind::ZeroPolynomial, "zero generator");
  const GwaSpec& spec = m.spec();
  return divides(g, spec.apply_sigma(g, -1) * m.p_poly()) && divides(g, spec.apply_sigma(g, 1) * m.q_poly());
}

std::pair<FactoredElement, FactoredElement> induced_parameters(const Rank1Module& m, const FactoredElement& g) {
  const GwaSpec& spec = m.spec();
  return {spec.apply_sigma(g, -1) * m.p() / g, spec.apply_sigma(g, 1) * m.q() / g};
}

namespace {

FactoredElement translates(const Poly& rep, long start, long len, const GwaSpec& spec) {
  std::vector<Factor> fs;
  for (long i = 0; i < len; ++i) fs.push_back({spec.shift_monic(rep, start + i), 1});
  return FactoredElement(Scalar(spec.field(), 1), std::move(fs));
}

void push_run(std::vector<Piece>& out, const Poly& rep, long start, long len, const GwaSpec& spec) {
  out.push_back({Piece::Kind::Chain, spec.shift_monic(rep, start), len, translates(rep, start, len, spec)});
}

}  // namespace

std::vector<Piece> decompose(const FactoredElement& g, const GwaSpec& spec) {
  std::vector<Piece> out;
  for (const auto& part : orbit_partition(g, spec)) {
    const Profile prof = profile_of(part.part, part.rep, spec);
    long top = 0;
    for (const auto& [k, v] : prof.values) top = std::max(top, v);
    for (long t = 1; t <= top; ++t) {
      if (prof.cycle) {
        const long n = *prof.cycle;
        long gap = -1;
        for (long k = 0; k < n && gap < 0; ++k)
          if (prof.at(k) < t) gap = k;
        if (gap < 0) {
          out.push_back({Piece::Kind::FullOrbit, part.rep, n, translates(part.rep, 0, n, spec)});
          continue;
        }
        long run_start = 0, run_len = 0;
        for (long i = 1; i <= n; ++i) {
          const long k = (gap + i) % n;
          if (prof.at(k) >= t) {
            if (run_len++ == 0) run_start = k;
          } else if (run_len > 0) {
            push_run(out, part.rep, run_start, run_len, spec);
            run_len = 0;
          }
        }
        continue;
      }
      long run_start = 0, run_len = 0, prev = 0;
      for (const auto& [k, v] : prof.values) {
        if (v < t) continue;
        if (run_len > 0 && k == prev + 1) {
          ++run_len;
        } else {
          if (run_len > 0) push_run(out, part.rep, run_start, run_len, spec);
          run_start = k;
          run_len = 1;
        }
        prev = k;
      }
      if (run_len > 0) push_run(out, part.rep, run_start, run_len, spec);
    }
  }
  return out;
}

namespace {

struct Candidate {
  std::tuple<Poly, long, long> key;  // orbit rep, position of q0, shift
  SubmoduleCert cert;
};

std::vector<Poly> distinct_polys(const FactoredElement& f) {
  std::vector<Poly> out;
  for (const auto& fac : f.factors()) out.push_back(fac.poly);
  return out;
}

WeightData quotient_of(const FactoredElement& g, const GwaSpec& spec) {
  std::vector<Poly> ideals;
  for (const auto& fac : g.factors())
    for (int i = 0; i < fac.mult; ++i) ideals.push_back(fac.poly);
  return weight_data_for(ideals, spec);
}

SubmoduleCert make_cert(const Rank1Module& m, SubmoduleCert::Tag tag, FactoredElement g) {
  SubmoduleCert c;
  c.tag = tag;
  auto [pi, qi] = induced_parameters(m, g);
  c.p_induced = std::move(pi);
  c.q_induced = std::move(qi);
  c.decomposition = decompose(g, m.spec());
  c.quotient = quotient_of(g, m.spec());
  c.g = std::move(g);
  return c;
}

std::vector<Candidate> basic_maximals(const Rank1Module& m) {
  const GwaSpec& spec = m.spec();
  std::vector<Candidate> out;
  const auto ps = distinct_polys(m.p());
  const auto qs = distinct_polys(m.q());
  for (const auto& q0 : qs) {
    std::vector<Poly> orbit_members{q0};
    for (const auto& w : ps)
      if (spec.orbit_shift(q0, w)) orbit_members.push_back(w);
    for (const auto& z : qs)
      if (spec.orbit_shift(q0, z)) orbit_members.push_back(z);
    const Poly rep = orbit_rep(orbit_members, spec);
    const long pos = *spec.orbit_shift(rep, q0);
    for (const auto& p0 : ps) {
      auto n = spec.orbit_shift(q0, p0);
      if (!n || *n < 0) continue;
      ChainProduct chain = chain_product(q0, p0, spec);
      if (!chain.basic) continue;
      bool minimal = true;
      std::vector<bool> in_q(*n + 1), in_p(*n + 1);
      for (long i = 0; i <= *n; ++i) {
        const Poly t = spec.shift_monic(q0, i);
        in_q[i] = m.q().mult(t) > 0;
        in_p[i] = m.p().mult(t) > 0;
      }
      for (long i = 0; i <= *n && minimal; ++i) {
        if (!in_q[i]) continue;
        for (long j = i; j <= *n; ++j)
          if (in_p[j] && j - i < *n) {
            minimal = false;
            break;
          }
      }
      if (!minimal) continue;
      SubmoduleCert cert = make_cert(m, SubmoduleCert::Tag::Basic, chain.product);
      cert.chain = chain;
      out.push_back({{rep, pos, *n}, std::move(cert)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
  return out;
}

std::vector<SubmoduleCert> full_orbit_maximals(const Rank1Module& m, const std::vector<Poly>& probes) {
  const GwaSpec& spec = m.spec();
  std::vector<Poly> seeds = distinct_polys(m.p());
  for (const auto& z : distinct_polys(m.q())) seeds.push_back(z);
  if (!spec.sigma().is_classical()) seeds.push_back(Poly::variable(spec.field()));
  for (const auto& z : probes) seeds.push_back(normalize_monic(z).second);

  std::vector<std::vector<Poly>> orbits;
  for (const auto& z : seeds) {
    if (!spec.orbit_size(z)) continue;
    bool seen = false;
    for (auto& o : orbits)
      if (spec.orbit_shift(o.front(), z)) {
        o.push_back(z);
        seen = true;
        break;
      }
    if (!seen) orbits.push_back({z});
  }
  std::vector<std::pair<Poly, SubmoduleCert>> found;
  for (const auto& members : orbits) {
    const Poly rep = orbit_rep(members, spec);
    const long len = *spec.orbit_size(rep);
    std::vector<Poly> in_p, in_q;
    for (const auto& w : distinct_polys(m.p()))
      if (spec.orbit_shift(rep, w)) in_p.push_back(w);
    for (const auto& z : distinct_polys(m.q()))
      if (spec.orbit_shift(rep, z)) in_q.push_back(z);
    const bool ok = in_p.empty() || in_q.empty() ||
                    (in_p.size() == 1 && in_q.size() == 1 && spec.orbit_shift(in_q[0], in_p[0]) == len - 1);
    if (!ok) continue;
    found.emplace_back(rep, make_cert(m, SubmoduleCert::Tag::FullFiniteOrbit, translates(rep, 0, len, spec)));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SubmoduleCert> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace

std::vector<SubmoduleCert> maximal_submodules(const Rank1Module& m, const std::vector<Poly>& probes) {
  std::vector<SubmoduleCert> out;
  for (auto& c : basic_maximals(m)) out.push_back(std::move(c.cert));
  for (auto& c : full_orbit_maximals(m, probes)) out.push_back(std::move(c));
  return out;
}

SimplicityResult is_simple(const Rank1Module& m) {
  SimplicityResult r;
  const GwaSpec& spec = m.spec();
  if (!spec.all_orbits_infinite()) {
    r.finite_orbit = Poly::variable(spec.field());
    return r;
  }
  auto pairs = omega_pairs(m.p(), m.q(), spec);
  if (!pairs.empty()) {
    r.pair = pairs.front();
    return r;
  }
  r.simple = true;
  return r;
}

std::vector<SeriesStep> composition_series(const Rank1Module& m) {
  if (!m.spec().all_orbits_infinite())
    throw MathError(ErrorKind::InfiniteLength, "some sigma-orbit in Irr(R) is finite");
  std::vector<SeriesStep> out;
  Rank1Module cur = m;
  Poly generator = Poly::constant(m.spec().field(), 1);
  while (true) {
    auto cands = basic_maximals(cur);
    if (cands.empty()) {
      out.push_back({cur.p(), generator, std::nullopt, std::nullopt});
      return out;
    }
    SubmoduleCert& c = cands.front().cert;
    out.push_back({cur.p(), generator, c.chain, c.quotient});
    generator *= c.g.expand();
    cur = Rank1Module(cur.spec(), c.p_induced);
  }
}

std::optional<long> length(const Rank1Module& m) {
  if (!m.spec().all_orbits_infinite()) return std::nullopt;
  return static_cast<long>(composition_series(m).size());
}

FactoredElement socle(const Rank1Module& m, SocleMethod method) {
  const GwaSpec& spec = m.spec();
  if (!spec.all_orbits_infinite())
    throw MathError(ErrorKind::InfiniteLength, "some sigma-orbit in Irr(R) is finite");
  if (method == SocleMethod::Iterate) return composition_series(m).back().p;
  std::vector<Factor> out;
  for (const auto& part : orbit_partition((m.p() * m.q()).monic(), spec)) {
    std::vector<long> marks;
    long p_count = 0;
    for (const auto& w : m.p().factors())
      if (auto k = spec.orbit_shift(part.rep, w.poly)) {
        marks.insert(marks.end(), w.mult, *k);
        p_count += w.mult;
      }
    for (const auto& z : m.q().factors())
      if (auto k = spec.orbit_shift(part.rep, z.poly)) marks.insert(marks.end(), z.mult, *k - 1);
    std::sort(marks.begin(), marks.end());
    for (long i = 0; i < p_count; ++i) out.push_back({spec.shift_monic(part.rep, marks[i]), 1});
  }
  return FactoredElement(m.p().unit(), std::move(out));
}

namespace {

// Basis of the null space of a dense matrix over a field, in reduced form.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> a, std::size_t cols, Field f) {
  std::vector<long> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    const Scalar inv = a[row][c].inverse();
    for (auto& e : a[row]) e *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Scalar factor = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= factor * a[row][k];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++row;
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<long>(free)) != pivot_col.end()) continue;
    std::vector<Scalar> v(cols, Scalar(f));
    v[free] = Scalar(f, 1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

HomResult hom_basis(const Rank1Module& src, const Rank1Module& dst, int max_deg) {
  if (!(src.spec() == dst.spec())) throw MathError(ErrorKind::SpecMismatch, "modules over different algebras");
  if (max_deg < 0) throw MathError(ErrorKind::InvalidSpec, "negative degree bound");
  const GwaSpec& spec = src.spec();
  const Field f = spec.field();
  const Poly ps = src.p_poly(), pd = dst.p_poly();
  const Poly h = Poly::variable(f);
  const std::size_t cols = static_cast<std::size_t>(max_deg) + 1;
  const std::size_t rows = cols + static_cast<std::size_t>(std::max(ps.degree(), pd.degree()));
  std::vector<std::vector<Scalar>> mat(rows, std::vector<Scalar>(cols, Scalar(f)));
  for (std::size_t j = 0; j < cols; ++j) {
    const Poly mono = h.pow(static_cast<unsigned>(j));
    const Poly col = spec.apply_sigma(mono, -1) * pd - ps * mono;
    for (int i = 0; i <= col.degree(); ++i) mat[i][j] = col.coeff(i);
  }
  HomResult r;
  for (const auto& v : nullspace(std::move(mat), cols, f))
    r.basis.push_back(normalize_monic(Poly(f, v)).second);
  r.isomorphic = ps == pd;
  r.cross_checked = true;
  for (const auto& v : r.basis) {
    if (!is_submodule(dst, v) || exact_div(spec.apply_sigma(v, -1) * pd, v) != ps) r.cross_checked = false;
  }
  return r;
}

Rank1Module unit_twist(const Rank1Module& m, const Scalar& u) {
  if (u.is_zero()) throw MathError(ErrorKind::ZeroUnit, "twist by zero");
  return Rank1Module(m.spec(), m.p().with_unit(m.p().unit() * u));
}

Filtration filtration_steps(const Rank1Module& m, int depth, const std::vector<Poly>& probes) {
  if (depth < 1) throw MathError(ErrorKind::InvalidSpec, "depth must be positive");
  Filtration out;
  out.params.push_back(m.p());
  out.generators.push_back(Poly::constant(m.spec().field(), 1));
  Rank1Module cur = m;
  for (int step = 0; step < depth; ++step) {
    auto maxs = maximal_submodules(cur, probes);
    if (maxs.empty()) break;
    SubmoduleCert c = std::move(maxs.front());
    out.generators.push_back(out.generators.back() * c.g.expand());
    cur = Rank1Module(cur.spec(), c.p_induced);
    out.steps.push_back(std::move(c));
    for (std::size_t i = 0; i < out.params.size() && !out.period; ++i)
      if (out.params[i] == cur.p()) out.period = std::make_pair(i, out.params.size() - i);
    out.params.push_back(cur.p());
  }
  return out;
}

}  // namespace gwa
