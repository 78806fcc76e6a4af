#include "gwa/json_io.hpp"

#include <algorithm>

#include "gwa/error.hpp"

namespace gwa {

namespace {

[[noreturn]] void bad(const std::string& what) { throw MathError(ErrorKind::ParseError, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Field field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("Fp")) {
    const json& p = j.at("Fp");
    if (p.is_number_unsigned()) return Field::prime(p.get<std::uint64_t>());
    if (p.is_string()) {
      try {
        return Field::prime(std::stoull(p.get<std::string>()));
      } catch (const std::logic_error&) {
        bad("bad characteristic " + p.dump());
      }
    }
  }
  bad("field must be \"Q\" or {\"Fp\": p}, got " + j.dump());
}

json to_json(Field f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

Scalar scalar_from_json(Field f, const json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  bad("expected a scalar, got " + j.dump());
}

Poly poly_from_json(Field f, const json& j) {
  if (!j.is_array()) bad("expected a coefficient array, got " + j.dump());
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(f, e));
  return Poly(f, std::move(c));
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

FactoredElement factored_from_json(Field f, const json& j, std::vector<bool>* asserted) {
  const Scalar unit = j.contains("unit") ? scalar_from_json(f, j.at("unit")) : Scalar(f, 1);
  const json& fs = member(j, "factors");
  if (!fs.is_array()) bad("\"factors\" must be an array");
  std::vector<std::pair<Poly, int>> raw;
  std::vector<Poly> flagged;
  for (const auto& e : fs) {
    Poly z = poly_from_json(f, member(e, "poly"));
    const int mult = e.contains("mult") ? e.at("mult").get<int>() : 1;
    if (e.value("asserted", false) && !z.is_constant()) flagged.push_back(normalize_monic(z).second);
    raw.emplace_back(std::move(z), mult);
  }
  FactoredElement out = FactoredElement::from_polys(unit, raw);
  if (asserted) {
    asserted->clear();
    for (const auto& fac : out.factors())
      asserted->push_back(std::find(flagged.begin(), flagged.end(), fac.poly) != flagged.end());
  }
  return out;
}

json to_json(const FactoredElement& f) {
  json fs = json::array();
  for (const auto& fac : f.factors()) fs.push_back({{"poly", to_json(fac.poly)}, {"mult", fac.mult}});
  return {{"unit", f.unit().to_string()}, {"factors", fs}, {"display", f.to_string()}};
}

GwaSpec spec_from_json(const json& j) {
  try {
    const Field f = field_from_json(member(j, "field"));
    const json& s = member(j, "sigma");
    Sigma sigma;
    if (s.contains("classical"))
      sigma = Sigma::classical(scalar_from_json(f, member(s.at("classical"), "shift")));
    else if (s.contains("quantum"))
      sigma = Sigma::quantum(scalar_from_json(f, member(s.at("quantum"), "gamma")));
    else
      bad("sigma must be classical or quantum");
    std::vector<bool> asserted;
    FactoredElement a = factored_from_json(f, member(j, "a"), &asserted);
    return GwaSpec(f, sigma, std::move(a), asserted);
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json to_json(const GwaSpec& spec) {
  json sigma = spec.sigma().is_classical()
                   ? json{{"classical", {{"shift", spec.sigma().param.to_string()}}}}
                   : json{{"quantum", {{"gamma", spec.sigma().param.to_string()}}}};
  json fs = json::array();
  for (std::size_t i = 0; i < spec.a().factors().size(); ++i) {
    const auto& fac = spec.a().factors()[i];
    fs.push_back({{"poly", to_json(fac.poly)}, {"mult", fac.mult}, {"asserted", spec.notes()[i].asserted}});
  }
  return {{"field", to_json(spec.field())},
          {"sigma", sigma},
          {"a", {{"unit", spec.a().unit().to_string()}, {"factors", fs}}}};
}

FactoredElement divisor_from_json(const GwaSpec& spec, const json& j) {
  const Field f = spec.field();
  if (j.is_object()) {
    FactoredElement p = factored_from_json(f, j);
    if (!p.divides(spec.a())) throw MathError(ErrorKind::NotADivisor, p.to_string() + " does not divide a");
    return p;
  }
  Poly rest = poly_from_json(f, j);
  if (rest.is_zero()) throw MathError(ErrorKind::ZeroPolynomial, "zero divisor");
  std::vector<Factor> fs;
  for (const auto& fac : spec.a().factors()) {
    int m = 0;
    while (m < fac.mult && divides(fac.poly, rest)) {
      rest = exact_div(rest, fac.poly);
      ++m;
    }
    if (m > 0) fs.push_back({fac.poly, m});
  }
  if (!rest.is_constant()) throw MathError(ErrorKind::NotADivisor, poly_from_json(f, j).to_string() + " does not divide a");
  return FactoredElement(rest.leading(), std::move(fs));
}

PolyMatrix matrix_from_json(Field f, const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("matrix row must be an array");
    std::vector<Poly> row;
    for (const auto& e : r) row.push_back(poly_from_json(f, e));
    rows.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(f, rows);
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Profile& p) {
  json values = json::object();
  for (const auto& [k, v] : p.values) values[std::to_string(k)] = v;
  return {{"rep", to_json(p.rep)}, {"kind", p.cycle ? json{{"cycle", *p.cycle}} : json("line")}, {"values", values}};
}

json to_json(const WeightData& w) {
  json support = json::array();
  for (const auto& e : w.support) support.push_back({{"ideal", to_json(e.ideal)}, {"dim", e.dim}, {"break", e.is_break}});
  return {{"support", support}, {"total_dim", w.total_dim}};
}

json to_json(const OmegaPair& p) {
  return {{"z", to_json(p.z)}, {"w", to_json(p.w)}, {"shift", p.shift}, {"count", p.count}};
}

json to_json(const ChainProduct& c) {
  return {{"q0", to_json(c.q0)}, {"p0", to_json(c.p0)}, {"n", c.n}, {"basic", c.basic}, {"product", to_json(c.product)}};
}

json to_json(const Piece& p) {
  return {{"kind", p.kind == Piece::Kind::Chain ? "chain" : "full_orbit"},
          {"start", to_json(p.start)},
          {"length", p.length},
          {"product", to_json(p.product)}};
}

json to_json(const SubmoduleCert& c) {
  json pieces = json::array();
  for (const auto& p : c.decomposition) pieces.push_back(to_json(p));
  return {{"tag", to_string(c.tag)},
          {"g", to_json(c.g)},
          {"decomposition", pieces},
          {"p_induced", to_json(c.p_induced)},
          {"q_induced", to_json(c.q_induced)},
          {"quotient", to_json(c.quotient)},
          {"chain", c.chain ? to_json(*c.chain) : json(nullptr)}};
}

json to_json(const Check& c) { return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

json to_json(const OracleReport& r) {
  return {{"seed", r.seed},
          {"samples", r.samples},
          {"max_deg", r.max_deg},
          {"passed", r.passed},
          {"counterexample", r.passed ? json(nullptr) : json(r.counterexample)}};
}

}  // namespace gwa
