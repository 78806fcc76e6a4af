#include "gwa/job.hpp"

#include <future>

#include "gwa/diagram.hpp"
#include "gwa/error.hpp"

namespace gwa {

namespace {

struct TaskShape {
  const char* kind;
  std::vector<const char*> required;
};

const std::vector<TaskShape>& shapes() {
  static const std::vector<TaskShape> s = {
      {"analyze_vp", {"p"}},         {"classify_all_divisors", {}}, {"rankn", {"P"}},
      {"construct_vn", {"a0", "n"}}, {"sl2", {"b", "n"}},           {"hom", {"p", "p_prime"}},
      {"diagram", {"p"}},
  };
  return s;
}

json length_json(const std::optional<long>& l) { return l ? json(*l) : json("infinite"); }

json witness_json(const SimplicityResult& s) {
  if (s.pair) return {{"omega_pair", to_json(*s.pair)}};
  if (s.finite_orbit) return {{"finite_orbit", to_json(*s.finite_orbit)}};
  return nullptr;
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

std::vector<FactoredElement> all_divisors(const FactoredElement& a) {
  std::vector<FactoredElement> out{FactoredElement::one(a.field())};
  for (const auto& fac : a.factors()) {
    std::vector<FactoredElement> next;
    for (const auto& d : out)
      for (int m = 0; m <= fac.mult; ++m) next.push_back(m ? d * FactoredElement::single(fac.poly, m) : d);
    out = std::move(next);
  }
  return out;
}

json classify(const GwaSpec& spec, long max_degree) {
  if (spec.a().degree() > max_degree)
    throw MathError(ErrorKind::LimitExceeded, "deg(a) = " + std::to_string(spec.a().degree()) +
                                                  " exceeds the divisor enumeration bound " + std::to_string(max_degree));
  json rows = json::array();
  for (const auto& p : all_divisors(spec.a())) {
    const Rank1Module m(spec, p);
    const auto len = length(m);
    rows.push_back({{"p", to_json(p)},
                    {"simple", is_simple(m).simple},
                    {"length", length_json(len)},
                    {"socle", len ? to_json(socle(m, SocleMethod::Iterate)) : json(nullptr)}});
  }
  return {{"divisors", rows}};
}

json rankn(const GwaSpec& spec, const json& args, std::uint64_t seed) {
  const MatrixModule m(spec, matrix_from_json(spec.field(), args.at("P")));
  json inv = json::array();
  for (const auto& d : m.invariant_factors()) inv.push_back(to_json(d));
  json q_inv = json::array();
  for (const auto& d : smith_normal_form(m.Q()).invariants) q_inv.push_back(to_json(d));
  json out = {{"P", to_json(m.P())},          {"Q", to_json(m.Q())},
              {"det", to_json(m.P().det())},  {"invariant_factors", inv},
              {"q_invariant_factors", q_inv}, {"oracle", to_json(relation_suite(m, seed))}};
  if (args.contains("S") && args.contains("P_prime")) {
    const MatrixModule other(spec, matrix_from_json(spec.field(), args.at("P_prime")));
    out["isomorphism"] = verify_iso_conjugate(m, other, matrix_from_json(spec.field(), args.at("S")));
  }
  return out;
}

json construct_vn(const GwaSpec& spec, const json& args, std::uint64_t seed) {
  const long n = args.at("n").get<long>();
  if (n < 1) throw MathError(ErrorKind::InvalidSpec, "rank must be positive");
  const auto vn = construct_simple_vn(spec, divisor_from_json(spec, args.at("a0")), static_cast<std::size_t>(n));
  return {{"P", to_json(vn.module.P())},
          {"Q", to_json(vn.module.Q())},
          {"reduced", to_json(vn.reduced)},
          {"checks", checks_json(vn.checks)},
          {"certified", vn.certified},
          {"certificate", "simplicity rests on the listed proof-ingredient checks"},
          {"oracle", to_json(relation_suite(vn.module, seed))}};
}

json sl2(const json& args, std::uint64_t seed) {
  const Scalar b = scalar_from_json(Field::rationals(), args.at("b"));
  const long n = args.at("n").get<long>();
  if (n < 1) throw MathError(ErrorKind::InvalidSpec, "rank must be positive");
  const auto fam = construct_sl2_family(b, static_cast<std::size_t>(n));
  return {{"b", b.to_string()},
          {"n", n},
          {"chi", fam.chi.to_string()},
          {"P", to_json(fam.module.P())},
          {"Q", to_json(fam.module.Q())},
          {"checks", checks_json(fam.checks)},
          {"oracle", to_json(relation_suite(fam.module, seed))}};
}

json hom(const GwaSpec& spec, const json& args) {
  const Rank1Module src(spec, divisor_from_json(spec, args.at("p")));
  const Rank1Module dst(spec, divisor_from_json(spec, args.at("p_prime")));
  const int max_deg = args.value("max_deg", 8);
  const auto h = hom_basis(src, dst, max_deg);
  json basis = json::array();
  for (const auto& v : h.basis) basis.push_back(to_json(v));
  return {{"max_deg", max_deg}, {"basis", basis}, {"isomorphic", h.isomorphic}, {"cross_checked", h.cross_checked}};
}

json run_task(const GwaSpec& spec, const Task& t, std::uint64_t seed, const RunOptions& opts) {
  if (t.kind == "analyze_vp") return analyze_vp(Rank1Module(spec, divisor_from_json(spec, t.args.at("p"))), seed, opts.ansi);
  if (t.kind == "diagram") return diagram_json(Rank1Module(spec, divisor_from_json(spec, t.args.at("p"))), opts.ansi);
  if (t.kind == "classify_all_divisors") return classify(spec, opts.max_divisor_degree);
  if (t.kind == "rankn") return rankn(spec, t.args, seed);
  if (t.kind == "construct_vn") return construct_vn(spec, t.args, seed);
  if (t.kind == "sl2") return sl2(t.args, seed);
  return hom(spec, t.args);
}

json section(const GwaSpec& spec, const Task& t, std::uint64_t seed, const RunOptions& opts) {
  json out = {{"kind", t.kind}, {"seed", seed}};
  try {
    out["status"] = "ok";
    out["result"] = run_task(spec, t, seed, opts);
  } catch (const MathError& e) {
    out["status"] = "error";
    out["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  } catch (const json::exception& e) {
    out["status"] = "error";
    out["error"] = {{"kind", "ParseError"}, {"message", e.what()}};
  }
  return out;
}

}  // namespace

JobSpec parse_job(const json& doc) {
  if (!doc.is_object() || !doc.contains("gwa")) throw MathError(ErrorKind::ParseError, "job needs a \"gwa\" field");
  JobSpec job{spec_from_json(doc.at("gwa")), {}, 1};
  try {
    if (doc.contains("seed")) job.seed = doc.at("seed").get<std::uint64_t>();
    const json tasks = doc.value("tasks", json::array());
    if (!tasks.is_array()) throw MathError(ErrorKind::ParseError, "\"tasks\" must be an array");
    for (const auto& t : tasks) {
      if (!t.is_object() || !t.contains("kind") || !t.at("kind").is_string())
        throw MathError(ErrorKind::ParseError, "task without a kind: " + t.dump());
      Task task{t.at("kind").get<std::string>(), t};
      if (task.kind == "hom" && t.contains("p'") && !t.contains("p_prime")) task.args["p_prime"] = t.at("p'");
      auto shape = std::find_if(shapes().begin(), shapes().end(), [&](const TaskShape& s) { return task.kind == s.kind; });
      if (shape == shapes().end()) throw MathError(ErrorKind::ParseError, "unknown task kind \"" + task.kind + "\"");
      for (const char* key : shape->required)
        if (!task.args.contains(key))
          throw MathError(ErrorKind::ParseError, "task " + task.kind + " needs field \"" + key + "\"");
      job.tasks.push_back(std::move(task));
    }
  } catch (const json::exception& e) {
    throw MathError(ErrorKind::ParseError, e.what());
  }
  return job;
}

JobSpec parse_job_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw MathError(ErrorKind::ParseError, e.what());
  }
  return parse_job(doc);
}

RunResult run(const JobSpec& job, const RunOptions& opts) {
  const std::uint64_t seed = opts.seed.value_or(job.seed);
  std::vector<json> sections(job.tasks.size());
  if (opts.parallel) {
    std::vector<std::future<json>> pending;
    for (std::size_t i = 0; i < job.tasks.size(); ++i)
      pending.push_back(std::async(std::launch::async, [&, i] { return section(job.gwa, job.tasks[i], seed + i, opts); }));
    for (std::size_t i = 0; i < pending.size(); ++i) sections[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < job.tasks.size(); ++i) sections[i] = section(job.gwa, job.tasks[i], seed + i, opts);
  }
  RunResult out{{{"gwa", to_json(job.gwa)}, {"seed", seed}, {"tasks", json::array()}}, 0};
  for (auto& s : sections) {
    if (s.at("status") != "ok") out.exit_code = 1;
    out.report["tasks"].push_back(std::move(s));
  }
  return out;
}

json diagram_json(const Rank1Module& m, bool ansi) {
  const auto ds = render_diagram(m);
  json orbits = json::array();
  for (const auto& d : ds) {
    json panels = json::array();
    for (const auto& p : d.panels) {
      json cells = json::object();
      for (const auto& [k, s] : p.cells) cells[std::to_string(k)] = s;
      panels.push_back({{"name", p.name}, {"cells", cells}});
    }
    orbits.push_back({{"rep", to_json(d.rep)},
                      {"size", d.size ? json(*d.size) : json(nullptr)},
                      {"panels", panels},
                      {"text", to_text(d, ansi)}});
  }
  return {{"orbits", orbits}, {"text", to_text(ds, ansi)}};
}

json analyze_vp(const Rank1Module& m, std::uint64_t seed, bool ansi) {
  const auto simple = is_simple(m);
  const auto pairs = omega_pairs(m.p(), m.q(), m.spec());
  json omega = json::array();
  for (const auto& pr : pairs) omega.push_back(to_json(pr));
  const auto len = length(m);
  json series = nullptr, soc = nullptr, soc_switch = nullptr, filtration = nullptr;
  if (len) {
    series = json::array();
    for (const auto& st : composition_series(m))
      series.push_back({{"p", to_json(st.p)},
                        {"generator", to_json(st.generator)},
                        {"chain", st.chain ? to_json(*st.chain) : json(nullptr)},
                        {"quotient", st.quotient ? to_json(*st.quotient) : json(nullptr)}});
    soc = to_json(socle(m, SocleMethod::Iterate));
    soc_switch = to_json(socle(m, SocleMethod::ColorSwitch));
  } else {
    const auto f = filtration_steps(m, 3);
    json params = json::array(), gens = json::array();
    for (const auto& p : f.params) params.push_back(to_json(p));
    for (const auto& g : f.generators) gens.push_back(to_json(g));
    filtration = {{"params", params},
                  {"generators", gens},
                  {"period", f.period ? json{{"start", f.period->first}, {"length", f.period->second}} : json(nullptr)}};
  }
  json maximal = json::array();
  for (const auto& c : maximal_submodules(m)) maximal.push_back(to_json(c));
  return {{"p", to_json(m.p())},
          {"q", to_json(m.q())},
          {"simple", simple.simple},
          {"witness", witness_json(simple)},
          {"omega", omega},
          {"omega_size", omega_size(pairs)},
          {"length", length_json(len)},
          {"series", series},
          {"socle", soc},
          {"socle_color_switch", soc_switch},
          {"maximal", maximal},
          {"filtration", filtration},
          {"oracle", to_json(relation_suite(m, seed))},
          {"diagram", diagram_json(m, ansi)}};
}

}  // namespace gwa
