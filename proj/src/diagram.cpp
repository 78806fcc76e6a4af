#include "gwa/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "gwa/factored.hpp"

namespace gwa {

namespace {

long wrap(long k, const std::optional<long>& size) {
  if (!size) return k;
  return ((k % *size) + *size) % *size;
}

std::vector<long> positions(const FactoredElement& f, const Poly& rep, const GwaSpec& spec) {
  std::vector<long> out;
  for (const auto& fac : f.factors())
    if (auto k = spec.orbit_shift(rep, fac.poly)) out.insert(out.end(), fac.mult, *k);
  return out;
}

}  // namespace

std::vector<OrbitDiagram> render_diagram(const Rank1Module& m) {
  const GwaSpec& spec = m.spec();
  const bool switchable = spec.all_orbits_infinite();
  std::vector<OrbitDiagram> out;
  for (const auto& part : orbit_partition((m.p() * m.q()).monic(), spec)) {
    OrbitDiagram d{part.rep, part.size, {}};
    const auto ps = positions(m.p(), part.rep, spec), qs = positions(m.q(), part.rep, spec);
    DiagramPanel config{"configuration", {}}, shifted{"shifted", {}};
    for (long k : ps) {
      config.cells[k] += 'P';
      shifted.cells[k] += 'P';
    }
    for (long k : qs) {
      config.cells[k] += 'Q';
      shifted.cells[wrap(k - 1, part.size)] += 'Q';
    }
    d.panels = {config, shifted};
    if (switchable) {
      std::vector<long> marks;
      for (long k : ps) marks.push_back(k);
      for (long k : qs) marks.push_back(k - 1);
      std::sort(marks.begin(), marks.end());
      DiagramPanel soc{"socle", {}};
      for (std::size_t i = 0; i < marks.size(); ++i)
        if (i < ps.size()) soc.cells[marks[i]] += 'P';
      for (std::size_t i = ps.size(); i < marks.size(); ++i) soc.cells[marks[i] + 1] += 'Q';
      d.panels.push_back(std::move(soc));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string to_text(const OrbitDiagram& d, bool ansi) {
  std::ostringstream os;
  os << "orbit of " << d.rep.to_string();
  if (d.size) os << " (size " << *d.size << ")";
  os << "\n";
  for (const auto& panel : d.panels) {
    os << panel.name << "\n";
    if (panel.cells.empty()) {
      os << "  (empty)\n";
      continue;
    }
    const long lo = d.size ? 0 : panel.cells.begin()->first;
    const long hi = d.size ? *d.size - 1 : panel.cells.rbegin()->first;
    std::size_t height = 0;
    for (const auto& [k, s] : panel.cells) height = std::max(height, s.size());
    auto cell = [&](long k, std::size_t row) {
      auto it = panel.cells.find(k);
      if (it == panel.cells.end() || row >= it->second.size()) return std::string("   ");
      const char c = it->second[row];
      if (!ansi) return std::string("  ") + c;
      return std::string("  ") + (c == 'P' ? "\x1b[31m" : "\x1b[34m") + c + "\x1b[0m";
    };
    for (std::size_t row = height; row-- > 0;) {
      std::string line;
      for (long k = lo; k <= hi; ++k) line += cell(k, row);
      line.erase(line.find_last_not_of(' ') + 1);
      os << line << "\n";
    }
    std::string axis;
    for (long k = lo; k <= hi; ++k) {
      std::string label = std::to_string(k);
      axis += std::string(3 - std::min<std::size_t>(3, label.size()), ' ') + label;
    }
    os << axis << "\n";
  }
  return os.str();
}

std::string to_text(const std::vector<OrbitDiagram>& ds, bool ansi) {
  std::string out;
  for (const auto& d : ds) out += to_text(d, ansi);
  return out;
}

}  // namespace gwa
