#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwa/rank1.hpp"

namespace gwa {

/// One grid: position -> stacked markers, bottom first ("P" for factors of p,
/// "Q" for factors of q).
struct DiagramPanel {
  std::string name;
  std::map<long, std::string> cells;
};

/// Panels for one sigma-orbit. Positions are exponents k of sigma^k(rep),
/// rep being the preceq-least factor of pq on that orbit (taken mod the
/// orbit size on a finite orbit).
struct OrbitDiagram {
  Poly rep;
  std::optional<long> size;
  std::vector<DiagramPanel> panels;  // configuration, shifted[, socle]
};

/// The socle panel is present only when every orbit is infinite.
std::vector<OrbitDiagram> render_diagram(const Rank1Module& m);

std::string to_text(const OrbitDiagram& d, bool ansi = false);
std::string to_text(const std::vector<OrbitDiagram>& ds, bool ansi = false);

}  // namespace gwa
