#pragma once

#include <optional>
#include <vector>

#include "gwa/rank1.hpp"
#include "gwa/rankn.hpp"
#include "gwa/weight_data.hpp"

namespace gwa {

/// Weight data of V_p / <g> for a maximal submodule; throws NotMaximal.
WeightData quotient_weight_data(const Rank1Module& m, const SubmoduleCert& cert);

struct WindowSlot {
  Poly ideal;
  long dim = 0;              // over R/m
  long residue_degree = 0;
  bool is_break = false;
  /// x maps the slot at m to the slot at sigma^-1(m), y to sigma(m); the
  /// matrices have entries reduced modulo the target ideal.
  std::optional<PolyMatrix> x_map, y_map;
  std::optional<std::size_t> x_target, y_target;
};

struct WeightWindow {
  std::vector<WindowSlot> slots;
  WeightData data;
};

/// Finite-window evaluation of the weighting functor; throws ReducibleIdeal.
WeightWindow weighting_window(const Rank1Module& m, const std::vector<Poly>& ideals);
WeightWindow weighting_window(const MatrixModule& m, const std::vector<Poly>& ideals);

}  // namespace gwa
