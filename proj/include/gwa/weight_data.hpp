#pragma once

#include <vector>

#include "gwa/gwa.hpp"

namespace gwa {

struct WeightEntry {
  Poly ideal;     // monic irreducible generator of a maximal ideal m
  long dim = 1;   // dimension of the weight space over R/m
  bool is_break = false;  // a lies in m

  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

struct WeightData {
  std::vector<WeightEntry> support;
  long total_dim = 0;  // over the base field

  friend bool operator==(const WeightData&, const WeightData&) = default;
};

/// One-dimensional weight spaces at each listed ideal.
WeightData weight_data_for(const std::vector<Poly>& ideals, const GwaSpec& spec, long dim = 1);

}  // namespace gwa
