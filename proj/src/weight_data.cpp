#include "gwa/weight_data.hpp"

namespace gwa {

WeightData weight_data_for(const std::vector<Poly>& ideals, const GwaSpec& spec, long dim) {
  WeightData w;
  for (const auto& z : ideals) {
    w.support.push_back({z, dim, spec.a().mult(z) > 0});
    w.total_dim += dim * z.degree();
  }
  return w;
}

}  // namespace gwa
