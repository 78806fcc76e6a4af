#include "gwa/weight.hpp"

#include "gwa/error.hpp"

namespace gwa {

WeightData quotient_weight_data(const Rank1Module& m, const SubmoduleCert& cert) {
  for (const auto& c : maximal_submodules(m))
    if (c.g.associate(cert.g)) return c.quotient;
  throw MathError(ErrorKind::NotMaximal, "<" + cert.g.to_string() + "> is not a maximal submodule");
}

namespace {

WeightWindow window(const GwaSpec& spec, const PolyMatrix& p, const PolyMatrix& q, const std::vector<Poly>& ideals) {
  WeightWindow w;
  std::vector<Poly> monic;
  for (const auto& z : ideals) {
    if (z.is_constant() || is_irreducible(z) == Irreducibility::No)
      throw MathError(ErrorKind::ReducibleIdeal, "<" + z.to_string() + "> is not a maximal ideal");
    monic.push_back(normalize_monic(z).second);
  }
  const long n = static_cast<long>(p.size());
  auto find = [&](const Poly& z) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < monic.size(); ++i)
      if (monic[i] == z) return i;
    return std::nullopt;
  };
  for (const auto& z : monic) {
    WindowSlot s;
    s.ideal = z;
    s.dim = n;
    s.residue_degree = z.degree();
    s.is_break = spec.a().mult(z) > 0;
    const Poly down = spec.shift_monic(z, -1), up = spec.shift_monic(z, 1);
    if ((s.x_target = find(down))) s.x_map = p.map([&](const Poly& e) { return divmod(e, down).second; });
    if ((s.y_target = find(up))) s.y_map = q.map([&](const Poly& e) { return divmod(e, up).second; });
    w.slots.push_back(std::move(s));
  }
  w.data = weight_data_for(monic, spec, n);
  return w;
}

}  // namespace

WeightWindow weighting_window(const Rank1Module& m, const std::vector<Poly>& ideals) {
  return window(m.spec(), PolyMatrix::diagonal({m.p_poly()}), PolyMatrix::diagonal({m.q_poly()}), ideals);
}

WeightWindow weighting_window(const MatrixModule& m, const std::vector<Poly>& ideals) {
  return window(m.spec(), m.P(), m.Q(), ideals);
}

}  // namespace gwa
