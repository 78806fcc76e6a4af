#pragma once

#include <json.hpp>

#include "gwa/oracle.hpp"
#include "gwa/weight.hpp"

namespace gwa {

using json = nlohmann::ordered_json;

/// All readers throw MathError(ParseError) on malformed input.
Field field_from_json(const json& j);
json to_json(Field f);

Scalar scalar_from_json(Field f, const json& j);
Poly poly_from_json(Field f, const json& j);
json to_json(const Poly& p);

/// {"unit": "r", "factors": [{"poly": [...], "mult": n, "asserted": b}]}
FactoredElement factored_from_json(Field f, const json& j, std::vector<bool>* asserted = nullptr);
json to_json(const FactoredElement& f);

GwaSpec spec_from_json(const json& j);
json to_json(const GwaSpec& spec);

/// A divisor of a: either a factored element or a dense polynomial that is
/// split against the factors of a.
FactoredElement divisor_from_json(const GwaSpec& spec, const json& j);

PolyMatrix matrix_from_json(Field f, const json& j);
json to_json(const PolyMatrix& m);

json to_json(const Profile& p);
json to_json(const WeightData& w);
json to_json(const OmegaPair& p);
json to_json(const ChainProduct& c);
json to_json(const Piece& p);
json to_json(const SubmoduleCert& c);
json to_json(const Check& c);
json to_json(const OracleReport& r);

}  // namespace gwa
