#pragma once

#include <string>

#include <json.hpp>

#include "affhecke/hecke.hpp"
#include "affhecke/nearby.hpp"

namespace affhecke {

// All emitters use ordered_json so output key order is deterministic.
using ojson = nlohmann::ordered_json;

// {"<v-exponent>": coefficient, ...}, exponents ascending
ojson ring_to_json(const RingElt& r);
RingElt ring_from_json(const nlohmann::json& j);

// {"group": ..., "terms": [{"element", "coeff_v", "coeff_Q"?}, ...]} with
// terms in canonical element order; coeff_Q present when the coefficient
// lies in Z[Q]. Round trip through ring_to_json is bit exact.
ojson hecke_to_json(const HeckeElt& h);
HeckeElt hecke_from_json(const RootDatum& d, const nlohmann::json& j);

ojson report_to_json(const Report& r);
std::string report_to_table(const Report& r);

}  // namespace affhecke
