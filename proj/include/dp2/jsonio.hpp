#pragma once

#include "dp2/delta.hpp"
#include "dp2/zariski.hpp"

#include <json.hpp>

namespace dp2 {

// rationals are serialized as {"num": ..., "den": ...}, never as floats
nlohmann::json rat_to_json(const Rat& r);
nlohmann::json poly_to_json(const Poly& p);

// breakpoints and per-piece polynomial data of a parametric decomposition
nlohmann::json family_to_json(const CurveSystem& sys, const PiecewiseFamily& fam,
                              const std::vector<std::string>& names);

nlohmann::json certificate_to_json(const DeltaCertificate& cert);

}  // namespace dp2
