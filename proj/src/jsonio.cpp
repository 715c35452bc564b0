#include "dp2/jsonio.hpp"

namespace dp2 {

using nlohmann::json;

json rat_to_json(const Rat& r) {
    return json{{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_to_json(c));
    return arr;
}

json family_to_json(const CurveSystem& sys, const PiecewiseFamily& fam,
                    const std::vector<std::string>& names) {
    (void)sys;
    json pieces = json::array();
    for (const auto& p : fam.pieces) {
        json coeffs = json::array();
        for (size_t i = 0; i < p.support.size(); ++i)
            coeffs.push_back(json{{"curve", names.at(p.support[i])},
                                  {"poly", poly_to_json(p.coeffs[i])}});
        pieces.push_back(json{{"lo", rat_to_json(p.lo)},
                              {"hi", rat_to_json(p.hi)},
                              {"N", coeffs},
                              {"Psq", poly_to_json(p.Psq)},
                              {"PdotC", poly_to_json(p.PdotC)}});
    }
    return json{{"carrier", names.at(fam.carrier)},
                {"tau", rat_to_json(fam.tau)},
                {"pieces", pieces}};
}

json certificate_to_json(const DeltaCertificate& cert) {
    json strata = json::array();
    for (const auto& s : cert.strata) {
        json sv = json::object();
        for (const auto& [k, v] : s.S_values) sv[k] = rat_to_json(v);
        json row{{"name", s.name},
                 {"lemma", s.lemma},
                 {"lower", rat_to_json(s.lower)},
                 {"upper", s.upper ? rat_to_json(*s.upper) : json(nullptr)},
                 {"S_values", sv}};
        if (s.axiom) row["axiom"] = true;
        strata.push_back(std::move(row));
    }
    return json{{"type", cert.type.str()},
                {"lines", cert.lines},
                {"delta", rat_to_json(cert.delta)},
                {"certified", cert.certified},
                {"matches_table", cert.matches_table},
                {"strata", strata},
                {"axioms", cert.axioms}};
}

}  // namespace dp2
