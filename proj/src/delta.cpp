#include "dp2/delta.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dp2 {

namespace {

void check_nonneg_on(const Poly& f, const Rat& lo, const Rat& hi, const char* what) {
    auto bad = [&](const Rat& v) { return f.eval(v) < 0; };
    bool fail = bad(lo) || bad(hi);
    if (!fail && f.degree() == 2 && f.coeff(2) > 0) {
        Rat vertex = -f.coeff(1) / (Rat(2) * f.coeff(2));
        if (vertex > lo && vertex < hi) fail = bad(vertex);
    }
    if (fail) throw std::logic_error(std::string(what) + " negative on a piece");
}

}  // namespace

Rat S_curve(const PiecewiseFamily& fam) {
    Rat acc(0);
    for (const auto& p : fam.pieces) acc += p.Psq.integrate(p.lo, p.hi);
    return acc / Rat(2);
}

std::vector<Poly> h_function(const CurveSystem& sys, const PiecewiseFamily& fam,
                             const std::vector<std::pair<int, int>>& incident) {
    for (auto [id, mult] : incident) {
        if (id == fam.carrier || sys.pair(fam.carrier, id) < mult)
            throw StratumNotOnCarrier("stratum does not lie on the carrier");
    }
    std::vector<Poly> out;
    for (const auto& p : fam.pieces) {
        Poly n_at_point;
        for (auto [id, mult] : incident) n_at_point += p.coeff_of(id) * Rat(mult);
        Poly h = p.PdotC * n_at_point + p.PdotC * p.PdotC * Rat(1, 2);
        check_nonneg_on(h, p.lo, p.hi, "h(v)");
        out.push_back(std::move(h));
    }
    return out;
}

Rat S_flag(const CurveSystem& sys, const PiecewiseFamily& fam,
           const std::vector<std::pair<int, int>>& incident) {
    auto hs = h_function(sys, fam, incident);
    Rat acc(0);
    for (size_t i = 0; i < hs.size(); ++i)
        acc += hs[i].integrate(fam.pieces[i].lo, fam.pieces[i].hi);
    return acc;
}

PointBound delta_point_bound_curve(const SurfaceModel& m, int carrier,
                                   const PointStratum& stratum) {
    if (stratum.carrier != carrier) throw StratumNotOnCarrier("stratum carrier mismatch");
    auto fam = piecewise_family(m.sys, carrier);
    Rat sc = S_curve(fam);
    Rat sw = S_flag(m.sys, fam, stratum.incident);
    Rat lower = std::min(Rat(1) / sc, Rat(1) / sw);
    return PointBound{lower, Rat(1) / sc};
}

BlowupBound delta_point_bound_blowup(const SurfaceModel& m, const BlowupModel& bm) {
    (void)m;
    auto fam = piecewise_family(bm.sys, bm.ep_id);
    BlowupBound out;
    out.S_ep = S_curve(fam);

    Rat max_sw(0);
    for (int j = 0; j < bm.sys.size(); ++j) {
        if (j == bm.ep_id) continue;
        long long w = bm.sys.pair(bm.ep_id, j);
        if (w < 1) continue;
        Rat sw = S_flag(bm.sys, fam, {{j, 1}});
        out.strata_S.emplace_back(bm.names[j], sw);
        max_sw = std::max(max_sw, sw);
    }
    Rat sw_gen = S_flag(bm.sys, fam, {});
    out.strata_S.emplace_back("generic", sw_gen);
    max_sw = std::max(max_sw, sw_gen);

    // A(E_P) = 2 for the ordinary blowup; the different vanishes, so every
    // point of E_P has log discrepancy 1 in the induced pair
    out.upper = Rat(2) / out.S_ep;
    out.lower = std::min(out.upper, Rat(1) / max_sw);
    return out;
}

std::vector<int> relevant_carriers(const SurfaceModel& m) {
    std::vector<int> out;
    for (int i = 0; i < m.num_neg_two; ++i) out.push_back(i);
    for (int i = m.num_neg_two; i < m.num_curves(); ++i) {
        for (int j = 0; j < m.num_neg_two; ++j)
            if (m.pair(i, j) > 0) {
                out.push_back(i);
                break;
            }
    }
    return out;
}

DeltaCertificate delta_global(const SurfaceModel& m) {
    if (!m.table_delta)
        throw UncertifiedStratum("certificates exist only for the table surfaces");

    DeltaCertificate cert;
    cert.type = m.type;
    cert.lines = m.line_count;

    struct Record {
        std::string name;
        Rat lower, upper;
        bool has_upper = false;
        std::vector<std::pair<std::string, Rat>> S_values;
        std::vector<int> carriers;
    };
    std::map<std::pair<int, int>, Record> records;  // key: (min,max) curve pair; (c,-1) generic
    auto merge = [&](std::pair<int, int> key, const std::string& name, Rat lower,
                     std::optional<Rat> upper,
                     std::vector<std::pair<std::string, Rat>> svals, int carrier) {
        auto& rec = records[key];
        if (rec.name.empty()) {
            rec.name = name;
            rec.lower = lower;
            if (upper) { rec.upper = *upper; rec.has_upper = true; }
        } else {
            rec.lower = std::max(rec.lower, lower);
            if (upper) {
                rec.upper = rec.has_upper ? std::min(rec.upper, *upper) : *upper;
                rec.has_upper = true;
            }
        }
        for (auto& sv : svals) rec.S_values.push_back(std::move(sv));
        if (carrier >= 0) rec.carriers.push_back(carrier);
    };

    for (int carrier : relevant_carriers(m)) {
        auto fam = piecewise_family(m.sys, carrier);
        Rat sc = S_curve(fam);
        std::set<std::pair<int, int>> seen;
        for (const auto& stratum : point_strata(m, carrier)) {
            std::pair<int, int> key;
            std::string name;
            if (stratum.generic()) {
                key = {carrier, -1};
                name = m.curve_name(carrier) + " generic";
            } else {
                int other = stratum.incident[0].first;
                key = {std::min(carrier, other), std::max(carrier, other)};
                name = m.curve_name(key.first) + "&" + m.curve_name(key.second);
                if (!seen.insert(key).second) continue;  // double edge: same data
            }
            Rat sw = S_flag(m.sys, fam, stratum.incident);
            Rat lower = std::min(Rat(1) / sc, Rat(1) / sw);
            merge(key, name, lower, Rat(1) / sc,
                  {{"S_S(" + m.curve_name(carrier) + ")", sc},
                   {"S(W^" + m.curve_name(carrier) + ";P)", sw}},
                  carrier);
        }
    }

    // refinement at A2 components via the plt blowup of the double point
    for (const auto& comp : m.components()) {
        if (!(comp.kind == AdeComponent{'A', 2})) continue;
        int e1 = comp.curve_ids[0], e2 = comp.curve_ids[1];
        auto bb = delta_point_bound_blowup(m, blowup_at_a2_point(m, e1, e2));
        std::vector<std::pair<std::string, Rat>> svals{{"S_S(E_P)", bb.S_ep}};
        for (auto& [label, sw] : bb.strata_S) svals.emplace_back("S(W^E_P;" + label + ")", sw);
        merge({std::min(e1, e2), std::max(e1, e2)}, "", bb.lower, bb.upper, svals, -1);
    }

    for (auto& [key, rec] : records) {
        CertStratum s;
        s.name = rec.name;
        s.lower = rec.lower;
        if (rec.has_upper) s.upper = rec.upper;
        s.S_values = rec.S_values;
        s.carriers = rec.carriers;
        cert.strata.push_back(std::move(s));
    }

    CertStratum floor;
    floor.name = "generic point off lines through singular points";
    floor.lemma = "deg2-genpoint";
    floor.lower = Rat(9, 5);
    floor.axiom = true;
    cert.strata.push_back(std::move(floor));
    cert.axioms.push_back("generic-floor-9/5");

    cert.delta = cert.strata.front().lower;
    for (const auto& s : cert.strata) cert.delta = std::min(cert.delta, s.lower);
    for (const auto& s : cert.strata)
        if (s.upper && s.lower == *s.upper && s.lower == cert.delta) cert.certified = true;
    cert.matches_table = cert.certified && m.table_delta && cert.delta == *m.table_delta;
    return cert;
}

}  // namespace dp2
