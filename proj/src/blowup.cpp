#include "dp2/blowup.hpp"

#include <algorithm>

namespace dp2 {

namespace {

CurveClass pullback(const CurveClass& c, int ep_mult) {
    CurveClass out = c;
    out[8] = -ep_mult;
    return out;
}

CurveClass ep_class() {
    CurveClass ep{};
    ep[8] = 1;
    return ep;
}

void push_curve(BlowupModel& bm, const CurveClass& c, std::string name) {
    bm.sys.curves.push_back(c);
    bm.sys.self_int.push_back(static_cast<int>(intersect(c, c)));
    bm.names.push_back(std::move(name));
}

void init(BlowupModel& bm) {
    bm.sys.rank = 9;
    bm.sys.origin = anticanonical_class(8);
    bm.sys.origin.c.push_back(Rat(0));  // pullback: no E_P component
}

}  // namespace

BlowupModel blowup_at_a2_point(const SurfaceModel& m, int e1, int e2) {
    if (!m.is_neg_two(e1) || !m.is_neg_two(e2) || m.pair(e1, e2) != 1)
        throw BlowupModelInvalid("point is not the intersection of two meeting (-2)-curves");
    for (int j = 0; j < m.num_neg_two; ++j) {
        if (j == e1 || j == e2) continue;
        if (m.pair(e1, j) != 0 || m.pair(e2, j) != 0)
            throw BlowupModelInvalid("the two curves are not an A2 component");
    }

    // unique conic class through the point: B = -K - E - E'
    CurveClass B = canonical_curve(8);
    for (int r = 0; r < 8; ++r) B[r] = -B[r] - m.curve(e1)[r] - m.curve(e2)[r];
    if (intersect(B, B) != 0 || intersect(B, canonical_curve(8)) != -2)
        throw std::logic_error("conic class has wrong invariants");
    for (int j = 0; j < m.num_curves(); ++j)
        if (j != e1 && j != e2 && intersect(B, m.curve(j)) < 0)
            throw BlowupModelInvalid("conic through the point is reducible");

    BlowupModel bm;
    init(bm);
    for (int j = 0; j < m.num_curves(); ++j)
        push_curve(bm, pullback(m.curve(j), j == e1 || j == e2 ? 1 : 0),
                   m.curve_name(j) + "~");
    bm.ep_id = bm.sys.size();
    push_curve(bm, ep_class(), "E_P");
    push_curve(bm, pullback(B, 1), "B~");
    return bm;
}

BlowupModel blowup_at_generic_point(const SurfaceModel& m) {
    BlowupModel bm;
    init(bm);
    // strict transforms of the (-2)-curves (the point is off all curves)
    for (int j = 0; j < m.num_neg_two; ++j)
        push_curve(bm, pullback(m.curve(j), 0), m.curve_name(j) + "~");
    bm.ep_id = bm.sys.size();
    push_curve(bm, ep_class(), "E_P");

    // (-1)-classes of the blown-up surface: pullbacks of lines, conics
    // through the point, anticanonical-plus-line classes with a double
    // point, and the double-anticanonical class with a triple point
    const CurveClass K = canonical_curve(8);
    std::vector<std::pair<CurveClass, std::string>> cands;
    int li = 0;
    for (const auto& l : enumerate_line_classes())
        cands.emplace_back(pullback(l, 0), "l" + std::to_string(++li));
    li = 0;
    for (const auto& r : enumerate_roots()) {
        CurveClass B;
        for (size_t i = 0; i < B.size(); ++i) B[i] = r[i] - K[i];
        cands.emplace_back(pullback(B, 1), "q" + std::to_string(++li));
    }
    li = 0;
    for (const auto& l : enumerate_line_classes()) {
        CurveClass D;
        for (size_t i = 0; i < D.size(); ++i) D[i] = l[i] - K[i];
        cands.emplace_back(pullback(D, 2), "c" + std::to_string(++li));
    }
    CurveClass D2;
    for (size_t i = 0; i < D2.size(); ++i) D2[i] = -2 * K[i];
    cands.emplace_back(pullback(D2, 3), "t1");

    const CurveClass K9 = canonical_curve(9);
    for (auto& [c, name] : cands) {
        if (intersect(c, c) != -1 || intersect(c, K9) != -1)
            throw std::logic_error("blowup line class has wrong invariants");
        bool effective = true;
        for (int j = 0; j < m.num_neg_two; ++j)
            if (intersect(c, m.curve(j)) < 0) { effective = false; break; }
        if (effective) push_curve(bm, c, name);
    }
    return bm;
}

BlowupModel blowup_on_curve(const SurfaceModel& m, int e) {
    if (!m.is_neg_two(e)) throw BlowupModelInvalid("carrier of the point is not a (-2)-curve");
    BlowupModel bm;
    init(bm);
    for (int j = 0; j < m.num_curves(); ++j)
        push_curve(bm, pullback(m.curve(j), j == e ? 1 : 0), m.curve_name(j) + "~");
    bm.ep_id = bm.sys.size();
    push_curve(bm, ep_class(), "E_P");

    // conic classes meeting the carrier sweep it; their members through a
    // general point of it are irreducible
    const CurveClass K = canonical_curve(8);
    int qi = 0;
    for (const auto& r : enumerate_roots()) {
        CurveClass B;
        for (size_t i = 0; i < B.size(); ++i) B[i] = r[i] - K[i];
        if (intersect(B, m.curve(e)) < 1) continue;
        bool ok = true;
        for (int j = 0; j < m.num_curves() && ok; ++j)
            if (j != e && intersect(B, m.curve(j)) < 0) ok = false;
        if (ok) push_curve(bm, pullback(B, 1), "q" + std::to_string(++qi));
    }
    return bm;
}

}  // namespace dp2
