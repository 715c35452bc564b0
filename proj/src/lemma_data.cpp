#include "dp2/lemmas.hpp"

#include <mutex>

// Catalog of the degree-2 configuration lemmas: stated Zariski data
// (intervals, P(v)^2, P(v).A, negative-part coefficient multisets), S values
// and the per-stratum S(W;P) statements, keyed by the surface that realizes
// each configuration. Obvious misprints in the source statements (signs,
// duplicated labels, swapped case letters) are corrected against the exact
// P(v)^2 / P(v).A data, which pins everything; such entries carry a note.

namespace dp2 {

namespace {

Rat q(long long n, long long d = 1) { return Rat(n, d); }
Poly lin(Rat c0, Rat c1) { return Poly{std::move(c0), std::move(c1)}; }
Poly quad(Rat c0, Rat c1, Rat c2) { return Poly{std::move(c0), std::move(c1), std::move(c2)}; }
Poly vmul(Rat c1) { return Poly{Rat(0), std::move(c1)}; }  // c1 * v

using NC = std::vector<std::pair<Poly, int>>;

LemmaPieceSpec piece(Rat lo, Rat hi, Poly psq, Poly pdc, NC nc) {
    return LemmaPieceSpec{std::move(lo), std::move(hi), std::move(psq), std::move(pdc),
                          std::move(nc)};
}

StratumCheck gen(Rel rel, Rat v) {
    StratumCheck c;
    c.sel = StratumCheck::Sel::Generic;
    c.rel = rel;
    c.value = std::move(v);
    return c;
}
StratumCheck oncoeff(int piece_idx, Poly coeff, Rel rel, Rat v) {
    StratumCheck c;
    c.sel = StratumCheck::Sel::OnCoeff;
    c.piece = piece_idx;
    c.coeff = std::move(coeff);
    c.rel = rel;
    c.value = std::move(v);
    return c;
}
StratumCheck maxexcl(std::vector<std::pair<int, Poly>> excl, Rel rel, Rat v) {
    StratumCheck c;
    c.sel = StratumCheck::Sel::MaxExcl;
    c.excl = std::move(excl);
    c.rel = rel;
    c.value = std::move(v);
    return c;
}
StratumCheck maxall(Rel rel, Rat v) { return maxexcl({}, rel, std::move(v)); }

LemmaSpec make(std::string id, char sub, std::string type, int lines, CarrierKind kind, Rat tau,
               std::vector<LemmaPieceSpec> pieces, Rat S, std::vector<StratumCheck> checks,
               Rat delta, bool exact, std::string note = "") {
    LemmaSpec l;
    l.id = std::move(id);
    l.subcase = sub;
    l.surface_type = std::move(type);
    l.surface_lines = lines;
    l.kind = kind;
    l.tau = std::move(tau);
    l.pieces = std::move(pieces);
    l.S = std::move(S);
    l.checks = std::move(checks);
    l.delta_value = std::move(delta);
    l.delta_exact = exact;
    l.note = std::move(note);
    return l;
}

std::vector<LemmaSpec> build_catalog() {
    std::vector<LemmaSpec> L;
    const auto NegTwo = CarrierKind::NegTwo;
    const auto Line = CarrierKind::Line;

    {  // generic-point floor, imported
        LemmaSpec a;
        a.id = "deg2-genpoint";
        a.axiom = true;
        a.delta_value = q(9, 5);
        a.delta_exact = false;
        L.push_back(a);
    }

    // isolated (-2)-curve
    L.push_back(make("deg2-32-A1points", 0, "A1", 44, NegTwo, q(1),
                     {piece(q(0), q(1), quad(q(2), q(0), q(-2)), vmul(q(2)), {})}, q(2, 3),
                     {maxall(Rel::Eq, q(2, 3))}, q(3, 2), true));

    // line through one A1 point
    L.push_back(make(
        "deg2-2717-nearA1points", 0, "A1", 44, Line, q(1),
        {piece(q(0), q(2, 3), quad(q(2), q(-2), q(-1, 2)), lin(q(1), q(1, 2)),
               {{vmul(q(1, 2)), 1}}),
         piece(q(2, 3), q(1), quad(q(4), q(-8), q(4)), lin(q(4), q(-4)),
               {{lin(q(-1), q(2)), 1}, {lin(q(-2), q(3)), 1}})},
        q(4, 9), {maxexcl({{0, vmul(q(1, 2))}}, Rel::Le, q(17, 27))}, q(27, 17), false));

    // line through two A1-type tails
    {
        auto entry = [&](char sub, const char* type, int lines, NC nc) {
            L.push_back(make("deg2-2-near2A1points", sub, type, lines, Line, q(1),
                             {piece(q(0), q(1), quad(q(2), q(-2), q(0)), Poly{q(1)}, std::move(nc))},
                             q(1, 2), {gen(Rel::Eq, q(1, 2))}, q(2), true));
        };
        entry('a', "2A1", 34, {{vmul(q(1, 2)), 2}});
        entry('b', "A3", 22, {{vmul(q(1)), 1}, {vmul(q(1, 2)), 2}});
        entry('c', "D4", 14, {{vmul(q(1)), 2}, {vmul(q(1, 2)), 2}});
        entry('d', "D5", 8, {{vmul(q(1)), 3}, {vmul(q(1, 2)), 2}});
        entry('e', "D6", 3, {{vmul(q(1)), 4}, {vmul(q(1, 2)), 2}});
    }

    // plt blowup of an A2 double point
    L.push_back(make(
        "deg2-65-A2points", 0, "A2", 31, CarrierKind::BlowupA2, q(3),
        {piece(q(0), q(2), quad(q(2), q(0), q(-1, 3)), vmul(q(1, 3)), {{vmul(q(1, 3)), 2}}),
         piece(q(2), q(3), quad(q(6), q(-4), q(2, 3)), lin(q(2), q(-2, 3)),
               {{vmul(q(1, 3)), 2}, {lin(q(-2), q(1)), 1}})},
        q(5, 3),
        {oncoeff(0, vmul(q(1, 3)), Rel::Eq, q(7, 9)),
         oncoeff(1, lin(q(-2), q(1)), Rel::Eq, q(1, 3)), gen(Rel::Le, q(1, 3))},
        q(6, 5), true));

    // end curve of an A2 chain
    {
        auto entry = [&](char sub, const char* type, int lines, NC extra) {
            NC n2{{vmul(q(1, 2)), 1}};
            for (auto& e : extra) n2.push_back(e);
            L.push_back(make(
                "deg2-97-A2points", sub, type, lines, NegTwo, q(4, 3),
                {piece(q(0), q(1), quad(q(2), q(0), q(-3, 2)), vmul(q(3, 2)),
                       {{vmul(q(1, 2)), 1}}),
                 piece(q(1), q(4, 3), quad(q(8), q(-12), q(9, 2)), lin(q(6), q(-9, 2)),
                       std::move(n2))},
                q(7, 9), {maxexcl({{0, vmul(q(1, 2))}}, Rel::Le, q(2, 3))}, q(9, 7), true,
                "stated for a (-1)-curve carrier; the P data identifies a (-2)-carrier"));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2)), w3 = lin(q(-3), q(3)),
             w4 = lin(q(-4), q(4)), w5 = lin(q(-5), q(5)), w6 = lin(q(-6), q(6));
        entry('a', "A2", 31, {{w1, 6}});
        entry('b', "A2+A1", 20, {{w2, 1}, {w1, 5}});
        entry('c', "A2+2A1", 18, {{w2, 2}, {w1, 4}});
        entry('d', "A2+3A1", 13, {{w2, 3}, {w1, 3}});
        entry('e', "2A2", 16, {{w3, 1}, {w2, 1}, {w1, 4}});
        entry('f', "2A2+A1", 12, {{w3, 1}, {w2, 2}, {w1, 3}});
        entry('g', "3A2", 8, {{w3, 2}, {w2, 2}, {w1, 2}});
        entry('h', "A3+A2", 10, {{w4, 1}, {w3, 1}, {w2, 1}, {w1, 3}});
        entry('i', "A3+A2+A1", 7, {{w4, 1}, {w3, 1}, {w2, 2}, {w1, 2}});
        entry('j', "A4+A2", 6, {{w5, 1}, {w4, 1}, {w3, 1}, {w2, 1}, {w1, 2}});
        entry('k', "A5+A2", 3, {{w6, 1}, {w5, 1}, {w4, 1}, {w3, 1}, {w2, 1}, {w1, 1}});
    }

    // line through one A2 point
    L.push_back(make(
        "deg2-3219-nearA2points", 0, "A2", 31, Line, q(1),
        {piece(q(0), q(3, 4), quad(q(2), q(-2), q(-1, 3)), lin(q(1), q(1, 3)),
               {{vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}}),
         piece(q(3, 4), q(1), quad(q(5), q(-10), q(5)), lin(q(5), q(-5)),
               {{lin(q(-1), q(2)), 1}, {lin(q(-2), q(3)), 1}, {lin(q(-3), q(4)), 1}})},
        q(11, 24), {maxexcl({{0, vmul(q(2, 3))}}, Rel::Le, q(19, 32))}, q(32, 19), false));

    // line joining an A1 point and an A2 point
    {
        auto entry = [&](char sub, const char* type, int lines, NC extra) {
            NC n2{{vmul(q(1, 2)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}};
            for (auto& e : extra) n2.push_back(e);
            L.push_back(make(
                "deg2-158-nearA1A2points", sub, type, lines, Line, q(6, 5),
                {piece(q(0), q(1), quad(q(2), q(-2), q(1, 6)), lin(q(1), q(-1, 6)),
                       {{vmul(q(1, 2)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}}),
                 piece(q(1), q(6, 5), quad(q(6), q(-10), q(25, 6)), lin(q(5), q(-25, 6)),
                       std::move(n2))},
                q(8, 15),
                {maxexcl({{0, vmul(q(1, 2))}, {0, vmul(q(2, 3))}}, Rel::Le, q(7, 15))},
                q(15, 8), true));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2)), w3 = lin(q(-3), q(3)),
             w4 = lin(q(-4), q(4));
        entry('a', "A2+A1", 20, {{w1, 4}});
        entry('b', "A2+2A1", 18, {{w2, 1}, {w1, 3}});
        entry('c', "A2+3A1", 13, {{w2, 2}, {w1, 2}});
        entry('d', "2A2+A1", 12, {{w3, 1}, {w2, 1}, {w1, 2}});
        entry('e', "A3+A2+A1", 7, {{w4, 1}, {w3, 1}, {w2, 1}, {w1, 1}});
    }

    // middle curve of an A3 chain (and D-type tails)
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1, NC extra2, bool excl_v) {
            NC n2 = n1;
            for (auto& e : extra2) n2.push_back(e);
            std::vector<StratumCheck> checks{gen(Rel::Eq, q(1, 3))};
            if (excl_v)
                checks.push_back(maxexcl({{0, vmul(q(1))}}, Rel::Le, q(5, 6)));
            else
                checks.push_back(maxall(Rel::Le, q(5, 6)));
            L.push_back(make("deg2-1-middleA3", sub, type, lines, NegTwo, q(2),
                             {piece(q(0), q(1), quad(q(2), q(0), q(-1)), vmul(q(1)), std::move(n1)),
                              piece(q(1), q(2), quad(q(4), q(-4), q(1)), lin(q(2), q(-1)),
                                    std::move(n2))},
                             q(1), std::move(checks), q(1), true));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2));
        entry('a', "A3", 22, {{vmul(q(1, 2)), 2}}, {{w1, 2}}, false);
        entry('b', "A3+A1", 15, {{vmul(q(1, 2)), 2}}, {{w2, 1}, {w1, 1}}, false);
        entry('c', "D4", 14, {{vmul(q(1)), 1}, {vmul(q(1, 2)), 2}}, {{w1, 2}}, true);
        entry('d', "D4+A1", 9, {{vmul(q(1)), 1}, {vmul(q(1, 2)), 2}}, {{w2, 1}, {w1, 1}}, true);
        entry('e', "D5", 8, {{vmul(q(1)), 2}, {vmul(q(1, 2)), 2}}, {{w1, 2}}, true);
        entry('f', "D5+A1", 5, {{vmul(q(1)), 2}, {vmul(q(1, 2)), 2}}, {{w2, 1}, {w1, 1}}, true);
        entry('g', "D6", 3, {{vmul(q(1)), 3}, {vmul(q(1, 2)), 2}}, {{w1, 2}}, true);
        entry('h', "D6+A1", 2, {{vmul(q(1)), 3}, {vmul(q(1, 2)), 2}}, {{w2, 1}, {w1, 1}}, true);
    }

    // end curve of an A3 chain
    {
        auto entry = [&](char sub, const char* type, int lines, NC extra) {
            NC n2{{vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}};
            for (auto& e : extra) n2.push_back(e);
            std::vector<StratumCheck> checks;
            if (sub == 'a')
                checks = {maxexcl({{0, vmul(q(2, 3))}}, Rel::Le, q(1, 2))};
            else
                checks = {gen(Rel::Le, q(1, 2)),
                          maxexcl({{0, vmul(q(2, 3))}}, Rel::Le, q(5, 6))};
            L.push_back(make(
                "deg2-65-A3points", sub, type, lines, NegTwo, q(3, 2),
                {piece(q(0), q(1), quad(q(2), q(0), q(-4, 3)), vmul(q(4, 3)),
                       {{vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}}),
                 piece(q(1), q(3, 2), quad(q(6), q(-8), q(8, 3)), lin(q(4), q(-8, 3)),
                       std::move(n2))},
                q(5, 6), std::move(checks), q(6, 5), true,
                sub == 'a' ? "" : "the 1/2 bound holds off the marked curves; their strata "
                                  "stay below S = 5/6, which the sections use"));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2)), w3 = lin(q(-3), q(3)),
             w4 = lin(q(-4), q(4));
        entry('a', "A3", 22, {{w1, 4}});
        entry('b', "A3+A1", 16, {{w2, 1}, {w1, 3}});
        entry('c', "A3+2A1", 12, {{w2, 2}, {w1, 2}});
        entry('d', "A3+A2", 10, {{w3, 1}, {w2, 1}, {w1, 2}});
        entry('e', "2A3", 6, {{w4, 1}, {w3, 1}, {w2, 1}, {w1, 1}});
    }

    // line through an end of an A3 chain
    L.push_back(make(
        "deg2-7543-nearA3points", 0, "A3", 22, Line, q(1),
        {piece(q(0), q(4, 5), quad(q(2), q(-2), q(-1, 4)), lin(q(1), q(1, 4)),
               {{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 1}, {vmul(q(1, 4)), 1}}),
         piece(q(4, 5), q(1), quad(q(6), q(-12), q(6)), lin(q(6), q(-6)),
               {{lin(q(-1), q(2)), 1},
                {lin(q(-2), q(3)), 1},
                {lin(q(-3), q(4)), 1},
                {lin(q(-4), q(5)), 1}})},
        q(7, 15), {maxexcl({{0, vmul(q(3, 4))}}, Rel::Le, q(43, 75))}, q(75, 43), false));

    // line joining an A1 point and an A3 point (a,b), or through a D5 fork (c,d)
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1, NC extra2,
                         std::vector<std::pair<int, Poly>> excl) {
            NC n2 = n1;
            for (auto& e : extra2) n2.push_back(e);
            L.push_back(make(
                "deg2-95-nearA1A3", sub, type, lines, Line, q(4, 3),
                {piece(q(0), q(1), quad(q(2), q(-2), q(1, 4)), lin(q(1), q(-1, 4)), std::move(n1)),
                 piece(q(1), q(4, 3), quad(q(4), q(-6), q(9, 4)), lin(q(3), q(-9, 4)),
                       std::move(n2))},
                q(5, 9), {maxexcl(std::move(excl), Rel::Le, q(4, 9))}, q(9, 5), true,
                "stated P.A = 1+v/4 corrected to 1-v/4 (forced by P(v)^2)"));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2));
        NC ab{{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 4)), 1}};
        NC cd{{vmul(q(5, 4)), 1}, {vmul(q(3, 2)), 1}, {vmul(q(1)), 1}, {vmul(q(1, 2)), 1},
              {vmul(q(3, 4)), 1}};
        entry('a', "A3+A1", 16, ab, {{w1, 2}}, {{0, vmul(q(3, 4))}, {0, vmul(q(1, 2))}});
        entry('b', "A3+2A1", 11, ab, {{w2, 1}, {w1, 1}}, {{0, vmul(q(3, 4))}, {0, vmul(q(1, 2))}});
        entry('c', "D5", 8, cd, {{w1, 2}},
              {{0, vmul(q(5, 4))}, {0, vmul(q(3, 4))}, {0, vmul(q(1, 2))}});
        entry('d', "D5+A1", 5, cd, {{w2, 1}, {w1, 1}},
              {{0, vmul(q(5, 4))}, {0, vmul(q(3, 4))}, {0, vmul(q(1, 2))}});
    }

    // line through three A1-type chains (one piece up to tau = 2)
    {
        auto entry = [&](char sub, const char* type, int lines, NC nc) {
            L.push_back(make("deg2-32-near3A1points", sub, type, lines, Line, q(2),
                             {piece(q(0), q(2), quad(q(2), q(-2), q(1, 2)), lin(q(1), q(-1, 2)),
                                    std::move(nc))},
                             q(2, 3), {gen(Rel::Eq, q(1, 3))}, q(3, 2), true));
        };
        entry('a', "3A1", 25, {{vmul(q(1, 2)), 3}});
        entry('b', "A3+A1", 15, {{vmul(q(1)), 1}, {vmul(q(1, 2)), 3}});
        entry('c', "2A3", 6, {{vmul(q(3, 4)), 2}, {vmul(q(1, 2)), 2}, {vmul(q(1, 4)), 2}});
        entry('d', "A5", 7, {{vmul(q(3, 2)), 1}, {vmul(q(1)), 2}, {vmul(q(1, 2)), 2}});
        entry('e', "A5+A2", 3,
              {{vmul(q(5, 6)), 1}, {vmul(q(2, 3)), 2}, {vmul(q(1, 2)), 1}, {vmul(q(1, 3)), 2},
               {vmul(q(1, 6)), 1}});
        entry('f', "D4+A1", 9, {{vmul(q(1)), 2}, {vmul(q(1, 2)), 3}});
        entry('g', "D5+A1", 5, {{vmul(q(1)), 3}, {vmul(q(1, 2)), 3}});
        entry('h', "D6", 3, {{vmul(q(2)), 1}, {vmul(q(3, 2)), 2}, {vmul(q(1)), 2}, {vmul(q(1, 2)), 1}});
        entry('i', "D6+A1", 2, {{vmul(q(1)), 4}, {vmul(q(1, 2)), 3}});
        entry('j', "E7", 1,
              {{vmul(q(3)), 1}, {vmul(q(5, 2)), 1}, {vmul(q(2)), 2}, {vmul(q(3, 2)), 2},
               {vmul(q(1)), 1}});
    }

    // line joining an A2 point and an A3 point
    L.push_back(make(
        "deg2-1811-nearA2A3", 0, "A3+A2", 10, Line, q(3, 2),
        {piece(q(0), q(4, 3), quad(q(2), q(-2), q(5, 12)), lin(q(1), q(-5, 12)),
               {{vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}, {vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 1},
                {vmul(q(1, 4)), 1}}),
         piece(q(4, 3), q(3, 2), quad(q(6), q(-8), q(8, 3)), lin(q(4), q(-8, 3)),
               {{vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}, {lin(q(-3), q(3)), 1},
                {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1}, {lin(q(-4), q(3)), 1}})},
        q(11, 18),
        {gen(Rel::Eq, q(10, 27)),
         maxexcl({{0, vmul(q(2, 3))}, {0, vmul(q(3, 4))}}, Rel::Le, q(11, 18))},
        q(18, 11), true));

    // inner curve of an A4 chain
    L.push_back(make(
        "deg2-1213-A4points", 0, "A4", 14, NegTwo, q(2),
        {piece(q(0), q(1), quad(q(2), q(0), q(-5, 6)), vmul(q(5, 6)),
               {{vmul(q(1, 2)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}}),
         piece(q(1), q(3, 2), quad(q(3), q(-2), q(1, 6)), lin(q(1), q(-1, 6)),
               {{vmul(q(1, 2)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1},
                {lin(q(-1), q(1)), 1}}),
         piece(q(3, 2), q(2), quad(q(6), q(-6), q(3, 2)), lin(q(3), q(-3, 2)),
               {{vmul(q(1, 2)), 1}, {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 2},
                {lin(q(-3), q(2)), 1}})},
        q(13, 12),
        {oncoeff(0, vmul(q(2, 3)), Rel::Eq, q(13, 12)),
         oncoeff(1, lin(q(-1), q(1)), Rel::Eq, q(13, 24)), gen(Rel::Le, q(13, 24)),
         maxall(Rel::Le, q(13, 12))},
        q(12, 13), true,
        "the stated 13/24 flag is the stratum at the line pulled in at v = 1"));

    // end curve of an A4 chain
    {
        auto entry = [&](char sub, const char* type, int lines, NC extra2, NC n3tail) {
            NC base{{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 1}, {vmul(q(1, 4)), 1}};
            NC n2 = base;
            for (auto& e : extra2) n2.push_back(e);
            NC n3{{lin(q(-3), q(3)), 1}, {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1},
                  {lin(q(-4), q(3)), 1}};
            for (auto& e : n3tail) n3.push_back(e);
            L.push_back(make(
                "deg2-3631-A4points", sub, type, lines, NegTwo, q(3, 2),
                {piece(q(0), q(1), quad(q(2), q(0), q(-5, 4)), vmul(q(5, 4)), std::move(base)),
                 piece(q(1), q(4, 3), quad(q(5), q(-6), q(7, 4)), lin(q(3), q(-7, 4)),
                       std::move(n2)),
                 piece(q(4, 3), q(3, 2), quad(q(9), q(-12), q(4)), lin(q(6), q(-4)),
                       std::move(n3))},
                q(31, 36), {maxexcl({{0, vmul(q(3, 4))}}, Rel::Le, q(13, 18))}, q(36, 31), true));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2)), w3 = lin(q(-3), q(3));
        entry('a', "A4", 14, {{w1, 3}}, {{w1, 3}});
        entry('b', "A4+A1", 10, {{w2, 1}, {w1, 2}}, {{w2, 1}, {w1, 2}});
        entry('c', "A4+A2", 6, {{w3, 1}, {w2, 1}, {w1, 1}}, {{w3, 1}, {w2, 1}, {w1, 1}});
    }

    // line through an end of an A4 chain
    {
        auto entry = [&](char sub, const char* type, int lines, NC extra) {
            NC base{{vmul(q(6, 5)), 1}, {vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1},
                    {vmul(q(2, 5)), 1}};
            NC n2 = base;
            for (auto& e : extra) n2.push_back(e);
            L.push_back(make(
                "deg2-2413-nearA4points", sub, type, lines, Line, q(5, 4),
                {piece(q(0), q(1), quad(q(2), q(-2), q(1, 5)), lin(q(1), q(-1, 5)),
                       std::move(base)),
                 piece(q(1), q(5, 4), quad(q(5), q(-8), q(16, 5)), lin(q(4), q(-16, 5)),
                       std::move(n2))},
                q(13, 24), {maxexcl({{0, vmul(q(6, 5))}}, Rel::Le, q(11, 24))}, q(24, 13), true));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2)), w3 = lin(q(-3), q(3));
        entry('a', "A4", 14, {{w1, 3}});
        entry('b', "A4+A1", 10, {{w2, 1}, {w1, 2}});
        entry('c', "A4+A2", 6, {{w3, 1}, {w2, 1}, {w1, 1}});
    }

    // line through an inner node of an A4 chain
    L.push_back(make(
        "deg2-216121-nearA4point", 0, "A4", 14, Line, q(1),
        {piece(q(0), q(5, 6), quad(q(2), q(-2), q(-1, 5)), lin(q(1), q(1, 5)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1}}),
         piece(q(5, 6), q(1), quad(q(7), q(-14), q(7)), lin(q(7), q(-7)),
               {{lin(q(-1), q(2)), 1}, {lin(q(-2), q(3)), 1}, {lin(q(-3), q(4)), 1},
                {lin(q(-4), q(5)), 1}, {lin(q(-5), q(6)), 1}})},
        q(17, 36), {maxexcl({{0, vmul(q(4, 5))}}, Rel::Le, q(121, 216))}, q(216, 121), false));

    // line joining an A1 point and an A4 point
    L.push_back(make(
        "deg2-7241-nearA1A4", 0, "A4+A1", 10, Line, q(4, 3),
        {piece(q(0), q(1), quad(q(2), q(-2), q(3, 10)), lin(q(1), q(-3, 10)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {vmul(q(1, 2)), 1}}),
         piece(q(1), q(5, 4), quad(q(3), q(-4), q(13, 10)), lin(q(2), q(-13, 10)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {vmul(q(1, 2)), 1}, {lin(q(-1), q(1)), 1}}),
         piece(q(5, 4), q(4, 3), quad(q(8), q(-12), q(9, 2)), lin(q(6), q(-9, 2)),
               {{lin(q(-4), q(4)), 1}, {lin(q(-3), q(3)), 1}, {lin(q(-2), q(2)), 1},
                {lin(q(-1), q(1)), 2}, {vmul(q(1, 2)), 1}, {lin(q(-5), q(4)), 1}})},
        q(41, 72),
        {maxexcl({{0, vmul(q(4, 5))}, {0, vmul(q(1, 2))}}, Rel::Le, q(61, 144))}, q(72, 41),
        true));

    // line joining an A2 point and an A4 point
    L.push_back(make(
        "deg2-3623-nearA2A4", 0, "A4+A2", 6, Line, q(5, 3),
        {piece(q(0), q(3, 2), quad(q(2), q(-2), q(7, 15)), lin(q(1), q(-7, 15)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}}),
         piece(q(3, 2), q(5, 3), quad(q(5), q(-6), q(9, 5)), lin(q(3), q(-9, 5)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1}, {lin(q(-3), q(2)), 1}})},
        q(23, 36), {maxexcl({{0, vmul(q(4, 5))}, {0, vmul(q(2, 3))}}, Rel::Le, q(7, 20))},
        q(36, 23), true,
        "stated (v/2)(2B2+C2) fails orthogonality against B2; (v/3)(2B2+C2) is forced"));

    // middle curve of an A5 chain, tau = 2 variant
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1, NC n2) {
            L.push_back(make("deg2-67-themiddleA5points", sub, type, lines, NegTwo, q(2),
                             {piece(q(0), q(3, 2), quad(q(2), q(0), q(-2, 3)), vmul(q(2, 3)),
                                    std::move(n1)),
                              piece(q(3, 2), q(2), quad(q(8), q(-8), q(2)), lin(q(4), q(-2)),
                                    std::move(n2))},
                             q(7, 6),
                             {sub == 'a' ? maxall(Rel::Le, q(7, 6))
                                         : maxexcl({{0, vmul(q(4, 3))}}, Rel::Le, q(7, 6))},
                             q(6, 7), true));
        };
        entry('a', "A5", 8, {{vmul(q(2, 3)), 2}, {vmul(q(1, 3)), 2}},
              {{lin(q(-2), q(2)), 2}, {lin(q(-1), q(1)), 2}, {lin(q(-3), q(2)), 2}});
        entry('b', "D6", 3,
              {{vmul(q(4, 3)), 1}, {vmul(q(1)), 1}, {vmul(q(2, 3)), 2}, {vmul(q(1, 3)), 1}},
              {{lin(q(-4), q(4)), 1}, {lin(q(-3), q(3)), 1}, {lin(q(-2), q(2)), 1},
               {lin(q(-1), q(1)), 1}, {lin(q(-5), q(4)), 1}, {lin(q(-6), q(4)), 1}});
    }

    // second curve of an A5 chain
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1,
                         std::vector<std::pair<int, Poly>> excl) {
            NC n2 = n1;
            n2.push_back({lin(q(-1), q(1)), 1});
            L.push_back(make("deg2-67-A5points", sub, type, lines, NegTwo, q(2),
                             {piece(q(0), q(1), quad(q(2), q(0), q(-3, 4)), vmul(q(3, 4)),
                                    std::move(n1)),
                              piece(q(1), q(2), quad(q(3), q(-2), q(1, 4)), lin(q(1), q(-1, 4)),
                                    std::move(n2))},
                             q(7, 6), {maxexcl(std::move(excl), Rel::Le, q(7, 8))}, q(6, 7),
                             true));
        };
        entry('a', "A5", 8, {{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 4)), 1}},
              {{0, vmul(q(3, 4))}});
        entry('b', "E6", 4,
              {{vmul(q(5, 4)), 1}, {vmul(q(3, 2)), 1}, {vmul(q(1)), 1}, {vmul(q(1, 2)), 1},
               {vmul(q(3, 4)), 1}},
              {{0, vmul(q(5, 4))}});
    }

    // end curve of an A5 chain, 8-line variant
    {
        auto entry = [&](char sub, const char* type, int lines, NC extra2, NC n3tail) {
            NC base{{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1},
                    {vmul(q(1, 5)), 1}};
            NC n2 = base;
            for (auto& e : extra2) n2.push_back(e);
            NC n3{{lin(q(-4), q(4)), 1}, {lin(q(-3), q(3)), 1}, {lin(q(-5), q(4)), 1}};
            for (auto& e : n3tail) n3.push_back(e);
            L.push_back(make(
                "deg2-87-A5points", sub, type, lines, NegTwo, q(3, 2),
                {piece(q(0), q(1), quad(q(2), q(0), q(-6, 5)), vmul(q(6, 5)), std::move(base)),
                 piece(q(1), q(5, 4), quad(q(4), q(-4), q(4, 5)), lin(q(2), q(-4, 5)),
                       std::move(n2)),
                 piece(q(5, 4), q(3, 2), quad(q(9), q(-12), q(4)), lin(q(6), q(-4)),
                       std::move(n3))},
                q(7, 8), {maxexcl({{0, vmul(q(4, 5))}}, Rel::Le, q(7, 12))}, q(8, 7), true));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2));
        entry('a', "A5", 8, {{w1, 2}}, {{w2, 1}, {w1, 3}});
        entry('b', "A5+A1", 6, {{w2, 1}, {w1, 1}}, {{w2, 2}, {w1, 2}});
    }

    // line through an end of an A5 chain
    L.push_back(make(
        "deg2-4927-nearA5", 0, "A5", 8, Line, q(1),
        {piece(q(0), q(6, 7), quad(q(2), q(-2), q(-1, 6)), lin(q(1), q(1, 6)),
               {{vmul(q(5, 6)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 2)), 1}, {vmul(q(1, 3)), 1},
                {vmul(q(1, 6)), 1}}),
         piece(q(6, 7), q(1), quad(q(8), q(-16), q(8)), lin(q(8), q(-8)),
               {{lin(q(-1), q(2)), 1}, {lin(q(-2), q(3)), 1}, {lin(q(-3), q(4)), 1},
                {lin(q(-4), q(5)), 1}, {lin(q(-5), q(6)), 1}, {lin(q(-6), q(7)), 1}})},
        q(10, 21), {maxexcl({{0, vmul(q(5, 6))}}, Rel::Le, q(27, 49))}, q(49, 27), false));

    // line joining two A2 points, or through deeper chains
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1,
                         std::vector<std::pair<int, Poly>> excl) {
            NC n2 = n1;
            n2.push_back({lin(q(-1), q(1)), 1});
            L.push_back(make("deg2-127-nearA5", sub, type, lines, Line, q(3, 2),
                             {piece(q(0), q(1), quad(q(2), q(-2), q(1, 3)), lin(q(1), q(-1, 3)),
                                    std::move(n1)),
                              piece(q(1), q(3, 2), quad(q(3), q(-4), q(4, 3)), lin(q(2), q(-4, 3)),
                                    std::move(n2))},
                             q(7, 12), {maxexcl(std::move(excl), Rel::Le, q(5, 12))}, q(12, 7),
                             true));
        };
        entry('a', "2A2", 16, {{vmul(q(2, 3)), 2}, {vmul(q(1, 3)), 2}}, {{0, vmul(q(2, 3))}});
        entry('b', "A5", 8,
              {{vmul(q(4, 3)), 1}, {vmul(q(1)), 1}, {vmul(q(2, 3)), 2}, {vmul(q(1, 3)), 1}},
              {{0, vmul(q(4, 3))}});
        entry('c', "A5+A1", 6,
              {{vmul(q(5, 6)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 3)), 1},
               {vmul(q(1, 6)), 1}},
              {{0, vmul(q(5, 6))}, {0, vmul(q(1, 2))}});
        entry('d', "E6", 4,
              {{vmul(q(2)), 1}, {vmul(q(5, 3)), 1}, {vmul(q(4, 3)), 2}, {vmul(q(1)), 1},
               {vmul(q(2, 3)), 1}},
              {{0, vmul(q(4, 3))}});
    }

    // middle curve of an A5 chain, tau = 3 variant
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1,
                         std::vector<std::pair<int, Poly>> excl) {
            NC n2 = n1;
            n2.push_back({lin(q(-1), q(1)), 1});
            std::vector<std::pair<int, Poly>> deep;  // neighbours with their own flags
            if (sub == 'b') deep = {{0, vmul(q(5, 6))}};
            if (sub == 'c' || sub == 'd') deep = {{0, vmul(q(4, 3))}};
            L.push_back(make(
                "deg2-34-themiddleA5point", sub, type, lines, NegTwo, q(3),
                {piece(q(0), q(1), quad(q(2), q(0), q(-2, 3)), vmul(q(2, 3)), std::move(n1)),
                 piece(q(1), q(3), quad(q(3), q(-2), q(1, 3)), lin(q(1), q(-1, 3)),
                       std::move(n2))},
                q(4, 3),
                {maxexcl(deep, Rel::Le, q(10, 9)), maxexcl(std::move(excl), Rel::Le, q(2, 3))},
                q(3, 4), true));
        };
        entry('a', "A5", 7, {{vmul(q(2, 3)), 2}, {vmul(q(1, 3)), 2}}, {{0, vmul(q(2, 3))}});
        entry('b', "A7", 2,
              {{vmul(q(5, 6)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 3)), 1},
               {vmul(q(1, 6)), 1}},
              {{0, vmul(q(5, 6))}, {0, vmul(q(1, 2))}});
        entry('c', "D6", 3,
              {{vmul(q(4, 3)), 1}, {vmul(q(1)), 1}, {vmul(q(2, 3)), 2}, {vmul(q(1, 3)), 1}},
              {{0, vmul(q(4, 3))}, {0, vmul(q(2, 3))}});
        entry('d', "E7", 1,
              {{vmul(q(2)), 1}, {vmul(q(5, 3)), 1}, {vmul(q(4, 3)), 2}, {vmul(q(1)), 1},
               {vmul(q(2, 3)), 1}},
              {{0, vmul(q(4, 3))}});
    }

    // second curve of an A5 chain, 7-line variant
    L.push_back(make(
        "deg2-910-A5points", 0, "A5", 7, NegTwo, q(2),
        {piece(q(0), q(4, 3), quad(q(2), q(0), q(-3, 4)), vmul(q(3, 4)),
               {{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 4)), 1}}),
         piece(q(4, 3), q(2), quad(q(6), q(-6), q(3, 2)), lin(q(3), q(-3, 2)),
               {{vmul(q(1, 2)), 1}, {lin(q(-3), q(3)), 1}, {lin(q(-2), q(2)), 1},
                {lin(q(-1), q(1)), 1}, {lin(q(-4), q(3)), 1}})},
        q(10, 9), {maxexcl({{0, vmul(q(3, 4))}}, Rel::Le, q(8, 9))}, q(9, 10), true));

    // end curve of an A5 chain, 7-line variant
    {
        auto entry = [&](char sub, const char* type, int lines, NC extra) {
            NC base{{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1},
                    {vmul(q(1, 5)), 1}};
            NC n2 = base;
            for (auto& e : extra) n2.push_back(e);
            L.push_back(make(
                "deg2-98-A5points", sub, type, lines, NegTwo, q(5, 3),
                {piece(q(0), q(1), quad(q(2), q(0), q(-6, 5)), vmul(q(6, 5)), std::move(base)),
                 piece(q(1), q(5, 3), quad(q(5), q(-6), q(9, 5)), lin(q(3), q(-9, 5)),
                       std::move(n2))},
                q(8, 9), {maxexcl({{0, vmul(q(4, 5))}}, Rel::Le, q(2, 3))}, q(9, 8), true));
        };
        Poly w1 = lin(q(-1), q(1)), w2 = lin(q(-2), q(2)), w3 = lin(q(-3), q(3));
        entry('a', "A5", 7, {{w1, 3}});
        entry('b', "A5+A1", 5, {{w2, 1}, {w1, 2}});
        entry('c', "A5+A2", 3, {{w3, 1}, {w2, 1}, {w1, 1}});
    }

    // line joining an A1 point and an A5 point
    L.push_back(make(
        "deg2-4526-nearA1A5", 0, "A5+A1", 5, Line, q(4, 3),
        {piece(q(0), q(6, 5), quad(q(2), q(-2), q(1, 3)), lin(q(1), q(-1, 3)),
               {{vmul(q(5, 6)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 3)), 1},
                {vmul(q(1, 6)), 1}}),
         piece(q(6, 5), q(4, 3), quad(q(8), q(-12), q(9, 2)), lin(q(6), q(-9, 2)),
               {{vmul(q(1, 2)), 1}, {lin(q(-5), q(5)), 1}, {lin(q(-4), q(4)), 1},
                {lin(q(-3), q(3)), 1}, {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1},
                {lin(q(-6), q(5)), 1}})},
        q(26, 45), {maxexcl({{0, vmul(q(5, 6))}, {0, vmul(q(1, 2))}}, Rel::Le, q(2, 5))},
        q(45, 26), true,
        "stated (3v-4)C1' is negative at v = 6/5; continuity forces (5v-6)"));

    // one-piece carriers with tau = 2 (A7 middle, D/E tails)
    {
        auto entry = [&](char sub, const char* type, int lines, NC nc,
                         std::vector<StratumCheck> checks) {
            L.push_back(make("deg2-34-A7points", sub, type, lines, NegTwo, q(2),
                             {piece(q(0), q(2), quad(q(2), q(0), q(-1, 2)), vmul(q(1, 2)),
                                    std::move(nc))},
                             q(4, 3), std::move(checks), q(3, 4), true));
        };
        entry('a', "A7", 2, {{vmul(q(3, 4)), 2}, {vmul(q(1, 2)), 2}, {vmul(q(1, 4)), 2}},
              {oncoeff(0, vmul(q(3, 4)), Rel::Eq, q(4, 3)), maxall(Rel::Le, q(4, 3))});
        entry('b', "D4", 14, {{vmul(q(1, 2)), 3}}, {maxall(Rel::Le, q(4, 3))});
        entry('c', "D5", 8, {{vmul(q(1)), 1}, {vmul(q(1, 2)), 3}},
              {maxexcl({{0, vmul(q(1))}}, Rel::Le, q(4, 3))});
        entry('d', "D6", 3, {{vmul(q(1)), 2}, {vmul(q(1, 2)), 3}},
              {maxexcl({{0, vmul(q(1))}}, Rel::Le, q(4, 3))});
        entry('e', "E6", 4, {{vmul(q(3, 2)), 1}, {vmul(q(1)), 2}, {vmul(q(1, 2)), 2}},
              {maxexcl({{0, vmul(q(3, 2))}}, Rel::Le, q(4, 3))});
        entry('f', "E7", 1, {{vmul(q(3, 2)), 2}, {vmul(q(2)), 1}, {vmul(q(1)), 2},
                             {vmul(q(1, 2)), 1}},
              {maxexcl({{0, vmul(q(3, 2))}}, Rel::Le, q(4, 3))});
    }

    // center of a D5 fork
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1, NC n2) {
            L.push_back(make(
                "deg2-35-D5points", sub, type, lines, NegTwo, q(3),
                {piece(q(0), q(2), quad(q(2), q(0), q(-1, 3)), vmul(q(1, 3)), std::move(n1)),
                 piece(q(2), q(3), quad(q(6), q(-4), q(2, 3)), lin(q(2), q(-2, 3)),
                       std::move(n2))},
                q(5, 3),
                {oncoeff(0, vmul(q(2, 3)), Rel::Le, q(4, 3)),
                 maxexcl({{0, vmul(q(2, 3))}, {0, vmul(q(1))}}, Rel::Le, q(10, 9))},
                q(3, 5), true));
        };
        entry('a', "D5", 8, {{vmul(q(2, 3)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 3)), 1}},
              {{vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}, {lin(q(-1), q(1)), 2},
               {lin(q(-2), q(1)), 2}});
        entry('b', "D6", 3,
              {{vmul(q(1)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}},
              {{vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}, {lin(q(-1), q(1)), 1},
               {lin(q(-2), q(2)), 1}, {lin(q(-3), q(2)), 1}, {lin(q(-4), q(2)), 1}});
    }

    // fork leaf of a D5
    L.push_back(make(
        "deg2-910-D5point", 0, "D5", 8, NegTwo, q(2),
        {piece(q(0), q(1), quad(q(2), q(0), q(-4, 5)), vmul(q(4, 5)),
               {{vmul(q(6, 5)), 1}, {vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}}),
         piece(q(1), q(5, 3), quad(q(3), q(-2), q(1, 5)), lin(q(1), q(-1, 5)),
               {{vmul(q(6, 5)), 1}, {vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1},
                {lin(q(-1), q(1)), 1}}),
         piece(q(5, 3), q(2), quad(q(8), q(-8), q(2)), lin(q(4), q(-2)),
               {{lin(q(-3), q(3)), 1}, {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 2},
                {lin(q(-4), q(3)), 1}, {lin(q(-5), q(3)), 1}})},
        q(10, 9), {maxexcl({{0, vmul(q(6, 5))}}, Rel::Le, q(5, 9))}, q(9, 10), true));

    // second chain curve of a D6
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1, NC n2) {
            L.push_back(make("deg2-12-D6points", sub, type, lines, NegTwo, q(4),
                             {piece(q(0), q(2), quad(q(2), q(0), q(-1, 4)), vmul(q(1, 4)),
                                    std::move(n1)),
                              piece(q(2), q(4), quad(q(4), q(-2), q(1, 4)), lin(q(1), q(-1, 4)),
                                    std::move(n2))},
                             q(2),
                             {sub == 'a' ? maxall(Rel::Le, q(5, 3))
                                         : maxexcl({{0, vmul(q(5, 4))}}, Rel::Le, q(5, 3))},
                             q(1, 2), true));
        };
        entry('a', "D6", 3, {{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 3}, {vmul(q(1, 4)), 1}},
              {{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 4)), 1},
               {lin(q(-1), q(1)), 1}, {lin(q(-2), q(1)), 1}});
        entry('b', "E7", 1,
              {{vmul(q(1, 2)), 2}, {vmul(q(1)), 1}, {vmul(q(3, 2)), 1}, {vmul(q(5, 4)), 1},
               {vmul(q(3, 4)), 1}},
              {{vmul(q(1, 2)), 1}, {vmul(q(1)), 1}, {vmul(q(3, 2)), 1}, {vmul(q(5, 4)), 1},
               {vmul(q(3, 4)), 1}, {lin(q(-1), q(1)), 1}, {lin(q(-2), q(1)), 1}});
    }

    // central curves of E6 / E7
    {
        auto entry = [&](char sub, const char* type, int lines, NC n1, NC n2) {
            L.push_back(make(
                "deg2-37-points", sub, type, lines, NegTwo, q(4),
                {piece(q(0), q(3), quad(q(2), q(0), q(-1, 6)), vmul(q(1, 6)), std::move(n1)),
                 piece(q(3), q(4), quad(q(8), q(-4), q(1, 2)), lin(q(2), q(-1, 2)),
                       std::move(n2))},
                q(7, 3),
                {maxexcl({{0, vmul(sub == 'a' ? q(2, 3) : q(4, 3))}}, Rel::Le, q(4, 3))},
                q(3, 7), true,
                sub == 'a' ? "stated multiset (v/6)(3,2,3,3,2) corrected to (v/6)(3,4,4,2,2); "
                             "forced by P(v).A = v/6"
                           : ""));
        };
        entry('a', "E6", 4,
              {{vmul(q(1, 2)), 1}, {vmul(q(2, 3)), 2}, {vmul(q(1, 3)), 2}},
              {{vmul(q(1, 2)), 1}, {lin(q(-1), q(1)), 2}, {lin(q(-2), q(1)), 2},
               {lin(q(-3), q(1)), 2}});
        entry('b', "E7", 1,
              {{vmul(q(1, 2)), 1}, {vmul(q(4, 3)), 1}, {vmul(q(1)), 1}, {vmul(q(2, 3)), 2},
               {vmul(q(1, 3)), 1}},
              {{vmul(q(1, 2)), 1}, {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1},
               {lin(q(-3), q(2)), 1}, {lin(q(-4), q(2)), 1}, {lin(q(-5), q(2)), 1},
               {lin(q(-6), q(2)), 1}});
    }

    // the two middle curves of an A6 chain
    L.push_back(make(
        "deg2-45-middleA6points", 0, "A6", 4, NegTwo, q(2),
        {piece(q(0), q(3, 2), quad(q(2), q(0), q(-7, 12)), vmul(q(7, 12)),
               {{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 1}, {vmul(q(1, 4)), 1}, {vmul(q(2, 3)), 1},
                {vmul(q(1, 3)), 1}}),
         piece(q(3, 2), q(2), quad(q(5), q(-4), q(3, 4)), lin(q(2), q(-3, 4)),
               {{vmul(q(3, 4)), 1}, {vmul(q(1, 2)), 1}, {vmul(q(1, 4)), 1},
                {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1}, {lin(q(-3), q(2)), 1}})},
        q(5, 4), {maxall(Rel::Le, q(5, 4))}, q(4, 5), true));

    // second curve of an A6 chain
    L.push_back(make(
        "deg2-45-NOTmiidleA6points", 0, "A6", 4, NegTwo, q(5, 2),
        {piece(q(0), q(1), quad(q(2), q(0), q(-7, 10)), vmul(q(7, 10)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {vmul(q(1, 2)), 1}}),
         piece(q(1), q(2), quad(q(3), q(-2), q(3, 10)), lin(q(1), q(-3, 10)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {vmul(q(1, 2)), 1}, {lin(q(-1), q(1)), 1}}),
         piece(q(2), q(5, 2), quad(q(5), q(-4), q(4, 5)), lin(q(2), q(-4, 5)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {lin(q(-1), q(1)), 2}, {lin(q(-2), q(1)), 1}})},
        q(5, 4), {maxexcl({{0, vmul(q(4, 5))}}, Rel::Le, q(53, 60))}, q(4, 5), true,
        "first N interval misprinted [0,2]; P data gives [0,1]"));

    // end curve of an A6 chain
    L.push_back(make(
        "deg2-6053-A6points", 0, "A6", 4, NegTwo, q(3, 2),
        {piece(q(0), q(1), quad(q(2), q(0), q(-7, 6)), vmul(q(7, 6)),
               {{vmul(q(5, 6)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 2)), 1}, {vmul(q(1, 3)), 1},
                {vmul(q(1, 6)), 1}}),
         piece(q(1), q(6, 5), quad(q(3), q(-2), q(-1, 6)), lin(q(1), q(1, 6)),
               {{vmul(q(5, 6)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 2)), 1}, {vmul(q(1, 3)), 1},
                {vmul(q(1, 6)), 1}, {lin(q(-1), q(1)), 1}}),
         piece(q(6, 5), q(3, 2), quad(q(9), q(-12), q(4)), lin(q(6), q(-4)),
               {{lin(q(-5), q(5)), 1}, {lin(q(-4), q(4)), 1}, {lin(q(-3), q(3)), 1},
                {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 2}, {lin(q(-6), q(5)), 1}})},
        q(53, 60), {maxexcl({{0, vmul(q(5, 6))}}, Rel::Le, q(31, 60))}, q(60, 53), true));

    // line through the third node of an A6 chain
    L.push_back(make(
        "deg2-6037-nearA6points", 0, "A6", 4, Line, q(3, 2),
        {piece(q(0), q(7, 5), quad(q(2), q(-2), q(3, 7)), lin(q(1), q(-3, 7)),
               {{vmul(q(10, 7)), 1}, {vmul(q(8, 7)), 1}, {vmul(q(6, 7)), 1}, {vmul(q(5, 7)), 1},
                {vmul(q(4, 7)), 1}, {vmul(q(2, 7)), 1}}),
         piece(q(7, 5), q(3, 2), quad(q(9), q(-12), q(4)), lin(q(6), q(-4)),
               {{lin(q(-5), q(5)), 1}, {lin(q(-4), q(4)), 1}, {lin(q(-3), q(3)), 1},
                {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1}, {lin(q(-6), q(5)), 1},
                {lin(q(-7), q(5)), 1}})},
        q(37, 60), {maxexcl({{0, vmul(q(10, 7))}}, Rel::Le, q(11, 30))}, q(60, 37), true,
        "stated (v-1)(2F+4E+6D+8C+10B) is discontinuous at v = 7/5; halved coefficients "
        "are forced"));

    // line through an end of an A6 chain
    L.push_back(make(
        "deg2-384209-nearA6points", 0, "A6", 4, Line, q(1),
        {piece(q(0), q(7, 8), quad(q(2), q(-2), q(-1, 7)), lin(q(1), q(1, 7)),
               {{vmul(q(6, 7)), 1}, {vmul(q(5, 7)), 1}, {vmul(q(4, 7)), 1}, {vmul(q(3, 7)), 1},
                {vmul(q(2, 7)), 1}, {vmul(q(1, 7)), 1}}),
         piece(q(7, 8), q(1), quad(q(9), q(-18), q(9)), lin(q(9), q(-9)),
               {{lin(q(-1), q(2)), 1}, {lin(q(-2), q(3)), 1}, {lin(q(-3), q(4)), 1},
                {lin(q(-4), q(5)), 1}, {lin(q(-5), q(6)), 1}, {lin(q(-6), q(7)), 1},
                {lin(q(-7), q(8)), 1}})},
        q(23, 48), {maxexcl({{0, vmul(q(6, 7))}}, Rel::Le, q(209, 384))}, q(384, 209), false));

    // second curves of the E6 chain
    L.push_back(make(
        "deg2-47-points", 0, "E6", 4, NegTwo, q(3),
        {piece(q(0), q(2), quad(q(2), q(0), q(-3, 10)), vmul(q(3, 10)),
               {{vmul(q(6, 5)), 1}, {vmul(q(4, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(3, 5)), 1},
                {vmul(q(1, 2)), 1}}),
         piece(q(2), q(5, 2), quad(q(4), q(-2), q(1, 5)), lin(q(1), q(-1, 5)),
               {{vmul(q(6, 5)), 1}, {vmul(q(4, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(3, 5)), 1},
                {lin(q(-1), q(1)), 1}, {lin(q(-2), q(1)), 1}}),
         piece(q(5, 2), q(3), quad(q(9), q(-6), q(1)), lin(q(3), q(-1)),
               {{lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 2}, {lin(q(-2), q(1)), 1},
                {lin(q(-3), q(2)), 1}, {lin(q(-4), q(2)), 1}, {lin(q(-5), q(2)), 1}})},
        q(7, 4), {maxexcl({{0, vmul(q(6, 5))}}, Rel::Le, q(7, 6))}, q(4, 7), true));

    // E7: central node
    L.push_back(make(
        "deg2-310-points", 0, "E7", 1, NegTwo, q(6),
        {piece(q(0), q(4), quad(q(2), q(0), q(-1, 12)), vmul(q(1, 12)),
               {{vmul(q(3, 4)), 1}, {vmul(q(2, 3)), 1}, {vmul(q(1, 2)), 2}, {vmul(q(1, 3)), 1},
                {vmul(q(1, 4)), 1}}),
         piece(q(4), q(6), quad(q(6), q(-2), q(1, 6)), lin(q(1), q(-1, 6)),
               {{vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}, {vmul(q(1, 2)), 1},
                {lin(q(-1), q(1)), 1}, {lin(q(-2), q(1)), 1}, {lin(q(-3), q(1)), 1},
                {lin(q(-4), q(1)), 1}})},
        q(10, 3), {maxall(Rel::Le, q(8, 3))}, q(3, 10), true));

    // E7: branch leaf
    L.push_back(make(
        "deg2-916-points", 0, "E7", 1, NegTwo, q(3),
        {piece(q(0), q(7, 3), quad(q(2), q(0), q(-2, 7)), vmul(q(2, 7)),
               {{vmul(q(4, 7)), 1}, {vmul(q(8, 7)), 1}, {vmul(q(12, 7)), 1}, {vmul(q(9, 7)), 1},
                {vmul(q(6, 7)), 1}, {vmul(q(3, 7)), 1}}),
         piece(q(7, 3), q(3), quad(q(9), q(-6), q(1)), lin(q(3), q(-1)),
               {{lin(q(-1), q(1)), 1}, {lin(q(-2), q(2)), 1}, {lin(q(-3), q(3)), 1},
                {lin(q(-4), q(3)), 1}, {lin(q(-5), q(3)), 1}, {lin(q(-6), q(3)), 1},
                {lin(q(-7), q(3)), 1}})},
        q(16, 9), {maxexcl({{0, vmul(q(12, 7))}}, Rel::Le, q(2, 9))}, q(9, 16), true,
        "statement misprints delta as 3/10; the proof concludes 9/16"));

    // E7: second node of the long arm
    L.push_back(make(
        "deg2-38-points", 0, "E7", 1, NegTwo, q(5),
        {piece(q(0), q(3), quad(q(2), q(0), q(-2, 15)), vmul(q(2, 15)),
               {{vmul(q(2, 5)), 1}, {vmul(q(4, 5)), 1}, {vmul(q(6, 5)), 1}, {vmul(q(3, 5)), 1},
                {vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}}),
         piece(q(3), q(5), quad(q(5), q(-2), q(1, 5)), lin(q(1), q(-1, 5)),
               {{vmul(q(2, 5)), 1}, {vmul(q(4, 5)), 1}, {vmul(q(6, 5)), 1}, {vmul(q(3, 5)), 1},
                {lin(q(-1), q(1)), 1}, {lin(q(-2), q(1)), 1}, {lin(q(-3), q(1)), 1}})},
        q(8, 3), {maxexcl({{0, vmul(q(6, 5))}}, Rel::Le, q(21, 10))}, q(3, 8), true));

    // A7: third node
    L.push_back(make(
        "deg2-34-onlyinA7points", 0, "A7", 2, NegTwo, q(5, 2),
        {piece(q(0), q(3, 2), quad(q(2), q(0), q(-8, 15)), vmul(q(8, 15)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {vmul(q(2, 3)), 1}, {vmul(q(1, 3)), 1}}),
         piece(q(3, 2), q(5, 2), quad(q(5), q(-4), q(4, 5)), lin(q(2), q(-4, 5)),
               {{vmul(q(4, 5)), 1}, {vmul(q(3, 5)), 1}, {vmul(q(2, 5)), 1}, {vmul(q(1, 5)), 1},
                {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1}, {lin(q(-3), q(2)), 1}})},
        q(4, 3), {maxexcl({{0, vmul(q(4, 5))}}, Rel::Le, q(4, 3))}, q(3, 4), true,
        "Psq display top interval misprinted [3/2,2]; tau = 5/2"));

    // A7: end node
    L.push_back(make(
        "deg2-98-A7points", 0, "A7", 2, NegTwo, q(3, 2),
        {piece(q(0), q(7, 6), quad(q(2), q(0), q(-8, 7)), vmul(q(8, 7)),
               {{vmul(q(6, 7)), 1}, {vmul(q(5, 7)), 1}, {vmul(q(4, 7)), 1}, {vmul(q(3, 7)), 1},
                {vmul(q(2, 7)), 1}, {vmul(q(1, 7)), 1}}),
         piece(q(7, 6), q(3, 2), quad(q(9), q(-12), q(4)), lin(q(6), q(-4)),
               {{lin(q(-6), q(6)), 1}, {lin(q(-5), q(5)), 1}, {lin(q(-4), q(4)), 1},
                {lin(q(-3), q(3)), 1}, {lin(q(-2), q(2)), 1}, {lin(q(-1), q(1)), 1},
                {lin(q(-7), q(6)), 1}})},
        q(8, 9), {maxexcl({{0, vmul(q(6, 7))}}, Rel::Le, q(4, 9))}, q(9, 8), true));

    return L;
}

}  // namespace

const std::vector<LemmaSpec>& lemma_catalog() {
    static const std::vector<LemmaSpec> catalog = build_catalog();
    return catalog;
}

const std::map<std::pair<std::string, int>, std::vector<std::string>>& section_lemma_map() {
    static const std::map<std::pair<std::string, int>, std::vector<std::string>> m = {
        {{"A1", 44}, {"deg2-32-A1points", "deg2-2717-nearA1points"}},
        {{"2A1", 34},
         {"deg2-32-A1points", "deg2-2-near2A1points.a", "deg2-2717-nearA1points"}},
        {{"3A1", 26},
         {"deg2-32-A1points", "deg2-2-near2A1points.a", "deg2-2717-nearA1points"}},
        {{"3A1", 25},
         {"deg2-32-A1points", "deg2-32-near3A1points.a", "deg2-2717-nearA1points"}},
        {{"4A1", 20}, {"deg2-32-A1points", "deg2-2-near2A1points.a"}},
        {{"4A1", 19},
         {"deg2-32-A1points", "deg2-32-near3A1points.a", "deg2-2-near2A1points.a",
          "deg2-2717-nearA1points"}},
        {{"5A1", 14},
         {"deg2-32-A1points", "deg2-32-near3A1points.a", "deg2-2-near2A1points.a",
          "deg2-2717-nearA1points"}},
        {{"6A1", 10},
         {"deg2-32-A1points", "deg2-32-near3A1points.a", "deg2-2-near2A1points.a"}},
        {{"A2", 31},
         {"deg2-65-A2points", "deg2-97-A2points.a", "deg2-3219-nearA2points"}},
        {{"A2+A1", 20},
         {"deg2-65-A2points", "deg2-97-A2points.b", "deg2-3219-nearA2points",
          "deg2-32-A1points", "deg2-158-nearA1A2points.a", "deg2-2717-nearA1points"}},
        {{"A2+2A1", 18},
         {"deg2-65-A2points", "deg2-97-A2points.c", "deg2-32-A1points",
          "deg2-158-nearA1A2points.b", "deg2-2-near2A1points.a", "deg2-2717-nearA1points",
          "deg2-3219-nearA2points"}},
        {{"A2+3A1", 13},
         {"deg2-65-A2points", "deg2-97-A2points.d", "deg2-32-A1points",
          "deg2-32-near3A1points.a", "deg2-158-nearA1A2points.c", "deg2-2717-nearA1points"}},
        {{"2A2", 16},
         {"deg2-65-A2points", "deg2-97-A2points.e", "deg2-127-nearA5.a",
          "deg2-3219-nearA2points"}},
        {{"2A2+A1", 12},
         {"deg2-65-A2points", "deg2-97-A2points.f", "deg2-32-A1points", "deg2-127-nearA5.a",
          "deg2-158-nearA1A2points.d", "deg2-3219-nearA2points"}},
        {{"3A2", 8},
         {"deg2-65-A2points", "deg2-97-A2points.g", "deg2-127-nearA5.a"}},
        {{"A3", 22},
         {"deg2-1-middleA3.a", "deg2-65-A3points.a", "deg2-2-near2A1points.b",
          "deg2-7543-nearA3points"}},
        {{"A3+A1", 16},
         {"deg2-1-middleA3.a", "deg2-65-A3points.b", "deg2-32-A1points", "deg2-95-nearA1A3.a",
          "deg2-2-near2A1points.b", "deg2-2717-nearA1points", "deg2-7543-nearA3points"}},
        {{"A3+A1", 15},
         {"deg2-1-middleA3.b", "deg2-65-A3points.a", "deg2-32-A1points",
          "deg2-32-near3A1points.b", "deg2-2717-nearA1points", "deg2-7543-nearA3points"}},
        {{"A3+2A1", 12},
         {"deg2-1-middleA3.a", "deg2-65-A3points.c", "deg2-32-A1points", "deg2-95-nearA1A3.b",
          "deg2-2-near2A1points.b", "deg2-2-near2A1points.a"}},
        {{"A3+2A1", 11},
         {"deg2-1-middleA3.b", "deg2-65-A3points.b", "deg2-32-A1points",
          "deg2-32-near3A1points.b", "deg2-95-nearA1A3.b", "deg2-2-near2A1points.a",
          "deg2-2717-nearA1points", "deg2-7543-nearA3points"}},
        {{"A3+3A1", 8},
         {"deg2-1-middleA3.b", "deg2-65-A3points.c", "deg2-32-A1points",
          "deg2-32-near3A1points.a", "deg2-32-near3A1points.b", "deg2-95-nearA1A3.b",
          "deg2-2717-nearA1points"}},
        {{"A3+A2", 10},
         {"deg2-1-middleA3.a", "deg2-65-A3points.d", "deg2-65-A2points", "deg2-97-A2points.h",
          "deg2-1811-nearA2A3", "deg2-2-near2A1points.b", "deg2-3219-nearA2points",
          "deg2-7543-nearA3points"}},
        {{"A3+A2+A1", 7},
         {"deg2-1-middleA3.b", "deg2-65-A3points.d", "deg2-65-A2points", "deg2-97-A2points.i",
          "deg2-1811-nearA2A3", "deg2-32-A1points", "deg2-32-near3A1points.b",
          "deg2-158-nearA1A2points.e", "deg2-7543-nearA3points"}},
        {{"2A3", 6},
         {"deg2-1-middleA3.a", "deg2-65-A3points.e", "deg2-32-near3A1points.c",
          "deg2-2-near2A1points.b"}},
        {{"2A3+A1", 4},
         {"deg2-1-middleA3.b", "deg2-65-A3points.e", "deg2-32-A1points",
          "deg2-32-near3A1points.b", "deg2-32-near3A1points.c"}},
        {{"A4", 14},
         {"deg2-1213-A4points", "deg2-3631-A4points.a", "deg2-2413-nearA4points.a",
          "deg2-216121-nearA4point"}},
        {{"A4+A1", 10},
         {"deg2-1213-A4points", "deg2-3631-A4points.b", "deg2-32-A1points",
          "deg2-2413-nearA4points.b", "deg2-7241-nearA1A4", "deg2-2717-nearA1points",
          "deg2-216121-nearA4point"}},
        {{"A4+A2", 6},
         {"deg2-1213-A4points", "deg2-3631-A4points.c", "deg2-65-A2points",
          "deg2-97-A2points.j", "deg2-3623-nearA2A4", "deg2-2413-nearA4points.c",
          "deg2-3219-nearA2points"}},
        {{"A5", 8},
         {"deg2-67-themiddleA5points.a", "deg2-67-A5points.a", "deg2-87-A5points.a",
          "deg2-127-nearA5.b", "deg2-4927-nearA5"}},
        {{"A5", 7},
         {"deg2-34-themiddleA5point.a", "deg2-910-A5points", "deg2-98-A5points.a",
          "deg2-32-near3A1points.d", "deg2-4927-nearA5"}},
        {{"A5+A1", 6},
         {"deg2-67-themiddleA5points.a", "deg2-67-A5points.a", "deg2-87-A5points.b",
          "deg2-32-A1points", "deg2-127-nearA5.b", "deg2-127-nearA5.c"}},
        {{"A5+A1", 5},
         {"deg2-34-themiddleA5point.a", "deg2-910-A5points", "deg2-98-A5points.b",
          "deg2-32-A1points", "deg2-32-near3A1points.d", "deg2-4526-nearA1A5",
          "deg2-4927-nearA5"}},
        {{"A5+A2", 3},
         {"deg2-34-themiddleA5point.a", "deg2-910-A5points", "deg2-98-A5points.c",
          "deg2-65-A2points", "deg2-97-A2points.k", "deg2-32-near3A1points.d",
          "deg2-32-near3A1points.e"}},
        {{"A6", 4},
         {"deg2-45-middleA6points", "deg2-45-NOTmiidleA6points", "deg2-6053-A6points",
          "deg2-6037-nearA6points", "deg2-384209-nearA6points"}},
        {{"A7", 2},
         {"deg2-34-A7points.a", "deg2-34-onlyinA7points", "deg2-34-themiddleA5point.b",
          "deg2-98-A7points", "deg2-32-near3A1points.c"}},
        {{"D4", 14},
         {"deg2-34-A7points.b", "deg2-1-middleA3.c", "deg2-2-near2A1points.c"}},
        {{"D4+A1", 9},
         {"deg2-34-A7points.b", "deg2-1-middleA3.c", "deg2-1-middleA3.d", "deg2-32-A1points",
          "deg2-32-near3A1points.f", "deg2-2-near2A1points.c", "deg2-2717-nearA1points"}},
        {{"D4+2A1", 6},
         {"deg2-34-A7points.b", "deg2-1-middleA3.c", "deg2-1-middleA3.d", "deg2-32-A1points",
          "deg2-32-near3A1points.f", "deg2-2-near2A1points.c", "deg2-2-near2A1points.a"}},
        {{"D4+3A1", 4},
         {"deg2-34-A7points.b", "deg2-1-middleA3.d", "deg2-32-A1points",
          "deg2-32-near3A1points.f", "deg2-32-near3A1points.a"}},
        {{"D5", 8},
         {"deg2-35-D5points.a", "deg2-34-A7points.c", "deg2-910-D5point", "deg2-1-middleA3.e",
          "deg2-95-nearA1A3.c", "deg2-2-near2A1points.d"}},
        {{"D5+A1", 5},
         {"deg2-35-D5points.a", "deg2-34-A7points.c", "deg2-910-D5point", "deg2-1-middleA3.f",
          "deg2-32-A1points", "deg2-32-near3A1points.g", "deg2-95-nearA1A3.d",
          "deg2-2717-nearA1points"}},
        {{"D6", 3},
         {"deg2-12-D6points.a", "deg2-35-D5points.b", "deg2-34-themiddleA5point.c",
          "deg2-34-A7points.d", "deg2-67-themiddleA5points.b", "deg2-32-near3A1points.h",
          "deg2-1-middleA3.g", "deg2-2-near2A1points.e"}},
        {{"D6+A1", 2},
         {"deg2-12-D6points.a", "deg2-35-D5points.b", "deg2-34-themiddleA5point.c",
          "deg2-34-A7points.d", "deg2-67-themiddleA5points.b", "deg2-32-near3A1points.h",
          "deg2-1-middleA3.h", "deg2-32-A1points", "deg2-32-near3A1points.i"}},
        {{"E6", 4},
         {"deg2-37-points.a", "deg2-34-A7points.e", "deg2-47-points", "deg2-67-A5points.b",
          "deg2-127-nearA5.d"}},
        {{"E7", 1},
         {"deg2-310-points", "deg2-38-points", "deg2-916-points", "deg2-37-points.b",
          "deg2-12-D6points.b", "deg2-34-A7points.f", "deg2-34-themiddleA5point.d",
          "deg2-32-near3A1points.j"}},
    };
    return m;
}

}  // namespace dp2
