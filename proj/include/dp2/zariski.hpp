#pragma once

#include "dp2/poly.hpp"
#include "dp2/surface.hpp"

#include <stdexcept>
#include <vector>

namespace dp2 {

struct NotPseudoEffective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// D = positive + sum a_i C_i with the positive part nef against all
// generators, orthogonal to the support, and negative-definite support Gram.
struct ZariskiDecomposition {
    DivisorClass positive;
    std::vector<std::pair<int, Rat>> negative;  // (curve id, coefficient > 0)
};

// membership of D in the cone spanned by the system's curves
bool is_pseudo_effective(const CurveSystem& sys, const DivisorClass& D);

// order, when given, decides which violating curve is inserted first;
// the result is order-independent (tested), the knob exists for that test
ZariskiDecomposition zariski_decompose(const CurveSystem& sys, const DivisorClass& D,
                                       const std::vector<int>* order = nullptr);

// tau = max { v >= 0 : D0 - v*carrier pseudo-effective }, by exact LP
Rat psef_threshold(const CurveSystem& sys, const DivisorClass& D0, int carrier);

struct FamilyPiece {
    Rat lo, hi;
    std::vector<int> support;          // curve ids, sorted
    std::vector<Poly> coeffs;          // degree <= 1, aligned with support
    Poly Psq;                          // degree <= 2
    Poly PdotC;                        // degree <= 1

    Poly coeff_of(int curve_id) const;
};

// Zariski decomposition of D0 - v*carrier for v in [0, tau], as exact
// per-piece polynomials; pieces tile [0, tau] and all data is continuous
// across breakpoints.
struct PiecewiseFamily {
    int carrier = -1;
    DivisorClass origin;
    Rat tau;
    std::vector<FamilyPiece> pieces;

    const FamilyPiece& piece_at(const Rat& v) const;
};

PiecewiseFamily piecewise_family(const CurveSystem& sys, int carrier);

}  // namespace dp2
