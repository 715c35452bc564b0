#pragma once

#include "dp2/blowup.hpp"
#include "dp2/zariski.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dp2 {

struct StratumNotOnCarrier : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// S_S(C) = (1/K_X^2) \int_0^tau P(v)^2 dv with K_X^2 = 2
Rat S_curve(const PiecewiseFamily& fam);

// h(v) = (P.C)(N.C)_P + (P.C)^2/2 per piece, for the stratum with the given
// incident curves (curve id, local multiplicity); empty = generic stratum
std::vector<Poly> h_function(const CurveSystem& sys, const PiecewiseFamily& fam,
                             const std::vector<std::pair<int, int>>& incident);

// S(W^C;P) = (2/K_X^2) \int_0^tau h = \int_0^tau h
Rat S_flag(const CurveSystem& sys, const PiecewiseFamily& fam,
           const std::vector<std::pair<int, int>>& incident);

struct PointBound {
    Rat lower;
    Rat upper;
};

// estimation via the flag of the carrier curve: lower = min(1/S_S(C), 1/S(W;P))
PointBound delta_point_bound_curve(const SurfaceModel& m, int carrier,
                                   const PointStratum& stratum);

// estimation via the plt blowup of the point (A_S(E_P) = 2, zero different):
// lower = min(2/S_S(E_P), min_O 1/S(W^{E_P};O))
struct BlowupBound {
    Rat lower, upper;
    Rat S_ep;
    std::vector<std::pair<std::string, Rat>> strata_S;  // (label, S value), generic last
};
BlowupBound delta_point_bound_blowup(const SurfaceModel& m, const BlowupModel& bm);

struct CertStratum {
    std::string name;
    std::string lemma;  // filled by the lemma annotator
    Rat lower;
    std::optional<Rat> upper;
    std::vector<std::pair<std::string, Rat>> S_values;
    bool axiom = false;
    std::vector<int> carriers;  // curve ids whose flags certify this stratum
};

struct DeltaCertificate {
    AdeType type;
    int lines = 0;
    Rat delta;
    bool certified = false;      // min is pinned by matching lower/upper bounds
    bool matches_table = false;
    std::vector<CertStratum> strata;
    std::vector<std::string> axioms;
};

struct UncertifiedStratum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Assemble the per-stratum certificate for a table surface: flags of every
// (-2)-curve and of every line through a singular point, the blowup
// refinement at A2 components, and the generic-point floor.
DeltaCertificate delta_global(const SurfaceModel& m);

// carriers whose flags enter the certificate: all (-2)-curves, then all
// lines meeting at least one (-2)-curve
std::vector<int> relevant_carriers(const SurfaceModel& m);

}  // namespace dp2
