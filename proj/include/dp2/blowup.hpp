#pragma once

#include "dp2/surface.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dp2 {

struct BlowupModelInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One-point blowup of the resolution S, rank-9 lattice (h, e1..e7, e_P).
// curves hold the full negative-curve set of the blown-up surface; origin is
// the pullback of -K_S (not the blowup's own anticanonical class).
struct BlowupModel {
    CurveSystem sys;
    int ep_id = -1;
    std::vector<std::string> names;
};

// Blowup at the intersection point of an A2 component {e1, e2} (two
// (-2)-curves meeting each other and no other (-2)-curve). Besides the
// strict transforms the effective cone needs the unique conic class
// B = -K - E - E' through the point.
BlowupModel blowup_at_a2_point(const SurfaceModel& m, int e1, int e2);

// Blowup at a point on no negative curve. The result is a weak del Pezzo of
// degree 1; its negative curves are enumerable from the lattice.
BlowupModel blowup_at_generic_point(const SurfaceModel& m);

// Blowup at a general point of the single (-2)-curve e.
BlowupModel blowup_on_curve(const SurfaceModel& m, int e);

}  // namespace dp2
