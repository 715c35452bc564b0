#pragma once

#include "dp2/adetype.hpp"
#include "dp2/lattice.hpp"
#include "dp2/table.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp2 {

struct UnknownTypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguousTypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularitySpec {
    AdeType type;
    std::optional<int> expected_lines;
};

// A set of curves spanning the effective cone of a surface (the resolution S
// itself, rank 8, or a one-point blowup of it, rank 9). All Zariski /
// pseudo-effectivity computations run against such a system.
struct CurveSystem {
    int rank = 8;
    std::vector<CurveClass> curves;      // effective-cone generators
    std::vector<int> self_int;           // cached curve self-intersections
    DivisorClass origin;                 // -K_S, resp. its pullback

    long long pair(int i, int j) const { return intersect(curves[i], curves[j]); }
    int size() const { return static_cast<int>(curves.size()); }
};

// Minimal resolution of a Du Val del Pezzo surface of degree 2, modelled
// lattice-theoretically: the (-2)-curves are a chosen saturated simple
// system in the E7 root lattice, the (-1)-curves are the line classes
// meeting every effective root nonnegatively.
struct SurfaceModel {
    AdeType type;
    int line_count = 0;
    std::optional<Rat> table_delta;      // set when (type, lines) is a table row

    CurveSystem sys;                     // curves = neg_two ++ neg_one
    int num_neg_two = 0;

    // curve ids: 0..num_neg_two-1 are (-2)-curves, the rest lines
    bool is_neg_two(int id) const { return id < num_neg_two; }
    int num_curves() const { return sys.size(); }
    const CurveClass& curve(int id) const { return sys.curves[id]; }
    long long pair(int i, int j) const { return sys.pair(i, j); }

    std::string curve_name(int id) const { return names_.at(id); }

    // component structure of the (-2)-part (Dynkin components)
    struct Component {
        AdeComponent kind;
        std::vector<int> curve_ids;
    };
    const std::vector<Component>& components() const { return comps_; }

    std::vector<std::string> names_;
    std::vector<Component> comps_;
};

// Point stratum on a carrier curve: either the intersection with a specific
// set of other curves (local multiplicities summing to the edge weights,
// transversal by default) or the generic stratum.
struct PointStratum {
    int carrier = -1;
    std::vector<std::pair<int, int>> incident;  // (curve id, local multiplicity)
    bool generic() const { return incident.empty(); }
    std::string label(const SurfaceModel& m) const;
};

SurfaceModel build_surface(const SingularitySpec& spec);

// strata on a negative curve of the model: one per intersection point with
// another negative curve (w distinct transversal points for an edge of
// weight w) plus the generic stratum (always last)
std::vector<PointStratum> point_strata(const SurfaceModel& m, int carrier);

// weighted dual graph in DOT format; (-2)-curves boxed, (-1)-curves round
std::string dual_graph_dot(const SurfaceModel& m);

struct DualGraph {
    int n = 0;
    std::vector<std::vector<long long>> weight;
};
DualGraph dual_graph(const SurfaceModel& m);

}  // namespace dp2
