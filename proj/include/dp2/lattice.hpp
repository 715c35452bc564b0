#pragma once

#include "dp2/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dp2 {

// Divisor class in the Picard lattice of the resolution S (rank 8, basis
// h, e1..e7) or of a one-point blowup of it (rank 9). The intersection
// form is diag(+1, -1, ..., -1) in this basis.
struct DivisorClass {
    std::vector<Rat> c;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rat> coords) : c(std::move(coords)) {}

    int rank() const { return static_cast<int>(c.size()); }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Rat& s) const;
    bool operator==(const DivisorClass& o) const { return c == o.c; }

    bool is_integral() const;
    std::string str() const;
};

// Curve classes on the models always have small integer coordinates.
// rank is implicit in the containing system (unused tail entries are zero).
using CurveClass = std::array<int, 9>;

Rat intersect(const DivisorClass& a, const DivisorClass& b);
long long intersect(const CurveClass& a, const CurveClass& b);
Rat intersect(const DivisorClass& a, const CurveClass& b);

DivisorClass to_divisor(const CurveClass& a, int rank);
CurveClass to_curve(const DivisorClass& d);  // requires integral coords

DivisorClass canonical_class(int rank);   // (-3,1,...,1)
DivisorClass anticanonical_class(int rank);
CurveClass canonical_curve(int rank);

std::string curve_str(const CurveClass& a, int rank);

// Root classes r: r^2 = -2, r.K = 0. Exactly 126 on the rank-8 lattice
// (the E7 root system). Cached, sorted lexicographically.
const std::vector<CurveClass>& enumerate_roots();

// Line classes l: l^2 = -1, l.K = -1. Exactly 56. Cached, sorted.
const std::vector<CurveClass>& enumerate_line_classes();

// Reflection in a root: d + (d.r) r. An isometry fixing K.
DivisorClass reflect(const CurveClass& root, const DivisorClass& d);
CurveClass reflect(const CurveClass& root, const CurveClass& d);

// index of a root in enumerate_roots(); -1 if absent
int root_index(const CurveClass& r);

}  // namespace dp2
