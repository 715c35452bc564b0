#pragma once

#include "dp2/adetype.hpp"
#include "dp2/lattice.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace dp2 {

// Bitmask over the 126 roots of enumerate_roots().
struct RootSet {
    std::array<std::uint64_t, 2> bits{};

    bool test(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { bits[i >> 6] |= std::uint64_t(1) << (i & 63); }
    int count() const;
    bool operator==(const RootSet& o) const { return bits == o.bits; }
    bool operator<(const RootSet& o) const;
};

struct RootSetHash {
    size_t operator()(const RootSet& s) const {
        return std::hash<std::uint64_t>()(s.bits[0] * 0x9e3779b97f4a7c15ULL ^ s.bits[1]);
    }
};

// A root subsystem embedding, i.e. a set of simple roots realizing an ADE
// type inside E7, together with derived data.
struct Embedding {
    AdeType type;
    std::vector<CurveClass> simple_roots;  // canonical base of the orbit representative
    RootSet subsystem;                     // all roots of the subsystem (both signs)
    int line_count = 0;                    // lines l with l.r >= 0 for all simple roots
    long orbit_size = 0;                   // number of subsystems in the W-orbit
};

// A fixed linear functional, nonzero on every root; defines the standard
// positive system and base used for canonical representatives.
long long chamber_value(const CurveClass& r);

// Base of the full E7 root system w.r.t. the chamber functional (7 roots).
const std::vector<CurveClass>& e7_base();

// All W(E7)-orbits of saturated simple systems of the given type that admit
// at least one line, sorted by decreasing line count. Cached per type.
// "Saturated" = no root of the ambient system lies in the nonnegative span
// of the simple roots besides the positive roots of the subsystem itself
// (such a root would be an extra effective (-2)-class).
const std::vector<Embedding>& enumerate_embeddings(const AdeType& type);

}  // namespace dp2
