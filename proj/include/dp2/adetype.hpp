#pragma once

#include <string>
#include <vector>

namespace dp2 {

// One ADE component, e.g. {'A', 3} or {'D', 4} or {'E', 7}.
struct AdeComponent {
    char letter = 'A';
    int rank = 1;

    bool operator==(const AdeComponent& o) const { return letter == o.letter && rank == o.rank; }
    // sort: higher rank first, then D/E before A at equal rank (display convention)
    bool operator<(const AdeComponent& o) const {
        if (rank != o.rank) return rank > o.rank;
        return letter > o.letter;
    }
};

// A singularity type: multiset of components, canonically sorted.
// Empty = smooth surface.
struct AdeType {
    std::vector<AdeComponent> comps;

    int total_rank() const;
    bool empty() const { return comps.empty(); }
    bool operator==(const AdeType& o) const { return comps == o.comps; }

    // "A3+2A1", "E7", "smooth"
    std::string str() const;

    // parses "A3+2A1", "2A2+A1", "d4", "smooth", ""; throws on malformed input
    static AdeType parse(const std::string& s);
};

// Dynkin graph of one component: nodes 0..rank-1, edges as index pairs.
// A_k: path 0-1-...-(k-1).
// D_k: fork leaves 0,1 on node 2, then path 2-3-...-(k-1).
// E_k: path 0-..-(k-2), branch node (k-1) attached to node 2.
std::vector<std::pair<int, int>> dynkin_edges(const AdeComponent& c);

}  // namespace dp2
