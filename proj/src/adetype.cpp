#include "dp2/adetype.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dp2 {

int AdeType::total_rank() const {
    int r = 0;
    for (const auto& c : comps) r += c.rank;
    return r;
}

std::string AdeType::str() const {
    if (comps.empty()) return "smooth";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < comps.size()) {
        size_t j = i;
        while (j < comps.size() && comps[j] == comps[i]) ++j;
        if (!first) os << "+";
        first = false;
        if (j - i > 1) os << (j - i);
        os << comps[i].letter << comps[i].rank;
        i = j;
    }
    return os.str();
}

AdeType AdeType::parse(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += static_cast<char>(std::toupper(ch));
    AdeType out;
    if (t.empty() || t == "SMOOTH") return out;
    size_t i = 0;
    while (i < t.size()) {
        int mult = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            mult = mult * 10 + (t[i++] - '0');
        if (mult == 0) mult = 1;
        if (i >= t.size() || (t[i] != 'A' && t[i] != 'D' && t[i] != 'E'))
            throw std::invalid_argument("bad ADE type: " + s);
        char letter = t[i++];
        int rank = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            rank = rank * 10 + (t[i++] - '0');
        if (rank < 1 || rank > 8) throw std::invalid_argument("bad ADE rank: " + s);
        if (letter == 'D' && rank < 4) throw std::invalid_argument("Dn needs n>=4: " + s);
        if (letter == 'E' && (rank < 6 || rank > 8)) throw std::invalid_argument("En needs n in 6..8: " + s);
        for (int k = 0; k < mult; ++k) out.comps.push_back({letter, rank});
        if (i < t.size()) {
            if (t[i] != '+') throw std::invalid_argument("bad ADE type: " + s);
            ++i;
        }
    }
    std::sort(out.comps.begin(), out.comps.end());
    return out;
}

std::vector<std::pair<int, int>> dynkin_edges(const AdeComponent& c) {
    std::vector<std::pair<int, int>> e;
    if (c.letter == 'A') {
        for (int i = 0; i + 1 < c.rank; ++i) e.emplace_back(i, i + 1);
    } else if (c.letter == 'D') {
        e.emplace_back(0, 2);
        e.emplace_back(1, 2);
        for (int i = 2; i + 1 < c.rank; ++i) e.emplace_back(i, i + 1);
    } else {  // E6, E7, E8
        for (int i = 0; i + 2 < c.rank; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(2, c.rank - 1);
    }
    return e;
}

}  // namespace dp2
