#include "dp2/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dp2 {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    DivisorClass r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    DivisorClass r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

DivisorClass DivisorClass::operator*(const Rat& s) const {
    DivisorClass r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

bool DivisorClass::is_integral() const {
    for (const auto& x : c)
        if (rat_den(x) != 1) return false;
    return true;
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << rat_str(c[i]);
    }
    os << ")";
    return os.str();
}

Rat intersect(const DivisorClass& a, const DivisorClass& b) {
    Rat acc = a.c[0] * b.c[0];
    for (size_t i = 1; i < a.c.size(); ++i) acc -= a.c[i] * b.c[i];
    return acc;
}

long long intersect(const CurveClass& a, const CurveClass& b) {
    long long acc = static_cast<long long>(a[0]) * b[0];
    for (size_t i = 1; i < a.size(); ++i) acc -= static_cast<long long>(a[i]) * b[i];
    return acc;
}

Rat intersect(const DivisorClass& a, const CurveClass& b) {
    Rat acc = a.c[0] * Rat(b[0]);
    for (size_t i = 1; i < a.c.size(); ++i) acc -= a.c[i] * Rat(b[i]);
    return acc;
}

DivisorClass to_divisor(const CurveClass& a, int rank) {
    std::vector<Rat> v(rank);
    for (int i = 0; i < rank; ++i) v[i] = Rat(a[i]);
    return DivisorClass(std::move(v));
}

CurveClass to_curve(const DivisorClass& d) {
    if (!d.is_integral()) throw std::runtime_error("to_curve: non-integral class");
    CurveClass a{};
    for (int i = 0; i < d.rank(); ++i) a[i] = static_cast<int>(rat_num(d.c[i]));
    return a;
}

DivisorClass canonical_class(int rank) {
    std::vector<Rat> v(rank, Rat(1));
    v[0] = Rat(-3);
    return DivisorClass(std::move(v));
}

DivisorClass anticanonical_class(int rank) { return canonical_class(rank) * Rat(-1); }

CurveClass canonical_curve(int rank) {
    CurveClass a{};
    a[0] = -3;
    for (int i = 1; i < rank; ++i) a[i] = 1;
    return a;
}

std::string curve_str(const CurveClass& a, int rank) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank; ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

namespace {

// Negative classes on the rank-8 lattice with d^2 = selfint and d.K = kdeg.
// Coordinates of roots and lines are bounded by 3, so a boxed scan suffices.
std::vector<CurveClass> scan_classes(int selfint, int kdeg) {
    std::vector<CurveClass> out;
    const CurveClass K = canonical_curve(8);
    CurveClass a{};
    for (int a0 = -3; a0 <= 3; ++a0) {
        a[0] = a0;
        // remaining entries in [-3,3]^7, pruned by the two constraints
        std::array<int, 7> x{};
        int idx = 0;
        x.fill(-3);
        // simple odometer loop
        while (true) {
            for (int i = 0; i < 7; ++i) a[i + 1] = x[i];
            if (intersect(a, a) == selfint && intersect(a, K) == kdeg) out.push_back(a);
            idx = 6;
            while (idx >= 0 && x[idx] == 3) x[idx--] = -3;
            if (idx < 0) break;
            ++x[idx];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<CurveClass>& enumerate_roots() {
    static const std::vector<CurveClass> roots = scan_classes(-2, 0);
    return roots;
}

const std::vector<CurveClass>& enumerate_line_classes() {
    static const std::vector<CurveClass> lines = scan_classes(-1, -1);
    return lines;
}

DivisorClass reflect(const CurveClass& root, const DivisorClass& d) {
    Rat p = intersect(d, root);
    DivisorClass r = d;
    for (int i = 0; i < d.rank(); ++i) r.c[i] += p * Rat(root[i]);
    return r;
}

CurveClass reflect(const CurveClass& root, const CurveClass& d) {
    long long p = intersect(d, root);
    CurveClass r = d;
    for (size_t i = 0; i < r.size(); ++i) r[i] += static_cast<int>(p) * root[i];
    return r;
}

int root_index(const CurveClass& r) {
    const auto& roots = enumerate_roots();
    auto it = std::lower_bound(roots.begin(), roots.end(), r);
    if (it == roots.end() || *it != r) return -1;
    return static_cast<int>(it - roots.begin());
}

}  // namespace dp2
