#include "dp2/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dp2 {

namespace {

// exact integer square root, or -1 if not a perfect square
Int isqrt_exact(const Int& n) {
    if (n < 0) return Int(-1);
    if (n == 0) return Int(0);
    Int x = boost::multiprecision::sqrt(n);
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x * x == n ? x : Int(-1);
}

}  // namespace

std::vector<Rat> Poly::rational_roots() const {
    std::vector<Rat> out;
    int d = degree();
    if (d <= 0) return out;
    if (d == 1) {
        out.push_back(-c_[0] / c_[1]);
        return out;
    }
    if (d == 2) {
        // roots of a v^2 + b v + c
        const Rat &a = c_[2], &b = c_[1], &c0 = c_[0];
        Rat disc = b * b - Rat(4) * a * c0;
        if (disc < 0) return out;
        Int dn = rat_num(disc), dd = rat_den(disc);
        Int sn = isqrt_exact(dn * dd);
        if (sn < 0)
            throw std::runtime_error("Poly::rational_roots: quadratic does not split over Q: " + str());
        Rat sq = Rat(sn, dd);
        out.push_back((-b - sq) / (Rat(2) * a));
        out.push_back((-b + sq) / (Rat(2) * a));
        std::sort(out.begin(), out.end());
        if (out.size() == 2 && out[0] == out[1]) out.pop_back();
        return out;
    }
    throw std::runtime_error("Poly::rational_roots: degree > 2 unsupported");
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Rat mag = a > 0 ? a : Rat(-a);
        if (i == 0 || mag != 1) os << rat_str(mag);
        if (i >= 1) {
            if (mag != 1) os << "*";
            os << "v";
            if (i >= 2) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace dp2
