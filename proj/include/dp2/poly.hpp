#pragma once

#include "dp2/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp2 {

// Univariate polynomial with rational coefficients, c[0] + c[1]*v + c[2]*v^2 + ...
// Degrees stay tiny here (N coefficients are linear, P(v)^2 quadratic).
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> cs) : c_(cs) { trim(); }
    explicit Poly(Rat constant) : c_{std::move(constant)} { trim(); }
    explicit Poly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }

    static Poly var() { return Poly{Rat(0), Rat(1)}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0);
    }

    Rat eval(const Rat& v) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (o * Rat(-1)); }
    Poly operator*(const Rat& s) const {
        std::vector<Rat> r = c_;
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (c_.empty() || o.c_.empty()) return Poly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // definite integral over [a, b]
    Rat integrate(const Rat& a, const Rat& b) const {
        Rat acc(0);
        for (size_t i = 0; i < c_.size(); ++i) {
            Rat k = Rat(i + 1);
            acc += c_[i] / k * (pow_rat(b, i + 1) - pow_rat(a, i + 1));
        }
        return acc;
    }

    // Real roots, exact; only degrees <= 2 occur. Quadratics must split over Q
    // (every breakpoint/threshold in these families is rational); throws otherwise.
    std::vector<Rat> rational_roots() const;

    std::string str() const;

private:
    static Rat pow_rat(const Rat& x, size_t n) {
        Rat acc(1);
        for (size_t i = 0; i < n; ++i) acc *= x;
        return acc;
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace dp2
