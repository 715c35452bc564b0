#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp2/lattice.hpp"
#include "dp2/weyl.hpp"

#include <set>

using namespace dp2;

namespace {

// Independent brute-force oracle: scan all integer vectors with entries in
// [-4, 4] (wider than the library's bound) and count solutions directly.
std::vector<CurveClass> oracle_scan(long long selfint, long long kdeg) {
    std::vector<CurveClass> out;
    CurveClass K{};
    K[0] = -3;
    for (int i = 1; i < 8; ++i) K[i] = 1;
    CurveClass a{};
    std::array<int, 8> x{};
    x.fill(-4);
    while (true) {
        for (int i = 0; i < 8; ++i) a[i] = x[i];
        long long sq = static_cast<long long>(a[0]) * a[0];
        for (int i = 1; i < 8; ++i) sq -= static_cast<long long>(a[i]) * a[i];
        if (sq == selfint) {
            long long kd = -3LL * a[0];
            for (int i = 1; i < 8; ++i) kd -= a[i];
            if (kd == kdeg) out.push_back(a);
        }
        int idx = 7;
        while (idx >= 0 && x[idx] == 4) x[idx--] = -4;
        if (idx < 0) break;
        ++x[idx];
    }
    return out;
}

}  // namespace

TEST_CASE("canonical class") {
    auto K = canonical_class(8);
    CHECK(intersect(K, K) == Rat(2));
    // basis Gram = diag(+1, -1^7)
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CurveClass a{}, b{};
            a[i] = 1;
            b[j] = 1;
            long long want = i != j ? 0 : (i == 0 ? 1 : -1);
            CHECK(intersect(a, b) == want);
        }
}

TEST_CASE("root and line enumeration against the oracle") {
    auto roots = enumerate_roots();
    auto lines = enumerate_line_classes();
    CHECK(roots.size() == 126);
    CHECK(lines.size() == 56);

    auto oracle_roots = oracle_scan(-2, 0);
    auto oracle_lines = oracle_scan(-1, -1);
    CHECK(oracle_roots.size() == 126);
    CHECK(oracle_lines.size() == 56);
    CHECK(std::set<CurveClass>(roots.begin(), roots.end()) ==
          std::set<CurveClass>(oracle_roots.begin(), oracle_roots.end()));
    CHECK(std::set<CurveClass>(lines.begin(), lines.end()) ==
          std::set<CurveClass>(oracle_lines.begin(), oracle_lines.end()));

    // negation symmetry, disjointness, sample memberships
    std::set<CurveClass> rset(roots.begin(), roots.end());
    for (const auto& r : roots) {
        CurveClass neg{};
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = -r[i];
        CHECK(rset.count(neg) == 1);
    }
    CurveClass e1me2{};
    e1me2[1] = 1;
    e1me2[2] = -1;
    CHECK(rset.count(e1me2) == 1);
    CurveClass e7{};
    e7[7] = 1;
    CHECK(std::find(lines.begin(), lines.end(), e7) != lines.end());
    CurveClass hme1me2{};
    hme1me2[0] = 1;
    hme1me2[1] = -1;
    hme1me2[2] = -1;
    CHECK(std::find(lines.begin(), lines.end(), hme1me2) != lines.end());
    CHECK(intersect(e7, e7) == -1);

    const auto K = canonical_curve(8);
    for (const auto& r : roots) CHECK(intersect(r, K) == 0);
    for (const auto& l : lines) CHECK(intersect(l, K) == -1);
}

TEST_CASE("line-root pairings lie in {-1,0,1}") {
    long long lo = 99, hi = -99;
    for (const auto& l : enumerate_line_classes())
        for (const auto& r : enumerate_roots()) {
            long long p = intersect(l, r);
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
    CHECK(lo == -1);  // observed range
    CHECK(hi == 1);
}

TEST_CASE("reflection is an isometry fixing K") {
    auto roots = enumerate_roots();
    const auto K = canonical_class(8);
    const CurveClass r0 = roots[17];
    CHECK(reflect(r0, K) == K);

    // reflect(r, r) = -r
    auto rr = reflect(r0, to_divisor(r0, 8));
    CHECK(rr == to_divisor(r0, 8) * Rat(-1));

    // reflect(e1-e2, e1) = e2
    CurveClass e1me2{}, e1{}, e2{};
    e1me2[1] = 1;
    e1me2[2] = -1;
    e1[1] = 1;
    e2[2] = 1;
    CHECK(reflect(e1me2, to_divisor(e1, 8)) == to_divisor(e2, 8));

    for (int i = 0; i < 40; ++i) {
        const auto &a = roots[(7 * i + 3) % 126], &b = roots[(11 * i + 5) % 126];
        const auto& r = roots[(13 * i + 1) % 126];
        CHECK(intersect(reflect(r, to_divisor(a, 8)), reflect(r, to_divisor(b, 8))) ==
              Rat(intersect(a, b)));
    }
}

TEST_CASE("roots and line classes are disjoint") {
    std::set<CurveClass> rset(enumerate_roots().begin(), enumerate_roots().end());
    for (const auto& l : enumerate_line_classes()) CHECK(rset.count(l) == 0);
}

TEST_CASE("chamber functional is nonzero on all roots; E7 base extraction") {
    for (const auto& r : enumerate_roots()) CHECK(chamber_value(r) != 0);
    auto base = e7_base();
    CHECK(base.size() == 7);
    int deg3 = 0;
    for (const auto& a : base) {
        int deg = 0;
        for (const auto& b : base)
            if (!(a == b)) {
                long long p = intersect(a, b);
                CHECK((p == 0 || p == 1));
                if (p == 1) ++deg;
            }
        if (deg == 3) ++deg3;
        CHECK(intersect(a, a) == -2);
    }
    CHECK(deg3 == 1);  // E7 has one branch node
}
