#include "dp2/zariski.hpp"

#include "dp2/linprog.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp2 {

namespace {

// solve (Gram of support) * a = rhs; the support Gram is negative definite,
// hence invertible
std::vector<Rat> solve_gram(const CurveSystem& sys, const std::vector<int>& support,
                            const std::vector<Rat>& rhs) {
    int k = static_cast<int>(support.size());
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = Rat(sys.pair(support[i], support[j]));
        m[i][k] = rhs[i];
    }
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular support Gram matrix");
        std::swap(m[col], m[piv]);
        Rat d = m[col][col];
        for (auto& x : m[col]) x /= d;
        for (int r = 0; r < k; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int cc = col; cc <= k; ++cc) m[r][cc] -= f * m[col][cc];
        }
    }
    std::vector<Rat> a(k);
    for (int i = 0; i < k; ++i) a[i] = m[i][k];
    return a;
}

bool gram_negative_definite(const CurveSystem& sys, const std::vector<int>& support) {
    // LDL^T pivots must all be negative
    int k = static_cast<int>(support.size());
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = Rat(sys.pair(support[i], support[j]));
    for (int col = 0; col < k; ++col) {
        if (m[col][col] >= 0) return false;
        for (int r = col + 1; r < k; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int cc = col; cc < k; ++cc) m[r][cc] -= f * m[col][cc];
        }
    }
    return true;
}

std::vector<std::vector<Rat>> cone_matrix(const CurveSystem& sys, int extra_carrier = -1) {
    std::vector<std::vector<Rat>> A(sys.rank);
    for (int r = 0; r < sys.rank; ++r) {
        A[r].resize(sys.size() + (extra_carrier >= 0 ? 1 : 0));
        for (int j = 0; j < sys.size(); ++j) A[r][j] = Rat(sys.curves[j][r]);
        if (extra_carrier >= 0) A[r][sys.size()] = Rat(sys.curves[extra_carrier][r]);
    }
    return A;
}

DivisorClass positive_part(const CurveSystem& sys, const DivisorClass& D,
                           const std::vector<int>& support, const std::vector<Rat>& a) {
    DivisorClass P = D;
    for (size_t i = 0; i < support.size(); ++i)
        for (int r = 0; r < sys.rank; ++r) P.c[r] -= a[i] * Rat(sys.curves[support[i]][r]);
    return P;
}

}  // namespace

bool is_pseudo_effective(const CurveSystem& sys, const DivisorClass& D) {
    return lp_feasible(cone_matrix(sys), D.c);
}

namespace {
ZariskiDecomposition decompose_impl(const CurveSystem& sys, const DivisorClass& D,
                                    const std::vector<int>* order);
}

ZariskiDecomposition zariski_decompose(const CurveSystem& sys, const DivisorClass& D,
                                       const std::vector<int>* order) {
    if (!is_pseudo_effective(sys, D))
        throw NotPseudoEffective("class is not in the effective cone: " + D.str());
    return decompose_impl(sys, D, order);
}

namespace {
ZariskiDecomposition decompose_impl(const CurveSystem& sys, const DivisorClass& D,
                                    const std::vector<int>* order) {

    std::vector<int> scan(sys.size());
    for (int i = 0; i < sys.size(); ++i) scan[i] = i;
    if (order) scan = *order;

    std::vector<int> support;
    std::vector<Rat> a;
    DivisorClass P = D;
    for (int rounds = 0; rounds <= sys.size() + 1; ++rounds) {
        int violator = -1;
        for (int id : scan) {
            if (std::find(support.begin(), support.end(), id) != support.end()) continue;
            if (intersect(P, sys.curves[id]) < 0) { violator = id; break; }
        }
        if (violator < 0) {
            // drop exact zeros for a canonical support
            ZariskiDecomposition z;
            z.positive = P;
            for (size_t i = 0; i < support.size(); ++i) {
                if (a[i] < 0) throw std::logic_error("negative Zariski coefficient");
                if (a[i] > 0) z.negative.emplace_back(support[i], a[i]);
            }
            std::sort(z.negative.begin(), z.negative.end());
            if (!z.negative.empty()) {
                std::vector<int> sup;
                for (auto& [id, coef] : z.negative) sup.push_back(id);
                if (!gram_negative_definite(sys, sup))
                    throw std::logic_error("support Gram not negative definite");
            }
            return z;
        }
        support.push_back(violator);
        std::sort(support.begin(), support.end());
        std::vector<Rat> rhs(support.size());
        for (size_t i = 0; i < support.size(); ++i)
            rhs[i] = intersect(D, sys.curves[support[i]]);
        a = solve_gram(sys, support, rhs);
        P = positive_part(sys, D, support, a);
    }
    throw std::logic_error("Zariski iteration failed to converge");
}
}  // namespace

Rat psef_threshold(const CurveSystem& sys, const DivisorClass& D0, int carrier) {
    auto A = cone_matrix(sys, carrier);
    std::vector<Rat> c(sys.size() + 1, Rat(0));
    c[sys.size()] = Rat(1);  // maximize the carrier multiple
    auto res = solve_lp(A, D0.c, c);
    if (res.status == LpResult::Status::Infeasible)
        throw NotPseudoEffective("family origin is not pseudo-effective");
    if (res.status == LpResult::Status::Unbounded)
        throw std::logic_error("pseudo-effective threshold unbounded");
    return res.value;
}

Poly FamilyPiece::coeff_of(int curve_id) const {
    for (size_t i = 0; i < support.size(); ++i)
        if (support[i] == curve_id) return coeffs[i];
    return Poly();
}

const FamilyPiece& PiecewiseFamily::piece_at(const Rat& v) const {
    for (const auto& p : pieces)
        if (v >= p.lo && v <= p.hi) return p;
    throw std::out_of_range("v outside [0, tau]");
}

PiecewiseFamily piecewise_family(const CurveSystem& sys, int carrier) {
    PiecewiseFamily fam;
    fam.carrier = carrier;
    fam.origin = sys.origin;
    fam.tau = psef_threshold(sys, sys.origin, carrier);

    const DivisorClass& D0 = sys.origin;
    const CurveClass& C = sys.curves[carrier];

    auto value_at = [&](const Rat& v) {
        DivisorClass D = D0;
        for (int r = 0; r < sys.rank; ++r) D.c[r] -= v * Rat(C[r]);
        return D;
    };

    // derive the maximal validity interval of the support active at `sample`
    auto derive_piece = [&](const Rat& sample) {
        DivisorClass Ds = value_at(sample);
        auto z = decompose_impl(sys, Ds, nullptr);  // interior of [0,tau]: psef
        std::vector<int> support;
        for (auto& [id, coef] : z.negative) support.push_back(id);

        // coefficients are linear in v: solve at v = 0 and v = 1
        auto coeffs_at = [&](const Rat& v) {
            std::vector<Rat> rhs(support.size());
            DivisorClass D = value_at(v);
            for (size_t i = 0; i < support.size(); ++i)
                rhs[i] = intersect(D, sys.curves[support[i]]);
            return support.empty() ? std::vector<Rat>{} : solve_gram(sys, support, rhs);
        };
        auto a0 = coeffs_at(Rat(0)), a1 = coeffs_at(Rat(1));
        std::vector<Poly> coeffs;
        for (size_t i = 0; i < support.size(); ++i) coeffs.push_back(Poly{a0[i], a1[i] - a0[i]});

        // P(v) coordinates as linear polynomials
        std::vector<Poly> P(sys.rank);
        for (int r = 0; r < sys.rank; ++r) {
            P[r] = Poly{D0.c[r], Rat(-C[r])};
            for (size_t i = 0; i < support.size(); ++i)
                P[r] = P[r] - coeffs[i] * Rat(sys.curves[support[i]][r]);
        }
        auto pair_poly = [&](const CurveClass& cc) {
            Poly acc = P[0] * Rat(cc[0]);
            for (int r = 1; r < sys.rank; ++r) acc = acc - P[r] * Rat(cc[r]);
            return acc;
        };

        FamilyPiece piece;
        piece.support = support;
        piece.coeffs = coeffs;
        piece.PdotC = pair_poly(C);
        // Psq = P.(D0 - vC) since P is orthogonal to the support
        {
            Poly acc = P[0] * Poly{D0.c[0], Rat(-C[0])};
            for (int r = 1; r < sys.rank; ++r) acc = acc - P[r] * Poly{D0.c[r], Rat(-C[r])};
            piece.Psq = acc;
        }

        // validity: support coefficients >= 0, P(v).D >= 0 for all curves
        Rat lo(0), hi = fam.tau;
        auto clamp_linear = [&](const Poly& f) {
            Rat at_sample = f.eval(sample);
            if (at_sample < 0) throw std::logic_error("piece invalid at its own sample");
            Rat slope = f.coeff(1), icpt = f.coeff(0);
            if (slope == 0) return;
            Rat root = -icpt / slope;
            if (slope > 0) {
                if (root > lo && root <= sample) lo = root;
            } else {
                if (root < hi && root >= sample) hi = root;
            }
        };
        for (const auto& cf : coeffs) clamp_linear(cf);
        for (int id = 0; id < sys.size(); ++id) {
            if (std::find(support.begin(), support.end(), id) != support.end()) continue;
            clamp_linear(pair_poly(sys.curves[id]));
        }
        piece.lo = lo;
        piece.hi = hi;
        return piece;
    };

    // interval subdivision: each sample yields the full validity interval of
    // its support; gaps are refined recursively
    std::vector<std::pair<Rat, Rat>> work{{Rat(0), fam.tau}};
    int guard = 0;
    while (!work.empty()) {
        if (++guard > 1000) throw std::logic_error("piecewise family did not stabilize");
        auto [lo, hi] = work.back();
        work.pop_back();
        if (!(lo < hi)) continue;
        Rat sample = (lo + hi) / 2;
        FamilyPiece piece = derive_piece(sample);
        Rat plo = std::max(piece.lo, lo), phi = std::min(piece.hi, hi);
        piece.lo = plo;
        piece.hi = phi;
        fam.pieces.push_back(piece);
        if (lo < plo) work.emplace_back(lo, plo);
        if (phi < hi) work.emplace_back(phi, hi);
    }
    std::sort(fam.pieces.begin(), fam.pieces.end(),
              [](const FamilyPiece& a, const FamilyPiece& b) { return a.lo < b.lo; });

    // merge fragments of one region split by unlucky sampling
    std::vector<FamilyPiece> merged;
    for (auto& p : fam.pieces) {
        if (!merged.empty() && merged.back().hi == p.lo &&
            merged.back().support == p.support && merged.back().coeffs == p.coeffs)
            merged.back().hi = p.hi;
        else
            merged.push_back(p);
    }
    fam.pieces = std::move(merged);

    // exact tiling and continuity across breakpoints
    if (fam.pieces.front().lo != 0 || fam.pieces.back().hi != fam.tau)
        throw std::logic_error("family pieces do not tile [0, tau]");
    for (size_t i = 0; i + 1 < fam.pieces.size(); ++i) {
        const auto &p = fam.pieces[i], &q = fam.pieces[i + 1];
        if (p.hi != q.lo) throw std::logic_error("family pieces do not tile [0, tau]");
        Rat v = p.hi;
        if (p.Psq.eval(v) != q.Psq.eval(v) || p.PdotC.eval(v) != q.PdotC.eval(v))
            throw std::logic_error("P data discontinuous at a breakpoint");
        std::vector<int> all = p.support;
        all.insert(all.end(), q.support.begin(), q.support.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (int id : all)
            if (p.coeff_of(id).eval(v) != q.coeff_of(id).eval(v))
                throw std::logic_error("N coefficient discontinuous at a breakpoint");
    }
    if (fam.pieces.back().Psq.eval(fam.tau) < 0)
        throw std::logic_error("P(tau)^2 negative");
    return fam;
}

}  // namespace dp2
