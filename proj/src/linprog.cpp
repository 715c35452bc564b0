#include "dp2/linprog.hpp"

#include <stdexcept>

namespace dp2 {

namespace {

// Dense tableau simplex. Rows 0..m-1 hold the constraints, basis[i] the
// basic variable of row i. Reduced costs z[j] and objective value z0 are
// maintained for maximization.
struct Tableau {
    int m = 0, n = 0;
    int enterable = 0;  // columns allowed to enter the basis (excludes artificials in phase 2)
    std::vector<std::vector<Rat>> t;  // m x (n+1), last column = rhs
    std::vector<int> basis;
    std::vector<Rat> z;
    Rat z0;

    void install_objective(const std::vector<Rat>& c) {
        z = c;
        z0 = Rat(0);
        for (int i = 0; i < m; ++i) {
            const Rat& cb = c[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j < n; ++j) z[j] -= cb * t[i][j];
            z0 += cb * t[i][n];
        }
    }

    void pivot(int row, int col) {
        Rat piv = t[row][col];
        for (int j = 0; j <= n; ++j) t[row][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rat f = t[i][col];
            for (int j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
        }
        if (z[col] != 0) {
            Rat f = z[col];
            for (int j = 0; j < n; ++j) z[j] -= f * t[row][j];
            z0 += f * t[row][n];
        }
        basis[row] = col;
    }

    // returns false if unbounded; Bland's rule on both choices
    bool run() {
        while (true) {
            int col = -1;
            for (int j = 0; j < enterable; ++j)
                if (z[j] > 0) { col = j; break; }
            if (col < 0) return true;
            int row = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (t[i][col] <= 0) continue;
                Rat ratio = t[i][n] / t[i][col];
                if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
                    row = i;
                    best = ratio;
                }
            }
            if (row < 0) return false;
            pivot(row, col);
        }
    }
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c) {
    int m = static_cast<int>(A.size());
    int nstruct = m ? static_cast<int>(A[0].size()) : 0;

    Tableau tab;
    tab.m = m;
    tab.n = nstruct + m;  // artificials appended
    tab.enterable = tab.n;
    tab.t.assign(m, std::vector<Rat>(tab.n + 1, Rat(0)));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (int j = 0; j < nstruct; ++j) tab.t[i][j] = flip ? -A[i][j] : A[i][j];
        tab.t[i][tab.n] = flip ? -b[i] : b[i];
        tab.t[i][nstruct + i] = Rat(1);
        tab.basis[i] = nstruct + i;
    }

    // phase 1: drive out the artificials
    std::vector<Rat> phase1(tab.n, Rat(0));
    for (int i = 0; i < m; ++i) phase1[nstruct + i] = Rat(-1);
    tab.install_objective(phase1);
    if (!tab.run()) throw std::logic_error("phase-1 simplex unbounded");
    if (tab.z0 < 0) return {LpResult::Status::Infeasible, Rat(0), {}};
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < nstruct) continue;
        // artificial basic at value zero: pivot it out on any structural column;
        // an all-zero row is a redundant constraint and can stay
        for (int j = 0; j < nstruct; ++j)
            if (tab.t[i][j] != 0) { tab.pivot(i, j); break; }
    }

    // phase 2: artificial columns are barred from re-entering
    std::vector<Rat> full_c(tab.n, Rat(0));
    for (int j = 0; j < nstruct; ++j) full_c[j] = c[j];
    tab.enterable = nstruct;
    tab.install_objective(full_c);
    if (!tab.run()) return {LpResult::Status::Unbounded, Rat(0), {}};

    std::vector<Rat> x(nstruct, Rat(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < nstruct) x[tab.basis[i]] = tab.t[i][tab.n];
    return {LpResult::Status::Optimal, tab.z0, std::move(x)};
}

bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
    std::vector<Rat> c(A.empty() ? 0 : A[0].size(), Rat(0));
    return solve_lp(A, b, c).status == LpResult::Status::Optimal;
}

}  // namespace dp2
