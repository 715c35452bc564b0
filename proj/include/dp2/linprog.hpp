#pragma once

#include "dp2/rational.hpp"

#include <vector>

namespace dp2 {

// Exact rational simplex for  max c.x  s.t.  A x = b, x >= 0.
// Bland's rule throughout, so termination is unconditional.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rat value;
    std::vector<Rat> x;
};

LpResult solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c);

bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b);

}  // namespace dp2
