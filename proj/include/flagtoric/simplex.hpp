#pragma once

#include <optional>
#include <vector>

#include "flagtoric/linalg.hpp"

namespace flagtoric {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status;
  Rat objective;
  RatVec solution;
};

// min c.z subject to A z = b, z >= 0. Two-phase dense simplex with Bland's
// rule, exact rational pivots.
LpResult solve_lp(RatMat A, RatVec b, RatVec c);

// Feasibility of { ineq_A x <= ineq_b, eq_A x = eq_b } with x free.
std::optional<RatVec> feasible_point(const RatMat& ineq_A, const RatVec& ineq_b,
                                     const RatMat& eq_A, const RatVec& eq_b);

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& p);
bool in_cone(const std::vector<RatVec>& generators, const RatVec& p);

}  // namespace flagtoric
