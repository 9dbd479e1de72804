// Planar two-point boundary value (Lambert) solver with multi-revolution
// support, following the Lancaster-Blanchard formulation with Izzo's
// Householder iteration on the universal variable x.
//
// Transfers are prograde (counterclockwise). The solution index L selects the
// revolution count |L| and, for |L| > 0, the branch: L > 0 is the right
// branch (larger x, lower energy), L < 0 the left branch.
#pragma once

#include <optional>
#include <vector>

#include "orbtour/orbital.hpp"
#include "orbtour/vec2.hpp"

namespace orbtour {

struct LambertResult {
    Vec2 v_dep;  // velocity on the arc at departure [km/s]
    Vec2 v_arr;  // velocity on the arc at arrival [km/s]
    int L = 0;   // solution index: revolutions = |L|, sign = branch
};

inline constexpr int LAMBERT_MAX_REVS = 50;

// Solve the prograde transfer from r_dep to r_arr in dt seconds with solution
// index L. Returns nullopt when dt is below the minimum flight time for |L|
// revolutions or the iteration fails to converge (tolerance 1e-12 on x,
// at most 60 iterations).
//
// Throws std::invalid_argument for dt <= 0 or |L| > n_max, and
// std::domain_error when the transfer angle is within 1e-10 of 0 (radial
// geometry, no unique prograde arc).
std::optional<LambertResult> lambert_solve(const Vec2& r_dep, const Vec2& r_arr, double dt,
                                           int L, const Constants& k = {},
                                           int n_max = LAMBERT_MAX_REVS);

// All solutions with revolution counts in {revs-1, revs, revs+1} clipped to
// [0, n_max]: up to two branches per nonzero count plus the single-revolution
// zero-rev arc, at most six results. Infeasible indices are omitted; the
// order is by increasing revolution count, left branch before right.
std::vector<LambertResult> lambert_candidates(const Vec2& r_dep, const Vec2& r_arr, double dt,
                                              int revs, const Constants& k = {},
                                              int n_max = LAMBERT_MAX_REVS);

}  // namespace orbtour
