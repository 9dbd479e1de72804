// Inner-level refinement: once a visit order and nominal encounter epochs are
// fixed, the continuous leg parameters (and optionally the epochs themselves)
// are optimized with the differential-evolution engine.
//
// TimeFixed keeps every encounter at its nominal epoch and solves one
// independent six-variable problem per leg. TimeFree optimizes all legs
// jointly plus the interior epochs, each confined to the midpoint-contiguous
// interval around its nominal value; the final epoch stays on the horizon.
#pragma once

#include <optional>
#include <vector>

#include "orbtour/de.hpp"
#include "orbtour/mission.hpp"

namespace orbtour {

enum class RefineMode { TimeFixed, TimeFree };

struct InnerProblem {
    RefineMode mode = RefineMode::TimeFixed;
    std::vector<int> sequence;           // 1-based target indices, visit order
    std::vector<double> nominal_epochs;  // t_1..t_N, last one on the horizon [s]
};

struct RefineConfig {
    // Budget and topology template. TimeFixed derives one sub-run per leg
    // from it (seed offset by the leg index); TimeFree runs it once.
    DEConfig de;
    // Inject analytic starting guesses built from the phasing schemes.
    bool seed_heuristic = true;
    // Added per unreached leg when a trajectory cannot be flown, so partially
    // feasible vectors still rank by how far they get.
    double penalty = INFEASIBLE_COST;
};

struct RefineResult {
    MissionPlan plan;
    double dv_total = 0.0;        // penalized when infeasible
    bool feasible = false;
    std::vector<double> leg_dv;   // per-leg totals, empty when infeasible
    long long evaluations = 0;
};

// Six-variable search box shared by every leg of a problem: radii spread
// 200 km beyond the extreme orbit radii, full angle and shape ranges.
DEBounds leg_parameter_bounds(const TourProblem& prob);

// Per-epoch search intervals for the TimeFree mode: epoch k may move half way
// toward each neighboring nominal epoch (the mission start and the horizon
// act as outer neighbors). Returned as bounds over the n-1 free epochs.
DEBounds epoch_bounds(const std::vector<double>& nominal_epochs);

// Analytic starting guesses for one leg: exact leg-parameter renditions of
// the phase-aligned Hohmann (waiting coasts on both circles) and of the
// double-Hohmann detours through each admissible waiting orbit. Guesses that
// are not representable within the parameter ranges are simply omitted.
std::vector<LegParameters> heuristic_leg_seeds(const Body& dep, const Body& arr, double t_dep,
                                               double t_arr, const Constants& k = {});

// y selecting the circular orbit itself as the arc between two points of the
// same circle separated by `sweep` (fast-family root).
double circle_arc_y(double sweep);

RefineResult solve_inner(const TourProblem& prob, const InnerProblem& inner,
                         const RefineConfig& config, const Constants& k = {});

}  // namespace orbtour
