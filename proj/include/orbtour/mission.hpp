// Mission-level trajectory assembly: a fully specified multi-rendezvous plan
// (visit order, encounter epochs, per-leg continuous parameters) evaluated
// into a cost breakdown and a propagatable trajectory.
#pragma once

#include <stdexcept>
#include <vector>

#include "orbtour/leg.hpp"
#include "orbtour/phasing.hpp"

namespace orbtour {

// Complete decision vector of a mission over a TourProblem. sequence holds
// 1-based indices into the problem's target list; epochs are the encounter
// times, strictly increasing with the last one on the mission horizon.
struct MissionPlan {
    std::vector<int> sequence;
    std::vector<double> epochs;  // [s]
    std::vector<LegParameters> legs;
};

// Piecewise-conic flight path: three coast arcs per leg and the four impulses
// joining them. Impulse vectors are stored so the cost can be re-audited from
// the trajectory alone.
struct Trajectory {
    std::vector<ConicArc> arcs;
    std::vector<Impulse> impulses;
};

struct LegBreakdown {
    double dv_a = 0.0;
    double dv_b = 0.0;
    double dv_c = 0.0;

    double total() const { return dv_a + dv_b + dv_c; }
};

struct MissionEvaluation {
    double dv_total = 0.0;  // [km/s]
    std::vector<LegBreakdown> legs;
    Trajectory trajectory;
};

// Raised when a leg of the plan cannot be flown (non-positive interior
// interval or no usable interior arc); carries the 0-based leg index.
struct InfeasibleLeg : std::runtime_error {
    int leg_index;

    explicit InfeasibleLeg(int idx)
        : std::runtime_error("mission leg " + std::to_string(idx) + " is infeasible"),
          leg_index(idx) {}
};

// Evaluate a plan over its problem. Throws std::invalid_argument when the
// plan violates its invariants (sequence not a permutation of all targets,
// epochs not strictly increasing or not ending on the horizon, size
// mismatches) and InfeasibleLeg when a leg cannot be flown.
MissionEvaluation evaluate_mission(const TourProblem& prob, const MissionPlan& plan,
                                   const Constants& k = {});

// One row of the radius-time history: elapsed seconds, distance from the
// primary, and whether an impulse fires at this instant.
struct TraceSample {
    double t = 0.0;  // [s]
    double r = 0.0;  // [km]
    int event = 0;   // 1 at impulse epochs
};

// Uniform-in-time sampling of |position| along every arc, with impulse
// markers interleaved at their epochs. Time is non-decreasing.
std::vector<TraceSample> export_radius_time_trace(const Trajectory& trajectory,
                                                  int samples_per_arc = 200,
                                                  const Constants& k = {});

}  // namespace orbtour
