// Four-impulse rendezvous leg built from three conic arcs:
//   a: departure point -> first interior point, shaped by the y parameter,
//   b: interior coast chosen as the cheapest multi-revolution Lambert arc,
//   c: second interior point -> rendezvous, shaped by its own y parameter.
// Impulses fire at the leg endpoints and at the two interior junctions.
#pragma once

#include <array>
#include <optional>

#include "orbtour/lambert.hpp"
#include "orbtour/orbital.hpp"
#include "orbtour/vec2.hpp"

namespace orbtour {

// One conic arc of a trajectory: the state right after the impulse at its
// head, plus the coast duration to the next impulse.
struct ConicArc {
    StateVector initial;
    double duration = 0.0;  // [s]
};

struct Impulse {
    double epoch = 0.0;  // [s]
    Vec2 dv;             // [km/s]
};

// Elliptic arc between two position vectors, selected by y in (0, 1).
// The semi-major axis is a_m / (4 y (1 - y)) with a_m the minimum-energy
// axis; y < 1/2 picks the fast family, y > 1/2 the slow one, and y = 1/2
// the minimum-energy ellipse. Travel is prograde through the full
// counterclockwise sweep; extra_revs adds whole revolutions to the coast.
struct YArc {
    Vec2 v_dep;          // arc velocity at r_from [km/s]
    Vec2 v_arr;          // arc velocity at r_to [km/s]
    double dt = 0.0;     // flight time including extra revolutions [s]
    double a = 0.0;      // semi-major axis [km]
    double e = 0.0;      // eccentricity, < 1
    double omega = 0.0;  // periapsis direction angle [rad]
};

// Throws std::invalid_argument when y is outside (0, 1) or the endpoints
// coincide; std::domain_error if the constructed conic degenerates (e >= 1,
// unreachable for valid inputs but guarded).
YArc y_arc(const Vec2& r_from, const Vec2& r_to, double y, const Constants& k = {},
           int extra_revs = 0);

// Free parameters of one leg. Angles are prograde offsets from the departure
// position (first interior point) and backward from the arrival position
// (second interior point); values above 2*pi wind extra revolutions into the
// adjacent arc.
struct LegParameters {
    double r_13 = 0.0;       // first interior radius [km]
    double dtheta_13 = 0.0;  // prograde angle from departure, in [0, 4*pi]
    double y_a = 0.5;        // arc a shape
    double r_23 = 0.0;       // second interior radius [km]
    double dtheta_23 = 0.0;  // prograde angle to arrival, in [0, 4*pi]
    double y_c = 0.5;        // arc c shape
};

struct LegEvaluation {
    double dv_a = 0.0;  // departure impulse magnitude [km/s]
    double dv_b = 0.0;  // both interior impulse magnitudes [km/s]
    double dv_c = 0.0;  // arrival impulse magnitude [km/s]
    double t_dep = 0.0, t_13 = 0.0, t_23 = 0.0, t_arr = 0.0;  // [s]
    std::array<ConicArc, 3> arcs;
    std::array<Impulse, 4> impulses;  // at t_dep, t_13, t_23, t_arr
    int lambert_index = 0;            // winning interior solution index L

    double total() const { return dv_a + dv_b + dv_c; }
};

// Evaluate one leg departing from dep_state (chaser state right before the
// departure impulse) and rendezvousing with arr_body at t_arr. The interior
// Lambert arc targets floor(interior_time / period(arr_body)) revolutions
// and keeps the cheapest feasible candidate. Returns nullopt when the
// interior interval is non-positive or no Lambert candidate exists; callers
// map that to the infeasible-leg penalty.
std::optional<LegEvaluation> evaluate_leg(const StateVector& dep_state, const Body& arr_body,
                                          double t_dep, double t_arr, const LegParameters& p,
                                          const Constants& k = {});

// Search-space box for leg parameters: radii within [r_lo, r_hi], angles in
// [0, 4*pi], y in [0.02, 0.98] (the optimizer clamp from the leg model).
struct LegBounds {
    double r_lo = 0.0, r_hi = 0.0;  // [km]
    static constexpr double DTHETA_LO = 0.0;
    static constexpr double DTHETA_HI = 2.0 * TWO_PI;
    static constexpr double Y_LO = 0.02;
    static constexpr double Y_HI = 0.98;
};

}  // namespace orbtour
