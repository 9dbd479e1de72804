// Planar two-body orbital mechanics: circular-orbit kinematics, elliptic
// Kepler propagation and Hohmann transfers. Units are km, s, rad throughout;
// angles enter in degrees only at ingestion boundaries.
#pragma once

#include <numbers>
#include <vector>

#include "orbtour/vec2.hpp"

namespace orbtour {

inline constexpr double PI = std::numbers::pi;
inline constexpr double TWO_PI = 2.0 * std::numbers::pi;

// Default Earth gravitational parameter [km^3/s^2].
inline constexpr double MU_EARTH = 398600.4418;

// Cost assigned to transfers no scheme can realize [km/s]. Large enough to
// dominate any physical tour while staying finite for the optimizers.
inline constexpr double INFEASIBLE_COST = 1.0e3;

struct Constants {
    double mu = MU_EARTH;  // [km^3/s^2]
};

// Wrap an angle into [0, 2*pi).
double wrap_two_pi(double ang);

// A body on a circular coplanar orbit. id 0 is reserved for the chaser's
// parking orbit; targets use ids 1..N.
struct Body {
    int id = 0;
    double radius = 0.0;  // [km]
    double theta0 = 0.0;  // anomaly at t = 0, wrapped to [0, 2*pi) [rad]
};

struct StateVector {
    Vec2 position;  // [km]
    Vec2 velocity;  // [km/s]
    double epoch = 0.0;  // [s]
};

// Circular orbit period 2*pi*sqrt(r^3/mu) [s].
double period(double radius, const Constants& k = {});

// Circular orbit angular rate sqrt(mu/r^3) [rad/s].
double mean_motion(double radius, const Constants& k = {});

// Circular orbit speed sqrt(mu/r) [km/s].
double circular_speed(double radius, const Constants& k = {});

// State of a body on its circular orbit at epoch t (prograde, counterclockwise).
StateVector circular_state(const Body& body, double t, const Constants& k = {});

// Propagate a state along its two-body conic by dt seconds.
// Solves the elliptic Kepler equation in universal difference form by Newton
// iteration with a bisection fallback (tolerance 1e-12 rad on the eccentric
// anomaly change). Throws std::domain_error for non-elliptic states.
StateVector propagate_kepler(const StateVector& state, double dt, const Constants& k = {});

struct HohmannTransfer {
    double dv1 = 0.0;       // departure impulse [km/s]
    double dv2 = 0.0;       // arrival impulse [km/s]
    double dv = 0.0;        // dv1 + dv2 [km/s]
    double duration = 0.0;  // half-ellipse flight time pi*sqrt(a^3/mu) [s]
};

// Two-impulse circle-to-circle transfer along the half-ellipse with
// a = (r1 + r2) / 2. Requires r1, r2 > 0; r1 == r2 degenerates to zero cost.
HohmannTransfer hohmann(double r1, double r2, const Constants& k = {});

// Specific orbital energy [km^2/s^2] and angular momentum z-component
// [km^2/s] of a state; conserved along propagation.
double specific_energy(const StateVector& s, const Constants& k = {});
double angular_momentum(const StateVector& s);

}  // namespace orbtour
