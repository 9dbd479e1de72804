// Analytic leg-cost estimator: Hohmann transfers combined with circular
// waiting orbits to meet a phase constraint, plus the dense cost tensors the
// combinatorial tour solver consumes.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbtour/orbital.hpp"

namespace orbtour {

// One mission instance: chaser start orbit plus the target set, the mission
// horizon T_M, and the number of time slots per target in the discrete grid.
struct TourProblem {
    Body chaser;
    std::vector<Body> targets;  // ids 1..n positionally
    double horizon = 0.0;       // T_M [s]
    int slots_per_target = 1;   // D

    int n() const { return static_cast<int>(targets.size()); }
    // idx 0 is the chaser, 1..n the targets.
    const Body& body(int idx) const { return idx == 0 ? chaser : targets[idx - 1]; }
};

enum class PhasingKind {
    DirectHohmann,                  // no wait needed, transfer starts at once
    WaitThenHohmann,                // coast on the departure orbit, then Hohmann
    DoubleHohmannViaWaitingOrbit,   // detour through a circular waiting orbit
    Infeasible,                     // nothing fits in T_max; dv is the penalty
};

struct PhasingSolution {
    PhasingKind kind = PhasingKind::Infeasible;
    double r3 = 0.0;     // waiting-orbit radius [km], departure radius unless detouring
    int k_rev = 0;       // extra phase revolutions absorbed by the waiting orbit
    double t_wait = 0.0; // coast before the first burn [s]
    double dv = 0.0;     // total estimate [km/s]
};

// Coast time on the departure circle until the phase angle theta2 - theta1
// reaches the Hohmann departure value pi - omega2 * T_H12. Returns the first
// nonnegative opportunity, always below the synodic period.
// Throws std::invalid_argument when r1 == r2 (no relative drift).
double wait_time(double theta1, double theta2, double r1, double r2, const Constants& k = {});

// Which side of the departure/arrival pair the waiting orbit is searched on.
// Inner brackets [0.5 * min(r1,r2), min(r1,r2)], outer [max, 2 * max].
enum class WaitingOrbitSide { Inner, Outer };

// Radius r3 of the circular waiting orbit for the double-Hohmann scheme:
// immediate Hohmann r1 -> r3, coast, Hohmann r3 -> r2 arriving exactly at
// T_max with the phase equation satisfied to 1e-10 rad. k_rev is the number
// of extra full phase revolutions absorbed. Returns nullopt when the bracket
// holds no root for this k_rev.
std::optional<double> solve_waiting_radius(double dtheta0, double T_max, double r1, double r2,
                                           int k_rev, WaitingOrbitSide side,
                                           const Constants& k = {});

// Sub-optimal cost of one leg departing the dep orbit at t_dep and meeting
// arr at t_arr. When the phase-aligned Hohmann fits the window it is used
// as-is; otherwise the waiting-orbit candidates (inner with k_rev 0 and 1,
// outer with 0 and -1) are evaluated and the cheapest retained. When nothing
// fits, kind Infeasible carries the INFEASIBLE_COST penalty.
// Throws std::invalid_argument when t_arr <= t_dep.
PhasingSolution leg_cost_estimate(const Body& dep, const Body& arr, double t_dep, double t_arr,
                                  const Constants& k = {});

enum class TensorKind { Matrix2D, Tensor3D, Tensor4D };

// Dense leg-cost table, one flat buffer with explicit strides. Row index i
// spans 0..n (0 = chaser), column j spans 1..n; invalid entries (self
// transfers) hold the INFEASIBLE_COST penalty. Returning to the chaser is
// free by convention, so no return column exists.
struct CostTensor {
    TensorKind kind = TensorKind::Matrix2D;
    int n = 0;            // targets
    int d = 1;            // slots per target (grid builds)
    int m_cap = 0;        // duration cap in grid units (Tensor4D)
    double dt_grid = 0.0; // grid step [s]
    double horizon = 0.0; // T_M [s]
    std::vector<double> values;

    // Time-free cost, i in 0..n, j in 1..n.
    double at2(int i, int j) const { return values[i * n + (j - 1)]; }
    // Uniform-slot cost for the leg occupying slot k (0-based), slot width
    // horizon / n.
    double at3(int i, int j, int slot) const {
        return values[(i * n + (j - 1)) * n + slot];
    }
    // Grid cost departing at grid index h with duration m slots (m >= 1);
    // durations beyond the cap reuse the capped entry.
    double at4(int i, int j, int h, int m) const {
        const int mm = m > m_cap ? m_cap : m;
        return values[((i * n + (j - 1)) * (n * d) + h) * m_cap + (mm - 1)];
    }
};

// Time-free Hohmann costs for all ordered pairs.
CostTensor build_cost_matrix(const TourProblem& prob, const Constants& k = {});
// Slot-resolved estimates: entry (i, j, slot) is the leg i -> j departing at
// slot * T_M/n and arriving one slot later.
CostTensor build_cost_tensor3(const TourProblem& prob, const Constants& k = {});
// Full grid: entry (i, j, h, m) is the leg i -> j departing at h * dt and
// lasting m * dt, dt = T_M / (n * d), h in 0..n*d-1, m in 1..m_cap.
// m_cap <= 0 selects the default ceil(1.5 * d).
CostTensor build_cost_tensor4(const TourProblem& prob, int m_cap = 0, const Constants& k = {});

// FNV-1a hash of the problem definition (bodies, horizon, grid), used to
// validate tensor cache files against the problem they were built for.
std::uint64_t problem_hash(const TourProblem& prob);

// Plain-text tensor cache: one header line
//   orbtour-tensor 1 <kind> <n> <d> <m_cap> <dt_grid> <horizon> <mu> <hash>
// followed by the flat values, one per line, full precision.
bool save_cost_tensor(const CostTensor& tensor, const std::string& path, std::uint64_t hash,
                      const Constants& k = {});
// Loads and validates kind and hash; nullopt on any mismatch or parse error.
std::optional<CostTensor> load_cost_tensor(const std::string& path, TensorKind kind,
                                           std::uint64_t hash, const Constants& k = {});

}  // namespace orbtour
