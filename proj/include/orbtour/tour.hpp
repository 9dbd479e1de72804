// Outer combinatorial layer: permutation encodings for the three tour
// formulations, neighbor moves, simulated annealing, and a brute-force
// oracle for small instances.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "orbtour/phasing.hpp"
#include "orbtour/rng.hpp"

namespace orbtour {

// Distinct integers 1..len. For the time-free and time-uniform formulations
// len = N and every value is a target id; for the time-discrete formulation
// len = N*D and values above N are blanks marking unused grid slots.
using AugmentedPermutation = std::vector<int>;

struct DecodedTour {
    std::vector<int> sequence;   // N target ids in encounter order
    std::vector<int> slots;      // 1-based grid indices h_k, strictly increasing
    std::vector<double> epochs;  // t_k = h_k * T_M / (N*D) [s]
};

// Values <= n in pi, scanned left to right, give the encounter sequence; the
// positions holding them give the encounter epochs on the uniform grid.
DecodedTour decode(const AugmentedPermutation& pi, int n, int d, double horizon);

// Inverse of decode up to blank placement: targets land on their slots and
// blank values n+1..n*d fill the remaining positions in ascending order.
AugmentedPermutation encode_canonical(const DecodedTour& tour, int n, int d);

// Tour costs under the three formulations; p0 = 0 (chaser), t0 = 0, and the
// return to the chaser is free. The sequence arguments are permutations of
// 1..N; the discrete variant takes the augmented permutation.
double tour_cost_time_free(const std::vector<int>& p, const CostTensor& matrix);
double tour_cost_time_uniform(const std::vector<int>& p, const CostTensor& tensor3);
double tour_cost_time_discrete(const AugmentedPermutation& pi, const CostTensor& tensor4);

enum class MoveKind { Insert, Swap, Reverse, Scramble };

// Explicit-index move primitives (indices 0-based, inclusive spans).
void move_insert(AugmentedPermutation& pi, int from, int to);
void move_swap(AugmentedPermutation& pi, int i, int j);
void move_reverse(AugmentedPermutation& pi, int i, int j);
void move_scramble(AugmentedPermutation& pi, int i, int j, Rng& rng);

// Draws indices uniformly and applies one move in place.
void apply_move(AugmentedPermutation& pi, MoveKind move, Rng& rng);

AugmentedPermutation random_permutation(int len, Rng& rng);

struct SAConfig {
    double t0 = 10.0;      // initial temperature (costs normalized, see below)
    double tf = 1.0e-6;    // stop temperature
    double alpha = 0.95;   // geometric cooling factor
    int l_plateau = 0;     // iterations per temperature; <= 0 means |pi|
    long max_iters = 100000000;  // hard safety cap
    std::uint64_t seed = 0;
    std::array<double, 4> move_weights{1.0, 1.0, 1.0, 1.0};  // insert/swap/reverse/scramble
    bool normalize = true;        // divide deltas by the initial cost
    bool record_history = false;  // keep per-iteration traces
};

// Bookkeeping for the acceptance-rule and operator-effectiveness checks.
// Uphill sums accumulate the Metropolis probabilities so the measured
// acceptance count can be tested against its binomial expectation.
struct SAStats {
    double uphill_p_sum = 0.0;
    double uphill_pvar_sum = 0.0;  // sum of p*(1-p)
    long uphill_count = 0;
    long uphill_accepted = 0;
    std::array<long, 4> move_proposals{};
    std::array<long, 4> move_improvements{};
    long iterations = 0;
};

struct SAResult {
    AugmentedPermutation best;
    double best_cost = 0.0;
    SAStats stats;
    std::vector<double> best_trace;   // per-iteration, only if record_history
    std::vector<double> temperature;  // per-iteration, only if record_history
};

using TourCostFn = std::function<double(const AugmentedPermutation&)>;

// Metropolis annealing with the geometric schedule T = t0 * alpha^floor(k/L).
// Runs until T < tf or max_iters; returns the best permutation ever seen.
SAResult anneal(const TourCostFn& cost_fn, const AugmentedPermutation& initial,
                const SAConfig& config);

struct BruteForceResult {
    AugmentedPermutation best;
    double cost = 0.0;
};

// Exhaustive optimum. d == 1 enumerates the n! target orders (n <= 8);
// d > 1 enumerates slot subsets times orders of the decoded tours
// (n*d <= 10). Throws std::length_error above those limits.
BruteForceResult brute_force_tour(const TourCostFn& cost_fn, int n, int d);

}  // namespace orbtour
