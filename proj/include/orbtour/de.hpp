// Self-adaptive Differential Evolution with an island model.
//
// The engine evolves several sub-populations ("islands"), each with a fixed
// mutation strategy, exchanging elite individuals at synchronous migration
// events. Each individual carries private copies of the scale factor F and
// crossover probability Cr that adapt over the run. A diversity-triggered
// partial restart ("epidemic") guards against premature convergence.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "orbtour/rng.hpp"

namespace orbtour {

// Objective over a real vector; smaller is better. Must be total: infeasible
// regions are encoded as large penalty values, never exceptions.
using Objective = std::function<double(const std::vector<double>&)>;

struct DEBounds {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t dim() const { return lower.size(); }
    // Euclidean length of the box diagonal, used to normalize diversity.
    double diagonal() const;
};

// Mutation strategies, numbered as conventionally cited.
enum class DEStrategy {
    Rand1Bin = 1,
    Best1Bin = 2,
    TargetToBest1Bin = 3,
    Best2Bin = 4,
};

struct Individual {
    std::vector<double> genes;
    double f = 0.5;    // scale factor, in [0.1, 1.0]
    double cr = 0.9;   // crossover probability, in [0, 1]
    double fitness = 0.0;
};

struct EpidemicConfig {
    // Mean pairwise Euclidean distance, normalized by the bounds diagonal,
    // below which the restart fires.
    double diversity_threshold = 1.0e-3;
    int spare_count = 3;           // best individuals kept untouched
    int max_events = 5;            // per island, over the whole run
    int min_generation_gap = 100;  // per island, between consecutive events
};

struct DEConfig {
    int islands = 16;
    // Individuals per island; 0 picks max(30, 5 * dim).
    int population = 0;
    // Stop when either limit is reached (0 disables that limit; at least one
    // must be set). Evaluations count every objective call, including
    // initialization and epidemic refills.
    long long max_evaluations = 0;
    int max_generations = 0;
    int migration_period = 50;  // generations between exchanges; 0 disables
    int migrants = 2;           // n_b elites copied along each ring edge
    std::uint64_t seed = 0;
    // Per-island strategy assignment; empty selects the default layout
    // (first half alternates Rand1Bin / TargetToBest1Bin for exploration,
    // second half Best1Bin / Best2Bin for exploitation). A shorter vector
    // repeats cyclically.
    std::vector<DEStrategy> strategies;
    // Explicit per-island RNG seeds; empty derives them from `seed`. Used to
    // replay a single island of a larger archipelago in isolation.
    std::vector<std::uint64_t> island_seeds;
    // Initial guesses injected round-robin across islands in place of random
    // members (clamped to bounds before use).
    std::vector<std::vector<double>> seeds;
    EpidemicConfig epidemic;
    double jde_tau1 = 0.1;  // resample probability for F
    double jde_tau2 = 0.1;  // resample probability for Cr
    bool record_history = false;
};

struct DEResult {
    std::vector<double> best;
    double best_fitness = 0.0;
    long long evaluations = 0;
    int generations = 0;
    int epidemic_events = 0;
    // Best fitness present in the whole archipelago after each generation
    // (index 0 is the initial population). Filled when record_history is set.
    std::vector<double> history;
    std::vector<std::vector<double>> island_history;
};

// Scaled-difference mutant for one target individual. Donor indices are drawn
// mutually distinct and different from the target; `best_index` supplies the
// elite for the best-based strategies. Requires at least 5 individuals.
std::vector<double> mutate(DEStrategy strategy, const std::vector<Individual>& population,
                           std::size_t target_index, std::size_t best_index, double f, Rng& rng);

// Binomial crossover: every gene comes from the mutant with probability cr,
// and one forced position always does.
std::vector<double> crossover_bin(const std::vector<double>& target,
                                  const std::vector<double>& mutant, double cr, Rng& rng);

// Trial-parameter draw: resample F uniform in [0.1, 1.0] with probability
// tau1, Cr uniform in [0, 1] with probability tau2, else inherit.
void jde_update(double& f, double& cr, double tau1, double tau2, Rng& rng);

// Mean pairwise Euclidean distance of the population genes, normalized by the
// bounds diagonal.
double population_diversity(const std::vector<Individual>& population, const DEBounds& bounds);

// If diversity falls below the threshold, keep the spare_count best
// individuals and reinitialize the rest uniformly in bounds with fresh
// control parameters and fitnesses. Returns whether the restart fired.
bool epidemic_check(std::vector<Individual>& population, const DEBounds& bounds,
                    const EpidemicConfig& epidemic, const Objective& objective, Rng& rng,
                    long long& evaluations);

enum class MigrationTide { Forward, Backward };

// Synchronous ring migration: each island's n_b best replace the n_b worst of
// the next island along the tide direction. Donors are snapshotted before any
// replacement, so the exchange order does not matter.
void migrate(std::vector<std::vector<Individual>>& islands, int n_b, MigrationTide tide);

DEResult de_optimize(const Objective& objective, const DEBounds& bounds, const DEConfig& config);

}  // namespace orbtour
