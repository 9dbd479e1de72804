// End-to-end orchestration: targets-table ingestion, run configuration,
// staged execution (cost tensor, annealed tour, trajectory refinement in
// both epoch modes), and machine-readable report emission.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbtour/mission.hpp"
#include "orbtour/refine.hpp"
#include "orbtour/tour.hpp"

namespace orbtour {

// Malformed configuration text or invalid option values.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Malformed data files: targets table, tour files, tensor caches.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads a targets table: one header line, then `id,radius_km,theta0_deg`
// rows. Angles arrive in degrees and are stored in radians. Throws DataError
// naming the offending line on parse failures, duplicate ids, or an empty
// file.
std::vector<Body> ingest_targets(const std::string& path);
std::vector<Body> ingest_targets_stream(std::istream& in, const std::string& name);

// Writes the same format at full precision, so ingesting the output yields
// bit-identical bodies.
void write_targets(const std::string& path, const std::vector<Body>& bodies);

struct ProblemConfig {
    std::string targets_file;
    int n = 0;              // mission size; the tour visits table ids 1..n
    int d = 1;              // encounter slots per target
    double t_m_days = 0.0;  // mission horizon [days]
    int m_cap = 0;          // leg-duration cap in grid slots; 0 = builder default
};

struct RunConfig {
    ProblemConfig problem;
    SAConfig sa;   // per-chain seeds are derived, the seed field is ignored
    DEConfig de;   // per-stage seeds are derived, the seed field is ignored
    int restarts = 25;          // independent annealing chains
    bool seed_heuristic = true; // inject analytic guesses into refinement
    std::uint64_t seed = 0;     // master seed; all stage randomness derives from it
    std::string output_dir;     // empty = keep everything in memory
    int workers = 1;            // threads for the annealing chains
};

// Flat `key = value` text, one pair per line; '#' starts a comment. Unknown
// keys and malformed values throw ConfigError naming the line.
RunConfig parse_run_config(const std::string& path);
RunConfig parse_run_config_stream(std::istream& in, const std::string& name);

// Selects the chaser (id 0) and targets with ids 1..n from an ingested
// table; throws DataError when any of them is missing.
TourProblem make_problem(const std::vector<Body>& bodies, const ProblemConfig& problem);

// Content digests chaining the stages together: each stage's report entry
// records the digest of exactly the data it consumed.
std::uint64_t tensor_digest(const CostTensor& tensor);
std::uint64_t tour_digest(const DecodedTour& tour);
std::uint64_t plan_digest(const MissionPlan& plan);

struct StageTiming {
    std::string name;
    double seconds = 0.0;
    std::uint64_t input_digest = 0;
};

struct LegRow {
    int id = 0;
    double t_day = 0.0;  // encounter epoch [days]
    double dv = 0.0;     // leg cost [km/s]
};

// One stage's solution: its total, the mission plan (legs empty for the
// annealed stage, which has no continuous parameters yet), the per-leg table
// whose dv column sums to the total, and the radius-time history for stages
// that produce flyable trajectories.
struct StageSolution {
    double cost = 0.0;  // [km/s]
    bool feasible = false;
    MissionPlan plan;
    std::vector<LegRow> legs;
    std::vector<TraceSample> trace;
    long long evaluations = 0;
};

struct RunReport {
    int schema = 1;
    RunConfig config;
    std::uint64_t problem_digest = 0;

    std::vector<double> chain_costs;  // per-restart annealed totals
    DecodedTour tour;                 // winning decoded tour
    StageSolution annealed;
    StageSolution refined_fixed;
    StageSolution refined_free;
    std::array<long, 4> move_proposals{};     // pooled over chains
    std::array<long, 4> move_improvements{};  // downhill acceptances per operator
    std::vector<StageTiming> stages;

    bool complete = false;
    std::string error;  // first stage failure; empty when complete
};

enum class PipelineStage { Tensor, Anneal, RefineFixed, RefineFree };

// Executes the stages in order: cost tensor, `restarts` annealing chains,
// refinement of the winning tour with fixed encounter epochs, then with free
// interior epochs seeded from the fixed solution. `last` truncates the run
// after that stage (the tensor-only and outer-level-only subcommands). A
// stage failure stops the run and returns the partial report with `error`
// set; when output_dir is nonempty every completed artifact is persisted
// before returning.
RunReport run_pipeline(const RunConfig& config, const Constants& k = {},
                       PipelineStage last = PipelineStage::RefineFree);

// Writes report.json plus per-leg CSV tables, radius-time traces, and the
// winning tour file into dir. Returns the paths written; throws DataError
// on IO failures.
std::vector<std::string> emit_report(const RunReport& report, const std::string& dir);

// Tour interchange file: header `orbtour-tour 1 <n> <d> <horizon>` followed
// by the sequence, slot, and epoch lines.
void write_tour(const std::string& path, const DecodedTour& tour, int n, int d, double horizon);
DecodedTour read_tour(const std::string& path, int& n, int& d, double& horizon);

}  // namespace orbtour
