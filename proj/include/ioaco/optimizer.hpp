#ifndef IOACO_OPTIMIZER_HPP
#define IOACO_OPTIMIZER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ioaco/archive.hpp"
#include "ioaco/outranking.hpp"
#include "ioaco/problems.hpp"

namespace ioaco {

enum class OptimizerMode { preference, pareto_baseline };

std::string to_string(OptimizerMode mode);
OptimizerMode optimizer_mode_from_string(const std::string& text);

struct OptimizerConfig {
    double zeta = 0.1;
    double xi = 0.5;
    std::size_t kappa = 50;
    std::size_t n_ants = 0;       // 0 means kappa
    std::size_t iter_max = 0;
    OptimizerMode mode = OptimizerMode::preference;
    double norm_epsilon = 0.001;
    double norm_alpha = 0.5;      // kept for config compatibility, not used
    std::uint64_t seed = 1;
    bool trace = false;

    std::size_t ants() const { return n_ants == 0 ? kappa : n_ants; }
};

void validate(const OptimizerConfig& config);

/// Per-objective min-max rescaling over the given set, with the denominator
/// floored at epsilon so constant objectives map to zero.
std::vector<ObjectiveVector> normalize(const std::vector<ObjectiveVector>& objectives,
                                       double epsilon);

struct TracePoint {
    std::size_t iteration = 0;
    std::vector<std::size_t> front_histogram;  // index 0 = front 1
    std::size_t best_weakness = 0;
    std::size_t best_strength = 0;
};

struct RunResult {
    ProblemSpec problem;
    OptimizerConfig config;
    std::optional<DmModel> dm;    // absent in baseline mode
    PheromoneArchive archive;     // final state, fronts ascending
    std::vector<std::size_t> best_compromise;  // indices of the front-1 slice
    std::uint64_t evaluations = 0;
    std::vector<TracePoint> trace;
};

struct OptimizerState {
    ProblemSpec problem;
    OptimizerConfig config;
    DmModel dm;                   // ignored in baseline mode
    PheromoneArchive archive;
    std::uint64_t evaluations = 0;
    std::size_t iteration = 0;
};

/// Algorithm main loop pieces. `initialize` samples kappa points uniformly in
/// the box and ranks them; `step` runs one construct/merge/rank/truncate
/// round; `run` wires the two together for iter_max iterations.
OptimizerState initialize(const ProblemSpec& problem, const DmModel& dm,
                          const OptimizerConfig& config);
void step(OptimizerState& state);
RunResult run(const ProblemSpec& problem, const DmModel& dm, const OptimizerConfig& config);

namespace detail {
/// Feasibility-first ranking used on every merged set: feasible solutions are
/// ranked by the outranking model (preference mode) or by non-dominated
/// sorting (baseline mode); infeasible ones follow in order of violation.
struct RankOutcome {
    std::vector<std::size_t> front;
    std::vector<std::size_t> strength;
    std::vector<std::size_t> weakness;
};
RankOutcome rank_population(const std::vector<ObjectiveVector>& normalized,
                            const std::vector<double>& violations, const DmModel& dm,
                            OptimizerMode mode);
} // namespace detail

} // namespace ioaco

#endif
