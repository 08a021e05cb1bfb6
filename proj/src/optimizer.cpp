#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ioaco/optimizer.hpp"
#include "ioaco/rng.hpp"

namespace ioaco {
namespace {

// stream tags keeping initialization and per-ant randomness disjoint
constexpr std::uint64_t kInitStream = 0x696e6974;  // "init"
constexpr std::uint64_t kAntStream = 0x616e74;     // "ant"

struct SortKey {
    std::size_t front;
    std::size_t strength;
    std::size_t birth;
    std::size_t index;
};

bool key_less(const SortKey& a, const SortKey& b) {
    if (a.front != b.front) return a.front < b.front;
    if (a.strength != b.strength) return a.strength > b.strength;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.index < b.index;
}

void sort_archive(std::vector<ArchiveSolution>& rows) {
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return key_less({rows[a].front, rows[a].strength, rows[a].birth, a},
                        {rows[b].front, rows[b].strength, rows[b].birth, b});
    });
    std::vector<ArchiveSolution> sorted;
    sorted.reserve(rows.size());
    for (std::size_t i : order) sorted.push_back(std::move(rows[i]));
    rows = std::move(sorted);
}

// Normalizes, ranks and sorts the rows in place, then refreshes the kernel
// weights; shared by initialization and the per-iteration truncation path.
void finish_ranking(PheromoneArchive& archive, const DmModel& dm,
                    const OptimizerConfig& config) {
    std::vector<ObjectiveVector> raw;
    std::vector<double> violations;
    raw.reserve(archive.solutions.size());
    violations.reserve(archive.solutions.size());
    for (const auto& s : archive.solutions) {
        raw.push_back(s.objectives);
        violations.push_back(s.violation);
    }
    const std::vector<ObjectiveVector> norm = normalize(raw, config.norm_epsilon);
    const detail::RankOutcome ranks =
        detail::rank_population(norm, violations, dm, config.mode);
    for (std::size_t i = 0; i < archive.solutions.size(); ++i) {
        archive.solutions[i].normalized = norm[i];
        archive.solutions[i].front = ranks.front[i];
        archive.solutions[i].strength = ranks.strength[i];
        archive.solutions[i].weakness = ranks.weakness[i];
    }
    sort_archive(archive.solutions);
    if (config.mode == OptimizerMode::preference) {
        std::vector<std::size_t> fronts;
        fronts.reserve(archive.solutions.size());
        for (const auto& s : archive.solutions) fronts.push_back(s.front);
        archive.weights = rank_weights(fronts, config.zeta);
    } else {
        archive.weights = rank_weights_positional(archive.solutions.size(), config.zeta);
    }
}

} // namespace

std::string to_string(OptimizerMode mode) {
    return mode == OptimizerMode::preference ? "preference" : "pareto-baseline";
}

OptimizerMode optimizer_mode_from_string(const std::string& text) {
    if (text == "preference") return OptimizerMode::preference;
    if (text == "pareto-baseline" || text == "baseline") {
        return OptimizerMode::pareto_baseline;
    }
    throw std::invalid_argument("unknown optimizer mode: " + text);
}

void validate(const OptimizerConfig& config) {
    if (config.kappa < 2) throw std::invalid_argument("kappa must be at least 2");
    if (config.iter_max < 1) throw std::invalid_argument("iter_max must be at least 1");
    if (!(config.zeta > 0.0)) throw std::invalid_argument("zeta must be positive");
    if (!(config.xi > 0.0)) throw std::invalid_argument("xi must be positive");
    if (!(config.norm_epsilon > 0.0)) {
        throw std::invalid_argument("normalization epsilon must be positive");
    }
}

std::vector<ObjectiveVector> normalize(const std::vector<ObjectiveVector>& objectives,
                                       double epsilon) {
    if (objectives.empty()) throw std::invalid_argument("nothing to normalize");
    const std::size_t m = objectives.front().size();
    std::vector<double> lo(m, std::numeric_limits<double>::infinity());
    std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
    for (const auto& f : objectives) {
        if (f.size() != m) throw std::invalid_argument("ragged objective list");
        for (std::size_t k = 0; k < m; ++k) {
            lo[k] = std::min(lo[k], f[k]);
            hi[k] = std::max(hi[k], f[k]);
        }
    }
    std::vector<ObjectiveVector> out(objectives.size(), ObjectiveVector(m));
    for (std::size_t k = 0; k < m; ++k) {
        const double den = std::max(hi[k] - lo[k], epsilon);
        for (std::size_t i = 0; i < objectives.size(); ++i) {
            out[i][k] = (objectives[i][k] - lo[k]) / den;
        }
    }
    return out;
}

namespace detail {

RankOutcome rank_population(const std::vector<ObjectiveVector>& normalized,
                            const std::vector<double>& violations, const DmModel& dm,
                            OptimizerMode mode) {
    const std::size_t n = normalized.size();
    RankOutcome out;
    out.front.assign(n, 0);
    out.strength.assign(n, 0);
    out.weakness.assign(n, 0);

    std::vector<std::size_t> feasible;
    std::vector<std::size_t> infeasible;
    for (std::size_t i = 0; i < n; ++i) {
        (violations[i] > 0.0 ? infeasible : feasible).push_back(i);
    }

    std::size_t worst_front = 0;
    if (!feasible.empty()) {
        std::vector<ObjectiveVector> sub;
        sub.reserve(feasible.size());
        for (std::size_t i : feasible) sub.push_back(normalized[i]);
        if (mode == OptimizerMode::preference) {
            const PopulationAnalysis analysis = analyze_population(sub, dm);
            for (std::size_t j = 0; j < feasible.size(); ++j) {
                out.front[feasible[j]] = analysis.fronts[j];
                out.strength[feasible[j]] = analysis.strength[j];
                out.weakness[feasible[j]] = analysis.weakness[j];
                worst_front = std::max(worst_front, analysis.fronts[j]);
            }
        } else {
            const std::vector<std::size_t> fronts = non_dominated_sort(sub);
            for (std::size_t j = 0; j < feasible.size(); ++j) {
                out.front[feasible[j]] = fronts[j];
                worst_front = std::max(worst_front, fronts[j]);
            }
        }
    }
    if (!infeasible.empty()) {
        std::sort(infeasible.begin(), infeasible.end(), [&](std::size_t a, std::size_t b) {
            if (violations[a] != violations[b]) return violations[a] < violations[b];
            return a < b;
        });
        std::size_t front = worst_front;
        double prev = -1.0;
        for (std::size_t i : infeasible) {
            if (violations[i] != prev) {
                ++front;
                prev = violations[i];
            }
            out.front[i] = front;
        }
    }
    return out;
}

} // namespace detail

OptimizerState initialize(const ProblemSpec& problem, const DmModel& dm,
                          const OptimizerConfig& config) {
    validate(config);
    if (config.mode == OptimizerMode::preference) {
        validate(dm);
        if (dm.n_obj() != problem.n_obj) {
            throw std::invalid_argument("decision-maker model arity does not match problem");
        }
    }
    validate(problem.space);

    OptimizerState state;
    state.problem = problem;
    state.config = config;
    state.dm = dm;
    state.archive.zeta = config.zeta;
    state.archive.xi = config.xi;

    Rng rng(mix_seed({config.seed, kInitStream}));
    state.archive.solutions.reserve(config.kappa);
    for (std::size_t i = 0; i < config.kappa; ++i) {
        ArchiveSolution s;
        s.x.resize(problem.n_vars);
        for (std::size_t j = 0; j < problem.n_vars; ++j) {
            s.x[j] = rng.uniform(problem.space.lower[j], problem.space.upper[j]);
        }
        Evaluation eval = evaluate(problem, s.x);
        s.objectives = std::move(eval.objectives);
        s.violation = eval.violation;
        s.birth = 0;
        state.archive.solutions.push_back(std::move(s));
    }
    state.evaluations = config.kappa;
    finish_ranking(state.archive, state.dm, config);
    return state;
}

void step(OptimizerState& state) {
    const OptimizerConfig& config = state.config;
    const std::size_t n_ants = config.ants();
    ++state.iteration;

    std::vector<ArchiveSolution> merged = state.archive.solutions;
    merged.reserve(merged.size() + n_ants);
    for (std::size_t ant = 0; ant < n_ants; ++ant) {
        Rng rng(mix_seed({config.seed, kAntStream, state.iteration, ant}));
        ArchiveSolution s;
        s.x = construct_solution(state.archive, state.problem.space, rng);
        Evaluation eval = evaluate(state.problem, s.x);
        s.objectives = std::move(eval.objectives);
        s.violation = eval.violation;
        s.birth = state.iteration;
        merged.push_back(std::move(s));
    }
    state.evaluations += n_ants;

    std::vector<ObjectiveVector> raw;
    std::vector<double> violations;
    raw.reserve(merged.size());
    violations.reserve(merged.size());
    for (const auto& s : merged) {
        raw.push_back(s.objectives);
        violations.push_back(s.violation);
    }
    const std::vector<ObjectiveVector> norm = normalize(raw, config.norm_epsilon);
    const detail::RankOutcome ranks =
        detail::rank_population(norm, violations, state.dm, config.mode);
    for (std::size_t i = 0; i < merged.size(); ++i) {
        merged[i].normalized = norm[i];
        merged[i].front = ranks.front[i];
        merged[i].strength = ranks.strength[i];
        merged[i].weakness = ranks.weakness[i];
    }
    sort_archive(merged);
    merged.resize(std::min<std::size_t>(config.kappa, merged.size()));

    // Re-rank the survivors among themselves so the stored fronts describe
    // the archive, not the discarded merge set.
    state.archive.solutions = std::move(merged);
    finish_ranking(state.archive, state.dm, config);
}

RunResult run(const ProblemSpec& problem, const DmModel& dm, const OptimizerConfig& config) {
    OptimizerState state = initialize(problem, dm, config);

    RunResult result;
    result.problem = problem;
    result.config = config;
    if (config.mode == OptimizerMode::preference) result.dm = dm;

    auto record = [&](const OptimizerState& s) {
        if (!config.trace) return;
        TracePoint point;
        point.iteration = s.iteration;
        std::size_t worst = 0;
        for (const auto& row : s.archive.solutions) worst = std::max(worst, row.front);
        point.front_histogram.assign(worst, 0);
        for (const auto& row : s.archive.solutions) ++point.front_histogram[row.front - 1];
        point.best_weakness = s.archive.solutions.front().weakness;
        point.best_strength = s.archive.solutions.front().strength;
        result.trace.push_back(std::move(point));
    };

    record(state);
    for (std::size_t t = 0; t < config.iter_max; ++t) {
        step(state);
        record(state);
    }

    result.archive = std::move(state.archive);
    result.evaluations = state.evaluations;
    for (std::size_t i = 0; i < result.archive.solutions.size(); ++i) {
        if (result.archive.solutions[i].front == 1) result.best_compromise.push_back(i);
    }
    return result;
}

} // namespace ioaco
