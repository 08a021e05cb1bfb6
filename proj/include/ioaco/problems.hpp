#ifndef IOACO_PROBLEMS_HPP
#define IOACO_PROBLEMS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ioaco/archive.hpp"
#include "ioaco/pareto.hpp"

namespace ioaco {

enum class ProblemFamily { dtlz, wfg };

struct ProblemSpec {
    ProblemFamily family = ProblemFamily::dtlz;
    int index = 1;                 // 1..9
    std::size_t n_obj = 3;
    std::size_t n_vars = 0;
    std::size_t position_params = 0;  // k
    SearchSpace space;
    bool constrained = false;      // dtlz8 and dtlz9 carry side constraints

    std::string id() const;       // "dtlz1".."wfg9"
};

/// Builds the spec with the standard dimension settings:
/// dtlz1 k=5, dtlz2..6 k=10, dtlz7 k=20, all with n = m + k - 1;
/// dtlz8/9 k = m-1 with n = 10m; wfg k = 2(m-1) with n = 24/47/70/105
/// for m = 3/5/7/10 (n = k + 20 for other m).
ProblemSpec make_problem(ProblemFamily family, int index, std::size_t n_obj);

/// Accepts ids "dtlz1".."dtlz9" and "wfg1".."wfg9".
ProblemSpec make_problem(const std::string& id, std::size_t n_obj);

struct Evaluation {
    ObjectiveVector objectives;
    double violation = 0.0;  // sum of positive constraint excesses
};

/// All objectives minimized. Throws on dimension mismatch or a decision
/// vector outside the box.
Evaluation evaluate(const ProblemSpec& spec, std::span<const double> x);

/// Draws `count` mutually non-dominated points on (or numerically near)
/// the true Pareto front in objective space, from the known parametric
/// descriptions. Same (spec, count, seed) gives an identical sample.
std::vector<ObjectiveVector> sample_true_front(const ProblemSpec& spec, std::size_t count,
                                               std::uint64_t seed);

namespace detail {
Evaluation evaluate_dtlz(const ProblemSpec& spec, std::span<const double> x);
Evaluation evaluate_wfg(const ProblemSpec& spec, std::span<const double> x);
/// One random Pareto-optimal decision vector (position parameters sampled,
/// distance parameters at their optimal setting).
std::vector<double> wfg_optimal_solution(const ProblemSpec& spec, Rng& rng);
} // namespace detail

} // namespace ioaco

#endif
