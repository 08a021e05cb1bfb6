#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ioaco/optimizer.hpp"

using namespace ioaco;

namespace {

DmModel equal_weight_dm(std::size_t n) {
    DmModel dm;
    for (std::size_t k = 0; k < n; ++k) {
        const double c = 1.0 / static_cast<double>(n);
        dm.weights.push_back({c * 0.9, c * 1.1});
        dm.indifference.push_back({0.01, 0.02});
        dm.veto.push_back({0.5, 0.6});
    }
    dm.lambda = {0.51, 0.65};
    dm.beta = 0.67;
    validate(dm);
    return dm;
}

OptimizerConfig small_config(std::uint64_t seed) {
    OptimizerConfig config;
    config.kappa = 12;
    config.n_ants = 12;
    config.iter_max = 10;
    config.seed = seed;
    return config;
}

bool same_archive(const PheromoneArchive& a, const PheromoneArchive& b) {
    if (a.solutions.size() != b.solutions.size()) return false;
    for (std::size_t i = 0; i < a.solutions.size(); ++i) {
        if (a.solutions[i].x != b.solutions[i].x) return false;
        if (a.solutions[i].objectives != b.solutions[i].objectives) return false;
        if (a.solutions[i].front != b.solutions[i].front) return false;
    }
    return a.weights == b.weights;
}

} // namespace

TEST_CASE("optimizer mode names round-trip") {
    CHECK(to_string(OptimizerMode::preference) == "preference");
    CHECK(to_string(OptimizerMode::pareto_baseline) == "pareto-baseline");
    CHECK(optimizer_mode_from_string("preference") == OptimizerMode::preference);
    CHECK(optimizer_mode_from_string("pareto-baseline") == OptimizerMode::pareto_baseline);
    CHECK(optimizer_mode_from_string("baseline") == OptimizerMode::pareto_baseline);
    CHECK_THROWS_AS(optimizer_mode_from_string("anneal"), std::invalid_argument);
}

TEST_CASE("configuration validation") {
    OptimizerConfig config = small_config(1);
    CHECK_NOTHROW(validate(config));

    config.iter_max = 0;
    CHECK_THROWS_AS(validate(config), std::invalid_argument);

    config = small_config(1);
    config.kappa = 1;
    CHECK_THROWS_AS(validate(config), std::invalid_argument);

    config = small_config(1);
    config.zeta = 0.0;
    CHECK_THROWS_AS(validate(config), std::invalid_argument);

    config = small_config(1);
    config.norm_epsilon = -0.001;
    CHECK_THROWS_AS(validate(config), std::invalid_argument);
}

TEST_CASE("normalization is the epsilon-floored min-max map") {
    const auto mapped = normalize({{0, 10}, {5, 20}}, 0.001);
    CHECK(mapped[0][0] == doctest::Approx(0.0));
    CHECK(mapped[0][1] == doctest::Approx(0.0));
    CHECK(mapped[1][0] == doctest::Approx(1.0));
    CHECK(mapped[1][1] == doctest::Approx(1.0));

    // Constant objective: denominator floored, everything maps to zero.
    const auto flat = normalize({{3, 1}, {3, 2}, {3, 0}}, 0.001);
    for (const auto& row : flat) CHECK(row[0] == 0.0);

    // Already spanning [0,1]: identity up to round-off.
    const auto spanned = normalize({{0.0, 1.0}, {1.0, 0.0}, {0.25, 0.5}}, 0.001);
    CHECK(spanned[2][0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(spanned[2][1] == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(normalize({}, 0.001), std::invalid_argument);
    CHECK_THROWS_AS(normalize({{1, 2}, {1}}, 0.001), std::invalid_argument);
}

TEST_CASE("feasibility-first ranking") {
    const DmModel dm = equal_weight_dm(2);
    const std::vector<ObjectiveVector> pop = {
        {0.0, 1.0}, {1.0, 0.0}, {0.5, 0.5}, {0.9, 0.9}, {0.2, 0.8}};

    SUBCASE("all feasible matches the preference analysis") {
        const auto ranks = detail::rank_population(pop, std::vector<double>(5, 0.0), dm,
                                                   OptimizerMode::preference);
        CHECK(ranks.front == surrogate_rank(pop, dm));
    }

    SUBCASE("infeasible solutions rank below every feasible one") {
        const std::vector<double> violations = {0.0, 2.5, 0.0, 0.0, 1.0};
        const auto ranks =
            detail::rank_population(pop, violations, dm, OptimizerMode::preference);
        std::size_t worst_feasible = 0;
        for (std::size_t i : {0, 2, 3}) worst_feasible = std::max(worst_feasible, ranks.front[i]);
        CHECK(ranks.front[4] > worst_feasible);   // smaller violation first
        CHECK(ranks.front[1] > ranks.front[4]);
    }

    SUBCASE("equal violations share a front") {
        const std::vector<double> violations = {0.0, 1.0, 1.0, 0.0, 3.0};
        const auto ranks =
            detail::rank_population(pop, violations, dm, OptimizerMode::preference);
        CHECK(ranks.front[1] == ranks.front[2]);
        CHECK(ranks.front[4] == ranks.front[1] + 1);
    }

    SUBCASE("baseline mode uses non-dominated sorting") {
        const auto ranks = detail::rank_population(pop, std::vector<double>(5, 0.0), dm,
                                                   OptimizerMode::pareto_baseline);
        CHECK(ranks.front == non_dominated_sort(pop));
    }
}

TEST_CASE("a dominating solution always ranks first") {
    const DmModel dm = equal_weight_dm(3);
    Rng rng(0x646f6dULL);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<ObjectiveVector> pop;
        pop.push_back({0.0, 0.0, 0.0});
        for (int i = 0; i < 9; ++i) {
            pop.push_back({rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)});
        }
        for (auto mode : {OptimizerMode::preference, OptimizerMode::pareto_baseline}) {
            const auto ranks =
                detail::rank_population(pop, std::vector<double>(pop.size(), 0.0), dm, mode);
            CHECK(ranks.front[0] == 1);
            for (std::size_t i = 1; i < pop.size(); ++i) CHECK(ranks.front[i] > 1);
        }
    }
}

TEST_CASE("initialization samples inside the box and ranks the seed archive") {
    const ProblemSpec problem = make_problem("dtlz2", 3);
    const DmModel dm = equal_weight_dm(3);
    const OptimizerConfig config = small_config(42);

    const OptimizerState state = initialize(problem, dm, config);
    CHECK(state.evaluations == config.kappa);
    CHECK(state.archive.solutions.size() == config.kappa);

    std::size_t front_one = 0;
    for (const auto& s : state.archive.solutions) {
        REQUIRE(s.x.size() == problem.n_vars);
        for (std::size_t j = 0; j < problem.n_vars; ++j) {
            CHECK(s.x[j] >= problem.space.lower[j]);
            CHECK(s.x[j] <= problem.space.upper[j]);
        }
        CHECK(s.front >= 1);
        CHECK(s.front <= config.kappa);
        if (s.front == 1) ++front_one;
    }
    CHECK(front_one > 0);

    const OptimizerState again = initialize(problem, dm, config);
    CHECK(same_archive(state.archive, again.archive));
}

TEST_CASE("stepping preserves the archive contracts") {
    const ProblemSpec problem = make_problem("dtlz1", 3);
    const DmModel dm = equal_weight_dm(3);
    OptimizerConfig config = small_config(7);

    OptimizerState state = initialize(problem, dm, config);
    for (int t = 0; t < 5; ++t) {
        step(state);
        CHECK(state.archive.solutions.size() == config.kappa);
        for (std::size_t i = 1; i < config.kappa; ++i) {
            CHECK(state.archive.solutions[i - 1].front <= state.archive.solutions[i].front);
            CHECK(state.archive.weights[i - 1] >= state.archive.weights[i]);
        }
    }
    CHECK(state.evaluations == config.kappa + 5 * config.ants());
}

TEST_CASE("stored fronts are reproducible from the final archive") {
    const ProblemSpec problem = make_problem("dtlz2", 3);
    const DmModel dm = equal_weight_dm(3);
    OptimizerConfig config = small_config(11);
    const RunResult result = run(problem, dm, config);

    std::vector<ObjectiveVector> raw;
    std::vector<double> violations;
    for (const auto& s : result.archive.solutions) {
        raw.push_back(s.objectives);
        violations.push_back(s.violation);
    }
    const auto norm = normalize(raw, config.norm_epsilon);
    const auto ranks = detail::rank_population(norm, violations, dm, config.mode);
    for (std::size_t i = 0; i < result.archive.solutions.size(); ++i) {
        CHECK(result.archive.solutions[i].normalized == norm[i]);
        CHECK(result.archive.solutions[i].front == ranks.front[i]);
        CHECK(result.archive.solutions[i].strength == ranks.strength[i]);
        CHECK(result.archive.solutions[i].weakness == ranks.weakness[i]);
    }
}

TEST_CASE("evaluation accounting and the compromise slice") {
    const ProblemSpec problem = make_problem("dtlz2", 3);
    const DmModel dm = equal_weight_dm(3);
    OptimizerConfig config = small_config(3);
    config.kappa = 10;
    config.n_ants = 7;
    config.iter_max = 3;

    const RunResult result = run(problem, dm, config);
    CHECK(result.evaluations == 10 + 3 * 7);

    REQUIRE_FALSE(result.best_compromise.empty());
    for (std::size_t i = 0; i < result.archive.solutions.size(); ++i) {
        const bool in_slice =
            std::find(result.best_compromise.begin(), result.best_compromise.end(), i) !=
            result.best_compromise.end();
        CHECK(in_slice == (result.archive.solutions[i].front == 1));
    }

    config.iter_max = 1;
    const RunResult one = run(problem, dm, config);
    CHECK(one.evaluations == 10 + 7);

    config.iter_max = 0;
    CHECK_THROWS_AS(run(problem, dm, config), std::invalid_argument);
}

TEST_CASE("equal seeds give bit-identical runs") {
    const ProblemSpec problem = make_problem("dtlz7", 3);
    const DmModel dm = equal_weight_dm(3);
    const OptimizerConfig config = small_config(0xbeef);

    const RunResult a = run(problem, dm, config);
    const RunResult b = run(problem, dm, config);
    CHECK(same_archive(a.archive, b.archive));
    CHECK(a.best_compromise == b.best_compromise);
    CHECK(a.evaluations == b.evaluations);

    OptimizerConfig other = config;
    other.seed = config.seed + 1;
    const RunResult c = run(problem, dm, other);
    CHECK_FALSE(same_archive(a.archive, c.archive));
}

TEST_CASE("baseline mode is isolated from the decision maker") {
    const ProblemSpec problem = make_problem("dtlz2", 3);
    OptimizerConfig config = small_config(99);
    config.mode = OptimizerMode::pareto_baseline;

    DmModel narrow = equal_weight_dm(3);
    DmModel skewed = equal_weight_dm(3);
    skewed.weights = {{0.7, 0.8}, {0.1, 0.2}, {0.1, 0.2}};
    skewed.beta = 0.97;

    const RunResult a = run(problem, narrow, config);
    const RunResult b = run(problem, skewed, config);
    CHECK(same_archive(a.archive, b.archive));
    CHECK_FALSE(a.dm.has_value());
}

TEST_CASE("weight emphasis steers the compromise cluster") {
    // Bi-objective dtlz2: the front is the quarter circle f1^2 + f2^2 = 1.
    // A DM leaning on the first objective should settle lower f1 values
    // than an even-handed DM, seed by seed on average.
    const ProblemSpec problem = make_problem("dtlz2", 2);

    DmModel lean;
    lean.weights = {{0.7, 0.8}, {0.2, 0.3}};
    lean.indifference = {{0.01, 0.02}, {0.01, 0.02}};
    lean.veto = {{0.5, 0.6}, {0.5, 0.6}};
    lean.lambda = {0.51, 0.65};
    lean.beta = 0.67;
    validate(lean);

    const DmModel even = equal_weight_dm(2);

    auto mean_f1 = [&](const DmModel& dm, std::uint64_t seed) {
        OptimizerConfig config;
        config.kappa = 16;
        config.n_ants = 16;
        config.iter_max = 25;
        config.seed = seed;
        const RunResult result = run(problem, dm, config);
        double sum = 0.0;
        for (std::size_t i : result.best_compromise) {
            sum += result.archive.solutions[i].objectives[0];
        }
        return sum / static_cast<double>(result.best_compromise.size());
    };

    double lean_total = 0.0;
    double even_total = 0.0;
    const int seeds = 30;
    for (int s = 1; s <= seeds; ++s) {
        lean_total += mean_f1(lean, static_cast<std::uint64_t>(s));
        even_total += mean_f1(even, static_cast<std::uint64_t>(s));
    }
    CHECK(lean_total / seeds < even_total / seeds);
}
