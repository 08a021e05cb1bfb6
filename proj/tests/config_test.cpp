#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ioaco/config.hpp"

using namespace ioaco;

namespace {

ConfigFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, "test.cfg");
}

} // namespace

TEST_CASE("config parsing structure") {
    const ConfigFile file = parse_text(
        "# leading comment\n"
        "[optimizer]\n"
        "kappa = 25\n"
        "  zeta=0.2  \n"
        "\n"
        "[dm north]\n"
        "beta = 0.67\n");
    REQUIRE(file.sections.size() == 2);
    CHECK(file.sections[0].name == "optimizer");
    CHECK(file.sections[0].line == 2);
    CHECK(file.sections[0].get("kappa") == "25");
    CHECK(file.sections[0].get("zeta") == "0.2");
    CHECK(file.sections[1].name == "dm north");
    CHECK(file.sections[1].entries[0].line == 7);

    CHECK(file.find("optimizer") != nullptr);
    CHECK(file.find("missing") == nullptr);
    CHECK(file.find_all("dm").size() == 1);
    CHECK(file.sections[0].get_or("absent", "x") == "x");
    CHECK_THROWS_WITH_AS(file.sections[0].get("absent"), doctest::Contains("missing key"),
                         std::invalid_argument);
}

TEST_CASE("config parse errors carry the line number") {
    CHECK_THROWS_WITH_AS(parse_text("[optimizer\nkappa = 1\n"),
                         doctest::Contains("test.cfg:1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_text("[a]\njust some text\n"), doctest::Contains(":2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_text("key = 1\n"), doctest::Contains("outside any"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_text("[a]\n= 1\n"), doctest::Contains("empty key"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_text("[]\n"), doctest::Contains("empty section"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_config_file("/nonexistent/no.cfg"), std::runtime_error);
}

TEST_CASE("value parsers accept exactly their grammar") {
    CHECK(parse_real("0.25") == 0.25);
    CHECK(parse_real(" -3e-2 ") == -0.03);
    CHECK_THROWS_AS(parse_real("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_real("1.5x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_real("inf"), std::invalid_argument);

    CHECK(parse_unsigned("42") == 42);
    CHECK_THROWS_AS(parse_unsigned("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_unsigned("3.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_unsigned(""), std::invalid_argument);

    const Interval pair = parse_interval("0.1,0.3");
    CHECK(pair.lo == 0.1);
    CHECK(pair.hi == 0.3);
    const Interval point = parse_interval("0.5");
    CHECK(point.lo == 0.5);
    CHECK(point.hi == 0.5);
    CHECK_THROWS_AS(parse_interval("0.3,0.1"), std::invalid_argument);

    const auto list = parse_interval_list("0.1,0.2 0.3,0.4 1");
    REQUIRE(list.size() == 3);
    CHECK(list[2].degenerate());

    CHECK(split_words("  a  b\tc ") == std::vector<std::string>{"a", "b", "c"});
    CHECK(split_words("").empty());
}

TEST_CASE("format_real round-trips doubles minimally") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(1.0) == "1");
    for (double v : {0.1, 1.0 / 3.0, 6.02e23, -7.25e-9, 0.0}) {
        CHECK(parse_real(format_real(v)) == v);
    }
}

TEST_CASE("dm sections round-trip through write and load") {
    NamedDm dm;
    dm.name = "pull-north";
    dm.model.weights = {{0.55, 0.65}, {0.15, 0.25}, {0.15, 0.25}};
    dm.model.indifference = {{0.02, 0.05}, {0.02, 0.05}, {0.02, 0.05}};
    dm.model.veto = {{0.2, 0.4}, {0.2, 0.4}, {0.2, 0.4}};
    dm.model.lambda = {0.6, 0.7};
    dm.model.beta = 0.67;
    validate(dm.model);

    std::ostringstream out;
    write_dm(out, dm);
    const ConfigFile file = parse_text(out.str());
    REQUIRE(file.sections.size() == 1);
    const NamedDm back = dm_from_section(file.sections[0]);
    CHECK(back.name == dm.name);
    REQUIRE(back.model.n_obj() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(back.model.weights[k].lo == dm.model.weights[k].lo);
        CHECK(back.model.weights[k].hi == dm.model.weights[k].hi);
        CHECK(back.model.veto[k].lo == dm.model.veto[k].lo);
    }
    CHECK(back.model.beta == dm.model.beta);
}

TEST_CASE("dm section validation and naming") {
    const ConfigFile file = parse_text(
        "[dm]\n"
        "name = custom\n"
        "weights = 0.4,0.6 0.4,0.6\n"
        "indifference = 0,0.01 0,0.01\n"
        "veto = 0.3,0.5 0.3,0.5\n"
        "lambda = 0.6,0.7\n"
        "beta = 0.67\n");
    const NamedDm dm = dm_from_section(file.sections[0]);
    CHECK(dm.name == "custom");

    // Invalid model content is rejected at load time.
    const ConfigFile bad = parse_text(
        "[dm x]\n"
        "weights = 0.4,0.6 0.4,0.6\n"
        "indifference = 0,0.01 0,0.01\n"
        "veto = 0.3,0.5 0.3,0.5\n"
        "lambda = 0.2,0.7\n"
        "beta = 0.67\n");
    CHECK_THROWS_WITH_AS(dm_from_section(bad.sections[0]), doctest::Contains("majority"),
                         std::invalid_argument);

    const ConfigFile not_dm = parse_text("[optimizer]\nkappa = 10\n");
    CHECK_THROWS_AS(dm_from_section(not_dm.sections[0]), std::invalid_argument);
}

TEST_CASE("optimizer sections apply defaults and round-trip") {
    const ConfigFile sparse = parse_text("[optimizer]\nkappa = 30\niter_max = 5\n");
    const OptimizerConfig config = optimizer_from_section(*sparse.find("optimizer"));
    CHECK(config.kappa == 30);
    CHECK(config.iter_max == 5);
    CHECK(config.zeta == 0.1);
    CHECK(config.xi == 0.5);
    CHECK(config.norm_epsilon == 0.001);
    CHECK(config.mode == OptimizerMode::preference);
    CHECK(config.ants() == 30);

    OptimizerConfig full;
    full.zeta = 0.25;
    full.xi = 0.75;
    full.kappa = 12;
    full.n_ants = 8;
    full.iter_max = 99;
    full.mode = OptimizerMode::pareto_baseline;
    full.seed = 123456789;
    full.trace = true;
    std::ostringstream out;
    write_optimizer(out, full);
    const ConfigFile parsed = parse_text(out.str());
    const OptimizerConfig back = optimizer_from_section(*parsed.find("optimizer"));
    CHECK(back.zeta == full.zeta);
    CHECK(back.xi == full.xi);
    CHECK(back.kappa == full.kappa);
    CHECK(back.n_ants == full.n_ants);
    CHECK(back.iter_max == full.iter_max);
    CHECK(back.mode == full.mode);
    CHECK(back.seed == full.seed);
    CHECK(back.trace == full.trace);

    const ConfigFile invalid = parse_text("[optimizer]\nkappa = 1\n");
    CHECK_THROWS_AS(optimizer_from_section(*invalid.find("optimizer")), std::invalid_argument);
}

TEST_CASE("experiment plans parse their instances and models") {
    const ConfigFile file = parse_text(
        "[campaign]\n"
        "master_seed = 99\n"
        "runs_per_cell = 4\n"
        "aroi_sample = 500\n"
        "problems = dtlz1:3 wfg4:5\n"
        "algorithms = ioaco baseline\n"
        "[optimizer]\n"
        "kappa = 10\n"
        "iter_max = 20\n"
        "[dm a]\n"
        "weights = 0.2,0.5 0.2,0.5 0.2,0.5\n"
        "indifference = 0,0.01 0,0.01 0,0.01\n"
        "veto = 0.3,0.5 0.3,0.5 0.3,0.5\n"
        "lambda = 0.6,0.7\n"
        "beta = 0.67\n");
    const ExperimentPlan plan = plan_from_config(file);
    CHECK(plan.master_seed == 99);
    CHECK(plan.runs_per_cell == 4);
    CHECK(plan.aroi_sample == 500);
    REQUIRE(plan.instances.size() == 2);
    CHECK(plan.instances[0].problem_id == "dtlz1");
    CHECK(plan.instances[0].n_obj == 3);
    CHECK(plan.instances[1].problem_id == "wfg4");
    CHECK(plan.instances[1].n_obj == 5);
    CHECK(plan.algorithms == std::vector<std::string>{"ioaco", "baseline"});
    REQUIRE(plan.dms.size() == 1);
    CHECK(plan.dms[0].name == "a");
    CHECK(plan.optimizer.kappa == 10);
}

TEST_CASE("experiment plan validation") {
    CHECK_THROWS_WITH_AS(plan_from_config(parse_text("[optimizer]\nkappa = 5\n")),
                         doctest::Contains("campaign"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(plan_from_config(parse_text("[campaign]\nproblems = dtlz1\n")),
                         doctest::Contains("id:m"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(plan_from_config(parse_text("[campaign]\nproblems = zdt1:3\n")),
                         doctest::Contains("unknown problem"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        plan_from_config(parse_text("[campaign]\nalgorithms = ioaco nsga2\n")),
        doctest::Contains("unknown algorithm"), std::invalid_argument);

    const std::string dm_block =
        "[dm a]\n"
        "weights = 0.9,1.1\n"
        "indifference = 0,0.01\n"
        "veto = 0.3,0.5\n"
        "lambda = 0.6,0.7\n"
        "beta = 0.67\n";
    CHECK_THROWS_WITH_AS(plan_from_config(parse_text("[campaign]\n" + dm_block + dm_block)),
                         doctest::Contains("duplicate dm"), std::invalid_argument);
}

TEST_CASE("generated decision makers are valid and reproducible") {
    const auto batch = generate_dm_settings(10, 7, 5);
    REQUIRE(batch.size() == 10);
    for (const auto& dm : batch) {
        CHECK_NOTHROW(validate(dm.model));
        CHECK(dm.model.n_obj() == 5);
        CHECK(dm.model.lambda.lo == 0.6);
        CHECK(dm.model.lambda.hi == 0.7);
        CHECK(dm.model.beta == 0.67);
        for (const auto& q : dm.model.indifference) {
            CHECK(q.lo == 0.02);
            CHECK(q.hi == 0.05);
        }
        for (const auto& v : dm.model.veto) {
            CHECK(v.lo == 0.20);
            CHECK(v.hi == 0.40);
        }
    }
    CHECK(batch[0].name == "dm1");
    CHECK(batch[9].name == "dm10");

    const auto again = generate_dm_settings(10, 7, 5);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        CHECK(batch[i].name == again[i].name);
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(batch[i].model.weights[k].lo == again[i].model.weights[k].lo);
            CHECK(batch[i].model.weights[k].hi == again[i].model.weights[k].hi);
        }
    }

    // Different seeds give different weight centres.
    const auto other = generate_dm_settings(10, 8, 5);
    CHECK(batch[0].model.weights[0].lo != other[0].model.weights[0].lo);

    // Overridable defaults flow into every model.
    DmDefaults defaults;
    defaults.beta = 0.8;
    defaults.lambda = {0.55, 0.9};
    const auto custom = generate_dm_settings(2, 1, 3, defaults);
    CHECK(custom[0].model.beta == 0.8);
    CHECK(custom[1].model.lambda.hi == 0.9);

    CHECK_THROWS_AS(generate_dm_settings(0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(generate_dm_settings(1, 1, 1), std::invalid_argument);
}
