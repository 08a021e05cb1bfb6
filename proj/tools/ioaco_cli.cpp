#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ioaco/campaign.hpp"
#include "ioaco/config.hpp"
#include "ioaco/io.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ioaco;

std::string default_out_dir() {
    if (const char* env = std::getenv("IOACO_OUT_DIR")) return env;
    return "out";
}

NamedDm pick_dm(const std::string& path, const std::string& name) {
    const std::vector<NamedDm> dms = load_dms(path);
    if (name.empty()) {
        if (dms.size() > 1) {
            throw std::invalid_argument(path + " holds " + std::to_string(dms.size()) +
                                        " models; pick one with --dm-name");
        }
        return dms.front();
    }
    for (const auto& dm : dms) {
        if (dm.name == name) return dm;
    }
    throw std::invalid_argument("no dm named '" + name + "' in " + path);
}

void append_csv_row(const std::string& path, const ResultRow& row) {
    const bool fresh = !fs::exists(path);
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to " + path);
    if (fresh) out << kResultsHeader << '\n';
    out << result_row_to_csv(row) << '\n';
}

int cmd_aroi(const std::string& problem_id, std::size_t m, const std::string& dm_path,
             const std::string& dm_name, std::size_t count, std::uint64_t seed,
             std::string out_path) {
    const ProblemSpec spec = make_problem(problem_id, m);
    const NamedDm dm = pick_dm(dm_path, dm_name);
    if (dm.model.n_obj() != m) {
        throw std::invalid_argument("dm '" + dm.name + "' has " +
                                    std::to_string(dm.model.n_obj()) + " criteria, problem has " +
                                    std::to_string(m));
    }
    const std::vector<ObjectiveVector> front = sample_true_front(spec, count, seed);
    ARoI aroi = build_aroi(front, dm.model);
    aroi.problem_id = spec.id();
    aroi.dm_id = dm.name;
    aroi.seed = seed;
    if (out_path.empty()) {
        out_path = (fs::path(default_out_dir()) / "aroi" /
                    (spec.id() + "_m" + std::to_string(m) + "_" + dm.name + ".txt"))
                       .string();
    }
    save_aroi(out_path, aroi);
    std::cout << "aroi " << out_path << " points=" << aroi.points.size() << " of "
              << front.size() << " sampled\n";
    return 0;
}

struct RunArgs {
    std::string problem_id;
    std::size_t m = 3;
    std::string dm_path;
    std::string dm_name;
    bool baseline = false;
    OptimizerConfig config;
    std::string out_path;
    std::string aroi_path;
    std::string append_csv;
    bool all_pairs = false;
};

int cmd_run(RunArgs args) {
    const ProblemSpec spec = make_problem(args.problem_id, args.m);
    NamedDm dm;
    if (args.baseline) {
        args.config.mode = OptimizerMode::pareto_baseline;
        if (!args.dm_path.empty()) {
            std::cerr << "warning: --baseline ignores the supplied dm config\n";
        }
        dm.name = "baseline";
        dm.model = generate_dm_settings(1, 0, args.m).front().model;  // placeholder, unused
    } else {
        if (args.dm_path.empty()) {
            throw std::invalid_argument("preference mode needs --dm (or pass --baseline)");
        }
        args.config.mode = OptimizerMode::preference;
        dm = pick_dm(args.dm_path, args.dm_name);
    }

    const auto t0 = std::chrono::steady_clock::now();
    const RunResult result = run(spec, dm.model, args.config);
    const auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

    if (args.out_path.empty()) {
        args.out_path = (fs::path(default_out_dir()) / "runs" /
                         (spec.id() + "_m" + std::to_string(args.m) + "_" +
                          (args.baseline ? "baseline" : "ioaco_" + dm.name) + "_seed" +
                          std::to_string(args.config.seed) + ".json"))
                            .string();
    }
    save_run_result(args.out_path, result);
    std::cout << "run " << args.out_path << " front1=" << result.best_compromise.size()
              << " archive=" << result.archive.solutions.size()
              << " evaluations=" << result.evaluations << " wall_ms=" << wall.count() << "\n";

    if (!args.aroi_path.empty()) {
        const ARoI aroi = load_aroi(args.aroi_path);
        std::vector<ObjectiveVector> best;
        for (std::size_t idx : result.best_compromise) {
            best.push_back(result.archive.solutions[idx].objectives);
        }
        const IndicatorBlock block = indicators(best, aroi, args.all_pairs);
        std::cout << "indicators min_euclid=" << format_real(block.min_euclid)
                  << " avg_euclid=" << format_real(block.avg_euclid)
                  << " min_cheby=" << format_real(block.min_cheby)
                  << " avg_cheby=" << format_real(block.avg_cheby) << "\n";
        if (!args.append_csv.empty()) {
            ResultRow row;
            row.problem_id = spec.id();
            row.n_obj = args.m;
            row.dm_id = args.baseline ? aroi.dm_id : dm.name;
            row.algorithm = args.baseline ? "baseline" : "ioaco";
            row.seed = args.config.seed;
            row.block = block;
            row.evaluations = result.evaluations;
            row.wall_ms = static_cast<std::uint64_t>(wall.count());
            append_csv_row(args.append_csv, row);
        }
    } else if (!args.append_csv.empty()) {
        throw std::invalid_argument("--append-csv needs --aroi for the indicator columns");
    }
    return 0;
}

int cmd_campaign(const std::string& plan_path, const std::string& out_dir, std::size_t threads,
                 bool quiet) {
    const ExperimentPlan plan = load_plan(plan_path);
    CampaignOptions options;
    options.out_dir = out_dir.empty() ? default_out_dir() : out_dir;
    options.threads = threads;
    options.log = quiet ? nullptr : &std::cerr;
    const CampaignSummary summary = run_campaign(plan, options);
    std::cout << "campaign done: " << summary.runs_executed << " runs executed, "
              << summary.runs_reused << " reused, " << summary.arois_built << " arois built, "
              << summary.arois_reused << " reused\nresults: " << summary.results_path << "\n";
    return 0;
}

int cmd_report(const std::string& results_path, double alpha, const std::string& out_path) {
    const CsvReadOutcome outcome = read_results_csv(results_path);
    const ReportData data = analyze_results(outcome.rows, alpha);
    const std::string text = render_report(data, outcome.skipped, alpha);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file_atomic(out_path, text);
        std::cout << "report written to " << out_path << "\n";
    }
    return 0;
}

int cmd_gen_dms(std::size_t count, std::size_t m, std::uint64_t seed, std::string out_path,
                const DmDefaults& defaults) {
    const std::vector<NamedDm> dms = generate_dm_settings(count, seed, m, defaults);
    std::ostringstream text;
    text << "# " << count << " synthetic decision maker(s), m=" << m << ", seed=" << seed
         << "\n# thresholds are in normalized objective units\n";
    for (const auto& dm : dms) {
        text << '\n';
        write_dm(text, dm);
    }
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        write_file_atomic(out_path, text.str());
        std::cout << "wrote " << count << " dm model(s) to " << out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval outranking ant colony optimizer and benchmark harness"};
    app.require_subcommand(1);

    // aroi ------------------------------------------------------------------
    auto* aroi = app.add_subcommand("aroi", "sample a true front and cache the best-compromise subset");
    std::string aroi_problem;
    std::size_t aroi_m = 3;
    std::string aroi_dm;
    std::string aroi_dm_name;
    std::size_t aroi_count = 5000;
    std::uint64_t aroi_seed = 1;
    std::string aroi_out;
    aroi->add_option("--problem", aroi_problem, "problem id, dtlz1..dtlz9 or wfg1..wfg9")->required();
    aroi->add_option("--m", aroi_m, "objective count")->required();
    aroi->add_option("--dm", aroi_dm, "dm model config file")->required();
    aroi->add_option("--dm-name", aroi_dm_name, "model name when the file holds several");
    aroi->add_option("--count", aroi_count, "front sample size");
    aroi->add_option("--seed", aroi_seed, "front sampling seed");
    aroi->add_option("--out", aroi_out, "output path");

    // run -------------------------------------------------------------------
    auto* runc = app.add_subcommand("run", "execute a single optimization run");
    RunArgs run_args;
    runc->add_option("--problem", run_args.problem_id, "problem id")->required();
    runc->add_option("--m", run_args.m, "objective count")->required();
    runc->add_option("--dm", run_args.dm_path, "dm model config file");
    runc->add_option("--dm-name", run_args.dm_name, "model name within the file");
    runc->add_flag("--baseline", run_args.baseline, "preference-free mode (ignores --dm)");
    runc->add_option("--kappa", run_args.config.kappa, "archive size");
    runc->add_option("--ants", run_args.config.n_ants, "ants per iteration (0 = kappa)");
    runc->add_option("--iters", run_args.config.iter_max, "iterations")->required();
    runc->add_option("--zeta", run_args.config.zeta, "rank weight spread");
    runc->add_option("--xi", run_args.config.xi, "kernel width factor");
    runc->add_option("--norm-epsilon", run_args.config.norm_epsilon, "normalization floor");
    runc->add_option("--seed", run_args.config.seed, "run seed");
    runc->add_flag("--trace", run_args.config.trace, "record per-iteration trace");
    runc->add_option("--out", run_args.out_path, "result file path");
    runc->add_option("--aroi", run_args.aroi_path, "cached aroi for indicator output");
    runc->add_option("--append-csv", run_args.append_csv, "append an indicator row here");
    runc->add_flag("--all-pairs", run_args.all_pairs, "all-pairs averages instead of nearest-neighbour");

    // campaign ---------------------------------------------------------------
    auto* camp = app.add_subcommand("campaign", "run every cell of an experiment plan");
    std::string plan_path;
    std::string camp_out;
    std::size_t camp_threads = 1;
    bool camp_quiet = false;
    camp->add_option("--plan", plan_path, "plan config file")->required();
    camp->add_option("--out", camp_out, "output directory");
    camp->add_option("--threads", camp_threads, "worker pool width");
    camp->add_flag("--quiet", camp_quiet, "suppress progress lines");

    // report -----------------------------------------------------------------
    auto* rep = app.add_subcommand("report", "aggregate a results csv into comparisons");
    std::string rep_results;
    double rep_alpha = 0.05;
    std::string rep_out;
    rep->add_option("--results", rep_results, "results.csv path")->required();
    rep->add_option("--alpha", rep_alpha, "significance level");
    rep->add_option("--out", rep_out, "write the report here instead of stdout");

    // gen-dms ----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen-dms", "emit synthetic decision maker models");
    std::size_t gen_count = 3;
    std::size_t gen_m = 3;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    DmDefaults defaults;
    std::string gen_q;
    std::string gen_v;
    std::string gen_lambda;
    gen->add_option("--count", gen_count, "how many models");
    gen->add_option("--m", gen_m, "criteria count")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output file (stdout if omitted)");
    gen->add_option("--q", gen_q, "indifference interval, lo,hi");
    gen->add_option("--v", gen_v, "veto interval, lo,hi");
    gen->add_option("--lambda", gen_lambda, "majority cutoff interval, lo,hi");
    gen->add_option("--beta", defaults.beta, "credibility cutoff");
    gen->add_option("--half-width", defaults.rel_half_width, "relative weight widening");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage message
        return code == 0 ? 0 : 1;
    }

    try {
        if (*aroi) {
            return cmd_aroi(aroi_problem, aroi_m, aroi_dm, aroi_dm_name, aroi_count, aroi_seed,
                            aroi_out);
        }
        if (*runc) return cmd_run(run_args);
        if (*camp) return cmd_campaign(plan_path, camp_out, camp_threads, camp_quiet);
        if (*rep) return cmd_report(rep_results, rep_alpha, rep_out);
        if (*gen) {
            if (!gen_q.empty()) defaults.indifference = parse_interval(gen_q);
            if (!gen_v.empty()) defaults.veto = parse_interval(gen_v);
            if (!gen_lambda.empty()) defaults.lambda = parse_interval(gen_lambda);
            return cmd_gen_dms(gen_count, gen_m, gen_seed, gen_out, defaults);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
