#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ioaco/campaign.hpp"
#include "ioaco/rng.hpp"

namespace ioaco {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kFrontStream = 0x66726f6e74;  // front sampling tag

std::string instance_stem(const std::string& problem_id, std::size_t m) {
    return problem_id + "_m" + std::to_string(m);
}

void check_dm_names(const ExperimentPlan& plan) {
    for (const auto& dm : plan.dms) {
        if (dm.name == "baseline") {
            throw std::invalid_argument("'baseline' is reserved, rename the dm");
        }
        for (char c : dm.name) {
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') {
                throw std::invalid_argument("dm name must be filename-safe: " + dm.name);
            }
        }
    }
}

void run_jobs(std::vector<std::function<void()>>& jobs, std::size_t threads) {
    if (threads <= 1 || jobs.size() <= 1) {
        for (auto& job : jobs) job();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                jobs[i]();
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t width = std::min(threads, jobs.size());
    pool.reserve(width);
    for (std::size_t i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double mean_of(const std::vector<double>& values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

} // namespace

std::uint64_t cell_seed(std::uint64_t master_seed, const std::string& problem_id,
                        std::size_t n_obj, const std::string& dm_id, std::size_t run_index) {
    return mix_seed({master_seed, hash_text(problem_id), n_obj, hash_text(dm_id), run_index});
}

CampaignSummary run_campaign(const ExperimentPlan& plan, const CampaignOptions& options) {
    if (plan.instances.empty()) {
        CampaignSummary summary;
        summary.results_path = (fs::path(options.out_dir) / "results.csv").string();
        fs::create_directories(options.out_dir);
        write_file_atomic(summary.results_path, std::string(kResultsHeader) + "\n");
        return summary;
    }
    if (plan.dms.empty()) throw std::invalid_argument("plan needs at least one [dm]");
    check_dm_names(plan);
    for (const auto& dm : plan.dms) {
        for (const auto& inst : plan.instances) {
            if (dm.model.n_obj() != inst.n_obj) {
                throw std::invalid_argument("dm '" + dm.name + "' has " +
                                            std::to_string(dm.model.n_obj()) +
                                            " criteria but " + inst.problem_id + ":" +
                                            std::to_string(inst.n_obj) + " needs " +
                                            std::to_string(inst.n_obj));
            }
        }
    }

    const fs::path out(options.out_dir);
    fs::create_directories(out / "aroi");
    fs::create_directories(out / "runs");

    CampaignSummary summary;
    std::mutex log_mutex;
    auto log = [&](const std::string& line) {
        if (!options.log) return;
        std::lock_guard<std::mutex> lock(log_mutex);
        (*options.log) << line << '\n';
    };

    // A-RoI cache, one front sample per (problem, m) shared by all dms.
    for (const auto& inst : plan.instances) {
        const ProblemSpec spec = make_problem(inst.problem_id, inst.n_obj);
        std::vector<ObjectiveVector> front;
        bool sampled = false;
        for (const auto& dm : plan.dms) {
            const fs::path path =
                out / "aroi" / (instance_stem(inst.problem_id, inst.n_obj) + "_" + dm.name + ".txt");
            if (fs::exists(path)) {
                ++summary.arois_reused;
                continue;
            }
            if (!sampled) {
                front = sample_true_front(spec, plan.aroi_sample,
                                          mix_seed({plan.master_seed, kFrontStream}));
                sampled = true;
            }
            ARoI aroi = build_aroi(front, dm.model);
            aroi.problem_id = inst.problem_id;
            aroi.dm_id = dm.name;
            aroi.seed = mix_seed({plan.master_seed, kFrontStream});
            save_aroi(path.string(), aroi);
            ++summary.arois_built;
            log("aroi " + path.filename().string() + " (" +
                std::to_string(aroi.points.size()) + " points)");
        }
    }

    // optimization runs, one output file per cell
    const bool want_ioaco = std::count(plan.algorithms.begin(), plan.algorithms.end(), "ioaco") > 0;
    const bool want_baseline =
        std::count(plan.algorithms.begin(), plan.algorithms.end(), "baseline") > 0;

    std::vector<std::function<void()>> jobs;
    std::atomic<std::size_t> executed{0};
    std::atomic<std::size_t> reused{0};
    for (const auto& inst : plan.instances) {
        const std::string stem = instance_stem(inst.problem_id, inst.n_obj);
        for (std::size_t r = 0; r < plan.runs_per_cell; ++r) {
            if (want_ioaco) {
                for (const auto& dm : plan.dms) {
                    const fs::path path = out / "runs" /
                                          (stem + "_ioaco_" + dm.name + "_run" +
                                           std::to_string(r) + ".json");
                    if (fs::exists(path)) {
                        ++reused;
                        continue;
                    }
                    jobs.push_back([&, path, r, dm_ptr = &dm, inst_ptr = &inst] {
                        const ProblemSpec spec =
                            make_problem(inst_ptr->problem_id, inst_ptr->n_obj);
                        OptimizerConfig config = plan.optimizer;
                        config.mode = OptimizerMode::preference;
                        config.seed = cell_seed(plan.master_seed, inst_ptr->problem_id,
                                                inst_ptr->n_obj, dm_ptr->name, r);
                        const RunResult result = run(spec, dm_ptr->model, config);
                        save_run_result(path.string(), result);
                        ++executed;
                        log("run " + path.filename().string());
                    });
                }
            }
            if (want_baseline) {
                const fs::path path =
                    out / "runs" / (stem + "_baseline_run" + std::to_string(r) + ".json");
                if (fs::exists(path)) {
                    ++reused;
                    continue;
                }
                jobs.push_back([&, path, r, inst_ptr = &inst] {
                    const ProblemSpec spec = make_problem(inst_ptr->problem_id, inst_ptr->n_obj);
                    OptimizerConfig config = plan.optimizer;
                    config.mode = OptimizerMode::pareto_baseline;
                    config.seed = cell_seed(plan.master_seed, inst_ptr->problem_id,
                                            inst_ptr->n_obj, "baseline", r);
                    const RunResult result = run(spec, plan.dms.front().model, config);
                    save_run_result(path.string(), result);
                    ++executed;
                    log("run " + path.filename().string());
                });
            }
        }
    }
    run_jobs(jobs, options.threads);
    summary.runs_executed = executed;
    summary.runs_reused = reused;

    // Deterministic rebuild of the indicator table from the stored artifacts;
    // no timing or other machine state leaks into the file.
    std::ostringstream csv;
    csv << kResultsHeader << '\n';
    for (const auto& inst : plan.instances) {
        const std::string stem = instance_stem(inst.problem_id, inst.n_obj);
        for (const auto& dm : plan.dms) {
            const ARoI aroi =
                load_aroi((out / "aroi" / (stem + "_" + dm.name + ".txt")).string());
            for (const auto& algorithm : plan.algorithms) {
                for (std::size_t r = 0; r < plan.runs_per_cell; ++r) {
                    const std::string file =
                        algorithm == "ioaco"
                            ? stem + "_ioaco_" + dm.name + "_run" + std::to_string(r) + ".json"
                            : stem + "_baseline_run" + std::to_string(r) + ".json";
                    const RunResult result = load_run_result((out / "runs" / file).string());
                    std::vector<ObjectiveVector> best;
                    best.reserve(result.best_compromise.size());
                    for (std::size_t idx : result.best_compromise) {
                        best.push_back(result.archive.solutions[idx].objectives);
                    }
                    ResultRow row;
                    row.problem_id = inst.problem_id;
                    row.n_obj = inst.n_obj;
                    row.dm_id = dm.name;
                    row.algorithm = algorithm;
                    row.seed = result.config.seed;
                    row.block = indicators(best, aroi, plan.all_pairs_average);
                    row.evaluations = result.evaluations;
                    row.wall_ms = 0;
                    csv << result_row_to_csv(row) << '\n';
                }
            }
        }
    }
    summary.results_path = (out / "results.csv").string();
    write_file_atomic(summary.results_path, csv.str());
    return summary;
}

// ---- report -----------------------------------------------------------------

std::string InstanceKey::label() const {
    return problem_id + " m=" + std::to_string(n_obj) + " dm=" + dm_id;
}

ReportData analyze_results(const std::vector<ResultRow>& rows, double alpha) {
    ReportData data;
    const std::array<const char*, 4> names = {"min_euclid", "avg_euclid", "min_cheby",
                                              "avg_cheby"};
    for (std::size_t k = 0; k < 4; ++k) data.indicators[k].name = names[k];
    if (rows.empty()) return data;

    auto algorithm_index = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < data.algorithms.size(); ++i) {
            if (data.algorithms[i] == name) return i;
        }
        data.algorithms.push_back(name);
        return data.algorithms.size() - 1;
    };

    // instance -> algorithm -> 4 sample vectors
    std::vector<InstanceKey> keys;
    std::vector<std::vector<std::array<std::vector<double>, 4>>> cells;
    auto instance_index = [&](const ResultRow& row) -> std::size_t {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (keys[i].problem_id == row.problem_id && keys[i].n_obj == row.n_obj &&
                keys[i].dm_id == row.dm_id) {
                return i;
            }
        }
        keys.push_back({row.problem_id, row.n_obj, row.dm_id});
        cells.emplace_back();
        return keys.size() - 1;
    };

    for (const auto& row : rows) {
        const std::size_t a = algorithm_index(row.algorithm);
        const std::size_t i = instance_index(row);
        if (cells[i].size() < data.algorithms.size()) cells[i].resize(data.algorithms.size());
        const std::array<double, 4> values = {row.block.min_euclid, row.block.avg_euclid,
                                              row.block.min_cheby, row.block.avg_cheby};
        for (std::size_t k = 0; k < 4; ++k) cells[i][a][k].push_back(values[k]);
        ++data.usable_rows;
    }
    const std::size_t n_alg = data.algorithms.size();
    for (auto& cell : cells) cell.resize(n_alg);

    // keep only instances covered by every algorithm
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const bool full = std::all_of(cells[i].begin(), cells[i].end(),
                                      [](const auto& c) { return !c[0].empty(); });
        if (full) {
            kept.push_back(i);
            data.instances.push_back(keys[i]);
        } else {
            data.incomplete.push_back(keys[i]);
        }
    }

    for (std::size_t k = 0; k < 4; ++k) {
        IndicatorReport& report = data.indicators[k];
        for (std::size_t ki = 0; ki < kept.size(); ++ki) {
            const auto& cell = cells[kept[ki]];
            // positions by mean value, draws averaged
            std::vector<double> means(n_alg);
            for (std::size_t a = 0; a < n_alg; ++a) means[a] = mean_of(cell[a][k]);
            report.positions.push_back(competition_positions(means));

            // pairwise tests with Holm adjustment inside the instance family
            std::vector<PairDecision> decisions;
            std::vector<double> p_values;
            for (std::size_t a = 0; a < n_alg; ++a) {
                for (std::size_t b = a + 1; b < n_alg; ++b) {
                    PairDecision d;
                    d.first = a;
                    d.second = b;
                    const auto& sa = cell[a][k];
                    const auto& sb = cell[b][k];
                    if (sa.size() >= 5 && sb.size() >= 5) {
                        d.p_value = wilcoxon_rank_sum(sa, sb, alpha).p_value;
                    }
                    const double ma = median_of(sa);
                    const double mb = median_of(sb);
                    d.direction = ma < mb ? -1 : ma > mb ? 1 : 0;
                    decisions.push_back(d);
                    p_values.push_back(d.p_value);
                }
            }
            const std::vector<bool> reject = holm_bonferroni(p_values, alpha);
            for (std::size_t t = 0; t < decisions.size(); ++t) {
                decisions[t].reject = reject[t] && decisions[t].direction != 0;
            }
            report.decisions.push_back(std::move(decisions));
        }
        if (!report.positions.empty()) {
            report.borda = borda_ranking(report.positions);
            for (double s : report.borda.sums) report.borda_total += s;
        }
    }
    return data;
}

std::string render_report(const ReportData& data, const std::vector<std::string>& skipped,
                          double alpha) {
    std::ostringstream out;
    out << "indicator comparison report (alpha = " << format_real(alpha) << ")\n";
    out << "algorithms:";
    for (const auto& a : data.algorithms) out << ' ' << a;
    out << "\ninstances: " << data.instances.size() << " usable rows: " << data.usable_rows
        << "\n";
    if (!skipped.empty()) {
        out << "skipped " << skipped.size() << " corrupt row(s):\n";
        for (const auto& s : skipped) out << "  " << s << '\n';
    }
    for (const auto& inc : data.incomplete) {
        out << "incomplete instance (missing an algorithm): " << inc.label() << '\n';
    }
    if (data.instances.empty()) {
        out << "nothing to compare\n";
        return out.str();
    }

    for (const auto& indicator : data.indicators) {
        out << '\n' << "== " << indicator.name << " ==\n";
        // per-pair tally across instances
        const std::size_t n_alg = data.algorithms.size();
        std::vector<std::vector<std::size_t>> wins(n_alg, std::vector<std::size_t>(n_alg, 0));
        for (std::size_t i = 0; i < data.instances.size(); ++i) {
            for (const auto& d : indicator.decisions[i]) {
                out << data.instances[i].label() << ": " << data.algorithms[d.first] << " vs "
                    << data.algorithms[d.second] << " p=" << format_real(d.p_value);
                if (d.reject) {
                    const std::size_t winner = d.direction < 0 ? d.first : d.second;
                    const std::size_t loser = d.direction < 0 ? d.second : d.first;
                    ++wins[winner][loser];
                    out << " -> " << data.algorithms[winner] << " better";
                } else {
                    out << " -> no significant difference";
                }
                out << '\n';
            }
        }
        for (std::size_t a = 0; a < n_alg; ++a) {
            for (std::size_t b = a + 1; b < n_alg; ++b) {
                out << data.algorithms[a] << " beats " << data.algorithms[b] << " on "
                    << wins[a][b] << ", loses on " << wins[b][a] << ", ties on "
                    << data.instances.size() - wins[a][b] - wins[b][a] << " of "
                    << data.instances.size() << " instances\n";
            }
        }
        out << "borda:";
        for (std::size_t rank = 0; rank < indicator.borda.order.size(); ++rank) {
            const std::size_t a = indicator.borda.order[rank];
            out << ' ' << data.algorithms[a] << '=' << format_real(indicator.borda.sums[a]);
        }
        out << " (total " << format_real(indicator.borda_total) << ")\n";
    }
    return out.str();
}

} // namespace ioaco
