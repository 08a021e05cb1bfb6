#ifndef IOACO_CAMPAIGN_HPP
#define IOACO_CAMPAIGN_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ioaco/config.hpp"
#include "ioaco/io.hpp"

namespace ioaco {

struct CampaignOptions {
    std::string out_dir;
    std::size_t threads = 1;
    std::ostream* log = nullptr;  // progress lines, optional
};

struct CampaignSummary {
    std::size_t arois_built = 0;
    std::size_t arois_reused = 0;
    std::size_t runs_executed = 0;
    std::size_t runs_reused = 0;
    std::string results_path;
};

/// Derived per-run seed; exposed so single runs can reproduce campaign cells.
std::uint64_t cell_seed(std::uint64_t master_seed, const std::string& problem_id,
                        std::size_t n_obj, const std::string& dm_id, std::size_t run_index);

/// Executes every (problem, dm, algorithm, run) cell of the plan, skipping
/// cells whose output file already exists, then rebuilds results.csv from the
/// stored artifacts. The rebuild is a pure function of those files, so a
/// finished campaign reproduces the CSV byte-for-byte (wall_ms stays 0 here;
/// ad-hoc `run` invocations record real timings instead).
CampaignSummary run_campaign(const ExperimentPlan& plan, const CampaignOptions& options);

// ---- report ----------------------------------------------------------------

struct InstanceKey {
    std::string problem_id;
    std::size_t n_obj = 0;
    std::string dm_id;
    std::string label() const;
};

struct PairDecision {
    std::size_t first = 0;   // algorithm indices
    std::size_t second = 0;
    double p_value = 1.0;
    bool reject = false;     // after Holm within the instance family
    int direction = 0;       // -1 first better, +1 second better (by median)
};

struct IndicatorReport {
    std::string name;
    std::vector<std::vector<PairDecision>> decisions;  // per instance
    std::vector<std::vector<double>> positions;        // instance x algorithm
    BordaResult borda;
    double borda_total = 0.0;
};

struct ReportData {
    std::vector<std::string> algorithms;
    std::vector<InstanceKey> instances;
    std::vector<InstanceKey> incomplete;  // skipped: missing some algorithm
    std::array<IndicatorReport, 4> indicators;
    std::size_t usable_rows = 0;
};

ReportData analyze_results(const std::vector<ResultRow>& rows, double alpha);
std::string render_report(const ReportData& data, const std::vector<std::string>& skipped,
                          double alpha);

} // namespace ioaco

#endif
