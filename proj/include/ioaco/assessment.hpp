#ifndef IOACO_ASSESSMENT_HPP
#define IOACO_ASSESSMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ioaco/outranking.hpp"
#include "ioaco/pareto.hpp"

namespace ioaco {

struct ARoI {
    std::vector<ObjectiveVector> points;
    // provenance of the source front sample
    std::string problem_id;
    std::size_t n_obj = 0;
    std::string dm_id;
    std::size_t sample_size = 0;
    std::uint64_t seed = 0;
};

/// Best-compromise subset of a true-front sample under the given model; the
/// cost is quadratic in the sample size.
ARoI build_aroi(const std::vector<ObjectiveVector>& front_sample, const DmModel& dm);

struct IndicatorBlock {
    double min_euclid = 0.0;
    double avg_euclid = 0.0;
    double min_cheby = 0.0;
    double avg_cheby = 0.0;
};

/// Distances from an approximation set to the A-RoI, in raw objective space.
/// avg_* is the mean over the approximation set of each point's nearest A-RoI
/// neighbour; pass all_pairs_average = true for the plain all-pairs mean.
IndicatorBlock indicators(const std::vector<ObjectiveVector>& approximation,
                          const ARoI& aroi, bool all_pairs_average = false);

struct RankSumResult {
    double p_value = 1.0;
    bool significant = false;
    double z = 0.0;
    double rank_sum = 0.0;  // of the first sample
};

/// Two-sided Wilcoxon rank-sum with mid-ranks, tie-corrected variance and a
/// continuity correction. Fully tied pooled samples give p = 1.
RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                                double alpha);

/// Step-down Holm-Bonferroni decisions, reported against the input order.
std::vector<bool> holm_bonferroni(const std::vector<double>& p_values, double alpha);

/// Competition positions 1..A for one problem, lower score first, draws
/// averaged.
std::vector<double> competition_positions(const std::vector<double>& scores);

struct BordaResult {
    std::vector<double> sums;          // per algorithm
    std::vector<std::size_t> order;    // algorithm indices, best first
};

/// positions[p][a] is algorithm a's position on problem p.
BordaResult borda_ranking(const std::vector<std::vector<double>>& positions);

} // namespace ioaco

#endif
