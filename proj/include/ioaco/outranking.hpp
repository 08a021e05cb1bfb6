#ifndef IOACO_OUTRANKING_HPP
#define IOACO_OUTRANKING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ioaco/interval.hpp"
#include "ioaco/pareto.hpp"

namespace ioaco {

/// The decision maker's preference parameters. All objectives are
/// minimized; indifference and veto thresholds are expressed in the same
/// units as the objective vectors handed to the comparison routines
/// (normalized units inside the optimizer).
struct DmModel {
    std::vector<Interval> weights;       // one per objective, lower limits > 0
    std::vector<Interval> indifference;  // q_k
    std::vector<Interval> veto;          // v_k, v_k > q_k
    Interval lambda{0.5, 1.0};           // majority threshold
    double beta = 0.5;                   // credibility cutoff for outranking

    std::size_t n_obj() const { return weights.size(); }
};

/// Throws std::invalid_argument naming the violated constraint.
void validate(const DmModel& dm);

struct CredibilityRecord {
    Interval concordance;  // cumulative weight of the supporting coalition
    double discordance;    // 1 - strongest veto possibility
    double sigma;          // credibility of "x is at least as good as y"
};

struct StrengthWeakness {
    std::size_t strength = 0;  // solutions x outranks
    std::size_t weakness = 0;  // solutions strictly preferred to x
};

/// Objectives whose difference supports "x at least as good as y":
/// k such that the credibility of f_k(y) - f_k(x) >= -q_k reaches 0.5.
std::vector<std::size_t> concordance_coalition(const ObjectiveVector& fx,
                                               const ObjectiveVector& fy,
                                               const DmModel& dm);

Interval concordance_index(const ObjectiveVector& fx, const ObjectiveVector& fy,
                           const DmModel& dm);

double discordance_index(const ObjectiveVector& fx, const ObjectiveVector& fy,
                         const DmModel& dm);

CredibilityRecord credibility(const ObjectiveVector& fx, const ObjectiveVector& fy,
                              const DmModel& dm);

/// Relation S: sigma(x, y) >= beta.
bool outranks(const ObjectiveVector& fx, const ObjectiveVector& fy, const DmModel& dm);

/// Relation Pr: x dominates y, or x outranks y while y does not outrank x.
bool prefers(const ObjectiveVector& fx, const ObjectiveVector& fy, const DmModel& dm);

StrengthWeakness strength_weakness(const std::vector<ObjectiveVector>& pop,
                                   std::size_t x_index, const DmModel& dm);

/// Pairwise preference analysis of a population, computed once and shared
/// by the ranking queries. All matrices are row-major with self pairs
/// excluded from the counts.
struct PopulationAnalysis {
    std::size_t size = 0;
    std::vector<double> sigma;         // sigma(i, j)
    std::vector<std::uint8_t> s;       // i S j
    std::vector<std::uint8_t> pr;      // i Pr j
    std::vector<std::size_t> strength;
    std::vector<std::size_t> weakness;
    std::vector<std::size_t> fronts;   // 1-based

    double sigma_at(std::size_t i, std::size_t j) const { return sigma[i * size + j]; }
    bool s_at(std::size_t i, std::size_t j) const { return s[i * size + j] != 0; }
    bool pr_at(std::size_t i, std::size_t j) const { return pr[i * size + j] != 0; }
};

PopulationAnalysis analyze_population(const std::vector<ObjectiveVector>& pop,
                                      const DmModel& dm);

/// Front index per solution under the lexicographic order that minimizes
/// weakness first and maximizes strength second; a solution's front is one
/// plus the number of solutions strictly ahead of it, so equal
/// (weakness, strength) pairs share a front.
std::vector<std::size_t> surrogate_rank(const std::vector<ObjectiveVector>& pop,
                                        const DmModel& dm);

/// Indices of the solutions achieving the lexicographic best
/// (weakness, -strength), i.e. the first front of surrogate_rank.
std::vector<std::size_t> best_compromise_indices(const std::vector<ObjectiveVector>& pop,
                                                 const DmModel& dm);

std::vector<ObjectiveVector> best_compromise(const std::vector<ObjectiveVector>& pop,
                                             const DmModel& dm);

namespace detail {

/// Allocation-free credibility kernel used by the pairwise matrix.
double credibility_sigma(const double* fx, const double* fy, std::size_t n,
                         const DmModel& dm, Interval* concordance_out = nullptr,
                         double* discordance_out = nullptr);

/// Front assignment from (weakness, strength) pairs: one plus the count of
/// strictly lexicographically better entries.
std::vector<std::size_t> fronts_from_counts(const std::vector<std::size_t>& weakness,
                                             const std::vector<std::size_t>& strength);

} // namespace detail

} // namespace ioaco

#endif
