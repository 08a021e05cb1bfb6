#ifndef IOACO_ARCHIVE_HPP
#define IOACO_ARCHIVE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ioaco/rng.hpp"

namespace ioaco {

struct SearchSpace {
    std::size_t dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;
};

void validate(const SearchSpace& space);

/// One pheromone-archive row: a solution with everything the ranking and
/// the sampler need to know about it.
struct ArchiveSolution {
    std::vector<double> x;
    std::vector<double> objectives;   // raw objective values
    std::vector<double> normalized;   // values used by the last ranking
    double violation = 0.0;           // aggregate constraint excess, 0 when feasible
    std::size_t front = 1;
    std::size_t strength = 0;
    std::size_t weakness = 0;
    std::size_t birth = 0;            // iteration that created the solution
};

/// The learned distribution of the colony: kappa solutions sorted by
/// ascending front, each carrying a sampling weight. Every column j seeds a
/// mixture of one-dimensional Gaussians centered on the column entries.
struct PheromoneArchive {
    std::vector<ArchiveSolution> solutions;
    std::vector<double> weights;
    double zeta = 0.1;
    double xi = 0.5;

    std::size_t kappa() const { return solutions.size(); }
    std::size_t max_front() const;
};

/// Gaussian-of-front weights: solutions on early fronts dominate the
/// mixture, with the spread controlled by zeta and scaled by the worst
/// front present in the archive.
std::vector<double> rank_weights(const std::vector<std::size_t>& fronts, double zeta);

/// Position-based weights used by the preference-free baseline: the weight
/// of row l is the Gaussian of l with mean 1 and deviation zeta * kappa.
std::vector<double> rank_weights_positional(std::size_t kappa, double zeta);

/// Samples a row index proportionally to the weights. One guide is drawn
/// per ant per iteration.
std::size_t select_guide(std::span<const double> weights, Rng& rng);

/// Dispersion of column j around row l: the mean absolute distance from
/// x_{l,j} to the other rows, scaled by xi. Requires kappa >= 2.
double kernel_std(const PheromoneArchive& archive, std::size_t l, std::size_t j);

/// Builds one solution: picks a guide row, then samples every variable from
/// the guide's Gaussian and maps it into the box (resample a few times,
/// then clamp). A zero-deviation kernel returns the guide's value.
std::vector<double> construct_solution(const PheromoneArchive& archive,
                                       const SearchSpace& space, Rng& rng);

} // namespace ioaco

#endif
