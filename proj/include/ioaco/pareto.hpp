#ifndef IOACO_PARETO_HPP
#define IOACO_PARETO_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace ioaco {

using ObjectiveVector = std::vector<double>;

/// Minimization dominance: a is no worse than b everywhere and strictly
/// better somewhere. Throws std::invalid_argument on length mismatch.
bool pareto_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

bool pareto_dominates(std::span<const double> a, std::span<const double> b);

/// Fast non-dominated sort; returns 1-based front indices per solution.
std::vector<std::size_t> non_dominated_sort(const std::vector<ObjectiveVector>& pop);

/// Indices of the mutually non-dominated subset, in input order.
/// Duplicated points are kept (a point never dominates its copy).
std::vector<std::size_t> non_dominated_filter(const std::vector<ObjectiveVector>& pop);

} // namespace ioaco

#endif
