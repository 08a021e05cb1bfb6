#include "ioaco/pareto.hpp"

#include <stdexcept>

namespace ioaco {

bool pareto_dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("objective vectors differ in length");
    }
    bool strictly_better = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strictly_better = true;
    }
    return strictly_better;
}

bool pareto_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return pareto_dominates(std::span<const double>(a), std::span<const double>(b));
}

std::vector<std::size_t> non_dominated_sort(const std::vector<ObjectiveVector>& pop) {
    const std::size_t n = pop.size();
    std::vector<std::size_t> front(n, 0);
    std::vector<int> dominated_by(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && pareto_dominates(pop[j], pop[i])) ++dominated_by[i];
        }
    }
    // Peel fronts: rank 1 has no dominators among the remaining set.
    std::vector<std::size_t> remaining;
    remaining.reserve(n);
    for (std::size_t i = 0; i < n; ++i) remaining.push_back(i);
    std::size_t rank = 1;
    std::vector<int> count = dominated_by;
    while (!remaining.empty()) {
        std::vector<std::size_t> next;
        std::vector<std::size_t> peeled;
        for (std::size_t i : remaining) {
            if (count[i] == 0) {
                front[i] = rank;
                peeled.push_back(i);
            } else {
                next.push_back(i);
            }
        }
        for (std::size_t i : next) {
            for (std::size_t p : peeled) {
                if (pareto_dominates(pop[p], pop[i])) --count[i];
            }
        }
        remaining = std::move(next);
        ++rank;
    }
    return front;
}

std::vector<std::size_t> non_dominated_filter(const std::vector<ObjectiveVector>& pop) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pop.size() && !dominated; ++j) {
            if (i != j && pareto_dominates(pop[j], pop[i])) dominated = true;
        }
        if (!dominated) keep.push_back(i);
    }
    return keep;
}

} // namespace ioaco
