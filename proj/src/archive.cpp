#include "ioaco/archive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ioaco {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr int kBoundaryResamples = 10;
} // namespace

void validate(const SearchSpace& space) {
    if (space.dim == 0) throw std::invalid_argument("search space has no variables");
    if (space.lower.size() != space.dim || space.upper.size() != space.dim) {
        throw std::invalid_argument("search space bound vectors do not match dim");
    }
    for (std::size_t j = 0; j < space.dim; ++j) {
        if (!(space.lower[j] < space.upper[j])) {
            throw std::invalid_argument("search space: lower bound must be below upper bound at variable " +
                                        std::to_string(j + 1));
        }
    }
}

std::size_t PheromoneArchive::max_front() const {
    std::size_t worst = 1;
    for (const auto& s : solutions) worst = std::max(worst, s.front);
    return worst;
}

std::vector<double> rank_weights(const std::vector<std::size_t>& fronts, double zeta) {
    if (fronts.empty()) throw std::invalid_argument("front vector is empty");
    if (!(zeta > 0.0)) throw std::invalid_argument("zeta must be positive");
    const double worst = static_cast<double>(*std::max_element(fronts.begin(), fronts.end()));
    const double scale = kInvSqrt2Pi / (zeta * worst);
    const double denom = 2.0 * zeta * zeta * worst * worst;
    std::vector<double> w(fronts.size());
    for (std::size_t l = 0; l < fronts.size(); ++l) {
        const double shifted = static_cast<double>(fronts[l]) - 1.0;
        w[l] = scale * std::exp(-(shifted * shifted) / denom);
    }
    return w;
}

std::vector<double> rank_weights_positional(std::size_t kappa, double zeta) {
    if (kappa == 0) throw std::invalid_argument("kappa must be at least 1");
    if (!(zeta > 0.0)) throw std::invalid_argument("zeta must be positive");
    const double k = static_cast<double>(kappa);
    const double scale = kInvSqrt2Pi / (zeta * k);
    const double denom = 2.0 * zeta * zeta * k * k;
    std::vector<double> w(kappa);
    for (std::size_t l = 0; l < kappa; ++l) {
        const double shifted = static_cast<double>(l);  // row l+1 has argument l
        w[l] = scale * std::exp(-(shifted * shifted) / denom);
    }
    return w;
}

std::size_t select_guide(std::span<const double> weights, Rng& rng) {
    if (weights.empty()) throw std::invalid_argument("weight vector is empty");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("selection weights must be positive");
        total += w;
    }
    const double target = rng.uniform01() * total;
    double acc = 0.0;
    for (std::size_t l = 0; l + 1 < weights.size(); ++l) {
        acc += weights[l];
        if (target < acc) return l;
    }
    return weights.size() - 1;
}

double kernel_std(const PheromoneArchive& archive, std::size_t l, std::size_t j) {
    const std::size_t kappa = archive.kappa();
    if (kappa < 2) {
        throw std::invalid_argument("kernel dispersion needs at least two archive rows");
    }
    const double center = archive.solutions[l].x[j];
    double sum = 0.0;
    for (std::size_t r = 0; r < kappa; ++r) {
        sum += std::abs(archive.solutions[r].x[j] - center);
    }
    return archive.xi * sum / static_cast<double>(kappa - 1);
}

std::vector<double> construct_solution(const PheromoneArchive& archive,
                                       const SearchSpace& space, Rng& rng) {
    if (archive.kappa() < 2) {
        throw std::invalid_argument("solution construction needs at least two archive rows");
    }
    const std::size_t guide = select_guide(archive.weights, rng);
    std::vector<double> x(space.dim);
    for (std::size_t j = 0; j < space.dim; ++j) {
        const double mean = archive.solutions[guide].x[j];
        const double sd = kernel_std(archive, guide, j);
        if (sd == 0.0) {
            x[j] = std::clamp(mean, space.lower[j], space.upper[j]);
            continue;
        }
        double v = rng.normal(mean, sd);
        for (int attempt = 0; attempt < kBoundaryResamples; ++attempt) {
            if (v >= space.lower[j] && v <= space.upper[j]) break;
            v = rng.normal(mean, sd);
        }
        x[j] = std::clamp(v, space.lower[j], space.upper[j]);
    }
    return x;
}

} // namespace ioaco
