#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ioaco/problems.hpp"
#include "ioaco/rng.hpp"

namespace ioaco {
namespace {

constexpr double pi = std::numbers::pi;

std::size_t wfg_n_vars(std::size_t m) {
    switch (m) {
        case 3: return 24;
        case 5: return 47;
        case 7: return 70;
        case 10: return 105;
        default: return 2 * (m - 1) + 20;  // off-table fallback
    }
}

// Uniform direction on the first orthant of the unit sphere.
ObjectiveVector sphere_point(std::size_t m, Rng& rng) {
    ObjectiveVector f(m);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (auto& v : f) {
            v = std::fabs(rng.normal01());
            norm += v * v;
        }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (auto& v : f) v /= norm;
    return f;
}

// dtlz5/6/9 share the degenerate arc parametrisation.
ObjectiveVector curve_point(const ProblemSpec& spec, double t) {
    const std::size_t m = spec.n_obj;
    ObjectiveVector f(m);
    if (spec.index == 9) {
        for (std::size_t j = 0; j + 1 < m; ++j) f[j] = std::cos(t);
        f[m - 1] = std::sin(t);
        return f;
    }
    const double c = std::cos(t);
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    f[0] = c * std::pow(inv_sqrt2, static_cast<double>(m - 2));
    for (std::size_t j = 1; j + 1 < m; ++j) {
        f[j] = c * std::pow(inv_sqrt2, static_cast<double>(m - 1 - j));
    }
    f[m - 1] = std::sin(t);
    return f;
}

void append_nondominated(std::vector<ObjectiveVector>& pool,
                         std::vector<ObjectiveVector>&& fresh, std::size_t count) {
    for (auto& f : fresh) pool.push_back(std::move(f));
    std::vector<ObjectiveVector> kept;
    for (std::size_t i : non_dominated_filter(pool)) kept.push_back(std::move(pool[i]));
    pool = std::move(kept);
    if (pool.size() > count) pool.resize(count);
}

std::vector<ObjectiveVector> sample_dtlz7(const ProblemSpec& spec, std::size_t count, Rng& rng) {
    const std::size_t m = spec.n_obj;
    std::vector<ObjectiveVector> pool;
    while (pool.size() < count) {
        std::vector<ObjectiveVector> batch;
        batch.reserve(4 * count);
        for (std::size_t s = 0; s < 4 * count; ++s) {
            ObjectiveVector f(m);
            double h = static_cast<double>(m);
            for (std::size_t j = 0; j + 1 < m; ++j) {
                f[j] = rng.uniform01();
                h -= f[j] / 2.0 * (1.0 + std::sin(3.0 * pi * f[j]));
            }
            f[m - 1] = 2.0 * h;  // distance part at its optimum: g = 1
            batch.push_back(std::move(f));
        }
        append_nondominated(pool, std::move(batch), count);
    }
    return pool;
}

std::vector<ObjectiveVector> sample_dtlz8(const ProblemSpec& spec, std::size_t count, Rng& rng) {
    const std::size_t m = spec.n_obj;
    std::vector<ObjectiveVector> pool;
    auto feasible = [m](const ObjectiveVector& f) {
        for (std::size_t j = 0; j + 1 < m; ++j) {
            if (f[m - 1] + 4.0 * f[j] - 1.0 < -1e-12) return false;
        }
        double lo1 = std::numeric_limits<double>::infinity();
        double lo2 = lo1;
        for (std::size_t j = 0; j + 1 < m; ++j) {
            if (f[j] < lo1) {
                lo2 = lo1;
                lo1 = f[j];
            } else if (f[j] < lo2) {
                lo2 = f[j];
            }
        }
        return 2.0 * f[m - 1] + lo1 + lo2 - 1.0 >= -1e-12;
    };
    while (pool.size() < count) {
        std::vector<ObjectiveVector> batch;
        // the ridge where both constraint families meet
        for (std::size_t s = 0; s < count; ++s) {
            const double t = 1.0 / 6.0 + rng.uniform01() / 3.0;  // [1/6, 1/2]
            ObjectiveVector f(m, t);
            f[m - 1] = 0.5 - t;
            if (feasible(f)) batch.push_back(std::move(f));
        }
        // patches of the two active constraint surfaces
        for (std::size_t s = 0; s < 4 * count; ++s) {
            ObjectiveVector f(m);
            double lo1 = std::numeric_limits<double>::infinity();
            double lo2 = lo1;
            for (std::size_t j = 0; j + 1 < m; ++j) {
                f[j] = rng.uniform01();
                if (f[j] < lo1) {
                    lo2 = lo1;
                    lo1 = f[j];
                } else if (f[j] < lo2) {
                    lo2 = f[j];
                }
            }
            if (s % 2 == 0) {
                f[m - 1] = (1.0 - lo1 - lo2) / 2.0;
            } else {
                f[m - 1] = 1.0 - 4.0 * lo1;
            }
            if (f[m - 1] >= 0.0 && feasible(f)) batch.push_back(std::move(f));
        }
        append_nondominated(pool, std::move(batch), count);
    }
    return pool;
}

std::vector<ObjectiveVector> sample_wfg(const ProblemSpec& spec, std::size_t count, Rng& rng) {
    std::vector<ObjectiveVector> pool;
    while (pool.size() < count) {
        std::vector<ObjectiveVector> batch;
        batch.reserve(2 * count);
        for (std::size_t s = 0; s < 2 * count; ++s) {
            const std::vector<double> z = detail::wfg_optimal_solution(spec, rng);
            batch.push_back(detail::evaluate_wfg(spec, z).objectives);
        }
        append_nondominated(pool, std::move(batch), count);
    }
    return pool;
}

} // namespace

std::string ProblemSpec::id() const {
    return (family == ProblemFamily::dtlz ? "dtlz" : "wfg") + std::to_string(index);
}

ProblemSpec make_problem(ProblemFamily family, int index, std::size_t n_obj) {
    if (index < 1 || index > 9) throw std::invalid_argument("problem index must be 1..9");
    if (n_obj < 2) throw std::invalid_argument("need at least two objectives");
    ProblemSpec spec;
    spec.family = family;
    spec.index = index;
    spec.n_obj = n_obj;
    if (family == ProblemFamily::dtlz) {
        if (index == 8 || index == 9) {
            spec.position_params = n_obj - 1;
            spec.n_vars = 10 * n_obj;
            spec.constrained = true;
        } else {
            const std::size_t k = index == 1 ? 5 : index == 7 ? 20 : 10;
            spec.position_params = k;
            spec.n_vars = n_obj + k - 1;
        }
        spec.space.dim = spec.n_vars;
        spec.space.lower.assign(spec.n_vars, 0.0);
        spec.space.upper.assign(spec.n_vars, 1.0);
    } else {
        spec.position_params = 2 * (n_obj - 1);
        spec.n_vars = wfg_n_vars(n_obj);
        spec.space.dim = spec.n_vars;
        spec.space.lower.assign(spec.n_vars, 0.0);
        spec.space.upper.resize(spec.n_vars);
        for (std::size_t i = 0; i < spec.n_vars; ++i) {
            spec.space.upper[i] = 2.0 * static_cast<double>(i + 1);
        }
    }
    return spec;
}

ProblemSpec make_problem(const std::string& id, std::size_t n_obj) {
    auto parse = [&](const std::string& prefix, ProblemFamily family) -> ProblemSpec {
        const std::string digits = id.substr(prefix.size());
        if (digits.size() != 1 || digits[0] < '1' || digits[0] > '9') {
            throw std::invalid_argument("unknown problem id: " + id);
        }
        return make_problem(family, digits[0] - '0', n_obj);
    };
    if (id.rfind("dtlz", 0) == 0) return parse("dtlz", ProblemFamily::dtlz);
    if (id.rfind("wfg", 0) == 0) return parse("wfg", ProblemFamily::wfg);
    throw std::invalid_argument("unknown problem id: " + id);
}

Evaluation evaluate(const ProblemSpec& spec, std::span<const double> x) {
    if (x.size() != spec.n_vars) {
        throw std::invalid_argument("decision vector has wrong length");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= spec.space.lower[i] && x[i] <= spec.space.upper[i])) {
            throw std::domain_error("decision variable outside bounds");
        }
    }
    return spec.family == ProblemFamily::dtlz ? detail::evaluate_dtlz(spec, x)
                                              : detail::evaluate_wfg(spec, x);
}

std::vector<ObjectiveVector> sample_true_front(const ProblemSpec& spec, std::size_t count,
                                               std::uint64_t seed) {
    if (count == 0) return {};
    Rng rng(mix_seed({seed, hash_text(spec.id()), spec.n_obj}));
    const std::size_t m = spec.n_obj;

    if (spec.family == ProblemFamily::wfg) return sample_wfg(spec, count, rng);

    std::vector<ObjectiveVector> out;
    out.reserve(count);
    switch (spec.index) {
        case 1:
            // uniform over the simplex sum f = 1/2
            for (std::size_t s = 0; s < count; ++s) {
                ObjectiveVector f(m);
                double total = 0.0;
                for (auto& v : f) {
                    v = -std::log(1.0 - rng.uniform01());
                    total += v;
                }
                for (auto& v : f) v = 0.5 * v / total;
                out.push_back(std::move(f));
            }
            return out;
        case 2:
        case 3:
        case 4:
            for (std::size_t s = 0; s < count; ++s) out.push_back(sphere_point(m, rng));
            return out;
        case 5:
        case 6:
        case 9:
            for (std::size_t s = 0; s < count; ++s) {
                out.push_back(curve_point(spec, rng.uniform01() * pi / 2.0));
            }
            return out;
        case 7:
            return sample_dtlz7(spec, count, rng);
        case 8:
            return sample_dtlz8(spec, count, rng);
        default:
            throw std::invalid_argument("dtlz index out of range");
    }
}

} // namespace ioaco
