#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ioaco/problems.hpp"

namespace ioaco::detail {
namespace {

constexpr double pi = std::numbers::pi;

double g_rastrigin(std::span<const double> xm) {
    double s = static_cast<double>(xm.size());
    for (double v : xm) {
        s += (v - 0.5) * (v - 0.5) - std::cos(20.0 * pi * (v - 0.5));
    }
    return 100.0 * s;
}

double g_sphere(std::span<const double> xm) {
    double s = 0.0;
    for (double v : xm) s += (v - 0.5) * (v - 0.5);
    return s;
}

double g_tenth_power(std::span<const double> xm) {
    double s = 0.0;
    for (double v : xm) s += std::pow(v, 0.1);
    return s;
}

// Product shapes shared by dtlz1 (linear) and dtlz2..6 (spherical, with the
// angle vector prepared by the caller).
void linear_shape(std::span<const double> pos, double scale, ObjectiveVector& f) {
    const std::size_t m = f.size();
    for (std::size_t j = 0; j < m; ++j) {
        double v = scale;
        for (std::size_t i = 0; i + j + 1 < m; ++i) v *= pos[i];
        if (j > 0) v *= 1.0 - pos[m - 1 - j];
        f[j] = v;
    }
}

void spherical_shape(std::span<const double> theta, double scale, ObjectiveVector& f) {
    const std::size_t m = f.size();
    for (std::size_t j = 0; j < m; ++j) {
        double v = scale;
        for (std::size_t i = 0; i + j + 1 < m; ++i) v *= std::cos(theta[i]);
        if (j > 0) v *= std::sin(theta[m - 1 - j]);
        f[j] = v;
    }
}

} // namespace

Evaluation evaluate_dtlz(const ProblemSpec& spec, std::span<const double> x) {
    const std::size_t m = spec.n_obj;
    const std::size_t n = spec.n_vars;
    Evaluation out;
    out.objectives.assign(m, 0.0);
    ObjectiveVector& f = out.objectives;

    if (spec.index == 8 || spec.index == 9) {
        // Block means / block power sums with side constraints.
        const std::size_t block = n / m;
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t i = j * block; i < (j + 1) * block; ++i) {
                s += spec.index == 8 ? x[i] : std::pow(x[i], 0.1);
            }
            f[j] = spec.index == 8 ? s / static_cast<double>(block) : s;
        }
        double violation = 0.0;
        if (spec.index == 8) {
            for (std::size_t j = 0; j + 1 < m; ++j) {
                violation += std::max(0.0, -(f[m - 1] + 4.0 * f[j] - 1.0));
            }
            double min_pair = std::numeric_limits<double>::infinity();
            if (m >= 3) {
                // smallest f_i + f_j over distinct i, j < m-1: sum of the two
                // smallest leading objectives
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
                min_pair = lo1 + lo2;
                violation += std::max(0.0, -(2.0 * f[m - 1] + min_pair - 1.0));
            }
        } else {
            for (std::size_t j = 0; j + 1 < m; ++j) {
                violation +=
                    std::max(0.0, -(f[m - 1] * f[m - 1] + f[j] * f[j] - 1.0));
            }
        }
        out.violation = violation;
        return out;
    }

    const std::span<const double> pos = x.subspan(0, m - 1);
    const std::span<const double> xm = x.subspan(m - 1);

    switch (spec.index) {
        case 1: {
            const double g = g_rastrigin(xm);
            linear_shape(pos, 0.5 * (1.0 + g), f);
            break;
        }
        case 2:
        case 3:
        case 4: {
            const double g = spec.index == 3 ? g_rastrigin(xm) : g_sphere(xm);
            std::vector<double> theta(m - 1);
            for (std::size_t i = 0; i + 1 < m; ++i) {
                const double v = spec.index == 4 ? std::pow(pos[i], 100.0) : pos[i];
                theta[i] = v * pi / 2.0;
            }
            spherical_shape(theta, 1.0 + g, f);
            break;
        }
        case 5:
        case 6: {
            const double g = spec.index == 5 ? g_sphere(xm) : g_tenth_power(xm);
            std::vector<double> theta(m - 1);
            theta[0] = pos[0] * pi / 2.0;
            for (std::size_t i = 1; i + 1 < m; ++i) {
                theta[i] = pi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * pos[i]);
            }
            spherical_shape(theta, 1.0 + g, f);
            break;
        }
        case 7: {
            const double g =
                1.0 + 9.0 / static_cast<double>(xm.size()) *
                          std::accumulate(xm.begin(), xm.end(), 0.0);
            double h = static_cast<double>(m);
            for (std::size_t i = 0; i + 1 < m; ++i) {
                f[i] = pos[i];
                h -= f[i] / (1.0 + g) * (1.0 + std::sin(3.0 * pi * f[i]));
            }
            f[m - 1] = (1.0 + g) * h;
            break;
        }
        default:
            throw std::invalid_argument("dtlz index out of range");
    }
    return out;
}

} // namespace ioaco::detail
