#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ioaco/problems.hpp"
#include "ioaco/rng.hpp"

// Transformation and shape functions follow Huband, Hingston, Barone and
// While, "A review of multiobjective test problems and a scalable test
// problem toolkit", IEEE TEC 10(5), 2006.

namespace ioaco::detail {
namespace {

constexpr double pi = std::numbers::pi;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// ---- bias / shift transformations -----------------------------------------

double b_poly(double y, double alpha) { return clamp01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c) {
    const double v = a + std::min(0.0, std::floor(y - b)) * a * (b - y) / b -
                     std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return clamp01(v);
}

double b_param(double y, double u, double a, double b, double c) {
    const double v = a - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + a);
    return clamp01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) {
    return clamp01(std::fabs(y - a) / std::fabs(std::floor(a - y) + a));
}

double s_decept(double y, double a, double b, double c) {
    const double tmp1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double tmp2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return clamp01(1.0 + (std::fabs(y - a) - b) * (tmp1 + tmp2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c) {
    const double tmp1 = std::fabs(y - c) / (2.0 * (std::floor(c - y) + c));
    const double tmp2 = (4.0 * a + 2.0) * pi * (0.5 - tmp1);
    return clamp01((1.0 + std::cos(tmp2) + 4.0 * b * tmp1 * tmp1) / (b + 2.0));
}

// ---- reductions ------------------------------------------------------------

double r_sum(std::span<const double> y, std::span<const double> w) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return clamp01(num / den);
}

double r_sum_unit(std::span<const double> y) {
    double num = 0.0;
    for (double v : y) num += v;
    return clamp01(num / static_cast<double>(y.size()));
}

double r_nonsep(std::span<const double> y, std::size_t a) {
    const std::size_t ylen = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < ylen; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 1 < a; ++k) {
            num += std::fabs(y[j] - y[(j + k + 1) % ylen]);
        }
    }
    const double tmp = std::ceil(static_cast<double>(a) / 2.0);
    const double den = static_cast<double>(ylen) / static_cast<double>(a) * tmp *
                       (1.0 + 2.0 * static_cast<double>(a) - 2.0 * tmp);
    return clamp01(num / den);
}

// ---- shape functions -------------------------------------------------------

double shape_linear(std::span<const double> x, std::size_t m1) {
    // m1 is 1-based objective index
    const std::size_t m = x.size() + 1;
    double v = 1.0;
    for (std::size_t i = 0; i + m1 < m; ++i) v *= x[i];
    if (m1 > 1) v *= 1.0 - x[m - m1];
    return v;
}

double shape_convex(std::span<const double> x, std::size_t m1) {
    const std::size_t m = x.size() + 1;
    double v = 1.0;
    for (std::size_t i = 0; i + m1 < m; ++i) v *= 1.0 - std::cos(x[i] * pi / 2.0);
    if (m1 > 1) v *= 1.0 - std::sin(x[m - m1] * pi / 2.0);
    return v;
}

double shape_concave(std::span<const double> x, std::size_t m1) {
    const std::size_t m = x.size() + 1;
    double v = 1.0;
    for (std::size_t i = 0; i + m1 < m; ++i) v *= std::sin(x[i] * pi / 2.0);
    if (m1 > 1) v *= std::cos(x[m - m1] * pi / 2.0);
    return v;
}

double shape_mixed(double x1, double alpha, double a) {
    const double tmp = 2.0 * a * pi;
    return std::pow(1.0 - x1 - std::cos(tmp * x1 + pi / 2.0) / tmp, alpha);
}

double shape_disc(double x1, double alpha, double beta, double a) {
    const double tmp = std::cos(a * std::pow(x1, beta) * pi);
    return 1.0 - std::pow(x1, alpha) * tmp * tmp;
}

// ---- composition helpers ---------------------------------------------------

// Degenerate-aware mapping from the final transition vector t (size m) to the
// underlying parameters x, then the objective values.
ObjectiveVector apply_shapes(int index, std::span<const double> t) {
    const std::size_t m = t.size();
    std::vector<double> x(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double a_i = (index == 3 && i > 0) ? 0.0 : 1.0;
        x[i] = std::max(t[m - 1], a_i) * (t[i] - 0.5) + 0.5;
    }
    x[m - 1] = t[m - 1];

    const std::span<const double> head(x.data(), m - 1);
    ObjectiveVector f(m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t m1 = j + 1;
        double h = 0.0;
        switch (index) {
            case 1:
                h = m1 < m ? shape_convex(head, m1) : shape_mixed(x[0], 1.0, 5.0);
                break;
            case 2:
                h = m1 < m ? shape_convex(head, m1) : shape_disc(x[0], 1.0, 1.0, 5.0);
                break;
            case 3:
                h = shape_linear(head, m1);
                break;
            default:
                h = shape_concave(head, m1);
                break;
        }
        f[j] = x[m - 1] + 2.0 * static_cast<double>(m1) * h;
    }
    return f;
}

// r_sum over k position parameters grouped per objective, plus one value for
// the pooled tail; weights all one.
std::vector<double> reduce_groups(std::span<const double> y, std::size_t k, std::size_t m,
                                  std::span<const double> tail) {
    std::vector<double> t(m);
    const std::size_t gap = k / (m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        t[i] = r_sum_unit(y.subspan(i * gap, gap));
    }
    t[m - 1] = r_sum_unit(tail);
    return t;
}

} // namespace

Evaluation evaluate_wfg(const ProblemSpec& spec, std::span<const double> x) {
    const std::size_t n = spec.n_vars;
    const std::size_t k = spec.position_params;
    const std::size_t l = n - k;
    const std::size_t m = spec.n_obj;
    const int idx = spec.index;

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[i] / (2.0 * static_cast<double>(i + 1));
    }

    // first transition: shift the distance parameters (plus problem-specific
    // dependency biasing)
    switch (idx) {
        case 1:
        case 2:
        case 6:
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            break;
        case 4:
            for (std::size_t i = 0; i < n; ++i) y[i] = s_multi(y[i], 30.0, 10.0, 0.35);
            break;
        case 5:
            for (std::size_t i = 0; i < n; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
            break;
        case 7: {
            std::vector<double> t(y);
            for (std::size_t i = 0; i < k; ++i) {
                const double u = r_sum_unit(std::span<const double>(y).subspan(i + 1));
                t[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            y = std::move(t);
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            break;
        }
        case 8: {
            std::vector<double> t(y);
            for (std::size_t i = k; i < n; ++i) {
                const double u = r_sum_unit(std::span<const double>(y).first(i));
                t[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            y = std::move(t);
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            break;
        }
        case 9: {
            std::vector<double> t(y);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const double u = r_sum_unit(std::span<const double>(y).subspan(i + 1));
                t[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            y = std::move(t);
            for (std::size_t i = 0; i < k; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
            for (std::size_t i = k; i < n; ++i) y[i] = s_multi(y[i], 30.0, 95.0, 0.35);
            break;
        }
        default:
            break;
    }

    if (idx == 1) {
        for (std::size_t i = k; i < n; ++i) y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
        for (std::size_t i = 0; i < n; ++i) y[i] = b_poly(y[i], 0.02);
        std::vector<double> t(m);
        const std::size_t gap = k / (m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            std::vector<double> w(gap);
            for (std::size_t j = 0; j < gap; ++j) {
                w[j] = 2.0 * static_cast<double>(i * gap + j + 1);
            }
            t[i] = r_sum(std::span<const double>(y).subspan(i * gap, gap), w);
        }
        std::vector<double> wt(l);
        for (std::size_t j = 0; j < l; ++j) wt[j] = 2.0 * static_cast<double>(k + j + 1);
        t[m - 1] = r_sum(std::span<const double>(y).subspan(k), wt);
        return {apply_shapes(idx, t), 0.0};
    }

    if (idx == 2 || idx == 3) {
        // pairwise non-separable reduction of the distance tail; an odd
        // trailing parameter (possible for some m here) passes through
        const std::size_t pairs = l / 2;
        std::vector<double> tail;
        tail.reserve(pairs + l % 2);
        for (std::size_t i = 0; i < pairs; ++i) {
            tail.push_back(
                r_nonsep(std::span<const double>(y).subspan(k + 2 * i, 2), 2));
        }
        if (l % 2 != 0) tail.push_back(y[n - 1]);
        const std::vector<double> t =
            reduce_groups(y, k, m, std::span<const double>(tail));
        return {apply_shapes(idx, t), 0.0};
    }

    if (idx == 6 || idx == 9) {
        std::vector<double> t(m);
        const std::size_t gap = k / (m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            t[i] = r_nonsep(std::span<const double>(y).subspan(i * gap, gap), gap);
        }
        t[m - 1] = r_nonsep(std::span<const double>(y).subspan(k), l);
        return {apply_shapes(idx, t), 0.0};
    }

    // wfg4, wfg5, wfg7, wfg8: plain grouped means
    const std::vector<double> t =
        reduce_groups(y, k, m, std::span<const double>(y).subspan(k));
    return {apply_shapes(idx, t), 0.0};
}

std::vector<double> wfg_optimal_solution(const ProblemSpec& spec, Rng& rng) {
    const std::size_t n = spec.n_vars;
    const std::size_t k = spec.position_params;
    std::vector<double> z(n);
    for (std::size_t i = 0; i < k; ++i) {
        double u = rng.uniform01();
        if (spec.index == 1) u = std::pow(u, 50.0);  // undo the b_poly bias
        z[i] = u;
    }
    switch (spec.index) {
        case 8:
            for (std::size_t i = k; i < n; ++i) {
                const double u = r_sum_unit(std::span<const double>(z).first(i));
                const double tmp1 = std::fabs(std::floor(0.5 - u) + 0.98 / 49.98);
                const double tmp2 = 0.02 + 49.98 * (0.98 / 49.98 - (1.0 - 2.0 * u) * tmp1);
                z[i] = std::pow(0.35, 1.0 / tmp2);
            }
            break;
        case 9:
            z[n - 1] = 0.35;
            for (std::size_t i = n - 2; i >= k; --i) {
                const double u = r_sum_unit(std::span<const double>(z).subspan(i + 1));
                z[i] = std::pow(0.35, 1.0 / (0.02 + 1.96 * u));
                if (i == k) break;
            }
            break;
        default:
            for (std::size_t i = k; i < n; ++i) z[i] = 0.35;
            break;
    }
    for (std::size_t i = 0; i < n; ++i) z[i] *= 2.0 * static_cast<double>(i + 1);
    return z;
}

} // namespace ioaco::detail
