#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ioaco/assessment.hpp"

namespace ioaco {
namespace {

double euclid(const ObjectiveVector& a, const ObjectiveVector& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

double cheby(const ObjectiveVector& a, const ObjectiveVector& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s = std::max(s, std::fabs(a[k] - b[k]));
    }
    return s;
}

double normal_sf_two_sided(double z) {
    // 2 * (1 - Phi(|z|))
    return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

} // namespace

ARoI build_aroi(const std::vector<ObjectiveVector>& front_sample, const DmModel& dm) {
    if (front_sample.empty()) throw std::invalid_argument("empty front sample");
    ARoI roi;
    roi.points = best_compromise(front_sample, dm);
    roi.n_obj = dm.n_obj();
    roi.sample_size = front_sample.size();
    return roi;
}

IndicatorBlock indicators(const std::vector<ObjectiveVector>& approximation,
                          const ARoI& aroi, bool all_pairs_average) {
    if (approximation.empty() || aroi.points.empty()) {
        throw std::invalid_argument("both sets must be non-empty");
    }
    const std::size_t m = aroi.points.front().size();
    for (const auto& f : approximation) {
        if (f.size() != m) throw std::invalid_argument("objective count mismatch");
    }

    IndicatorBlock block;
    block.min_euclid = std::numeric_limits<double>::infinity();
    block.min_cheby = block.min_euclid;
    double sum_e = 0.0;
    double sum_c = 0.0;
    for (const auto& x : approximation) {
        double near_e = std::numeric_limits<double>::infinity();
        double near_c = near_e;
        double all_e = 0.0;
        double all_c = 0.0;
        for (const auto& r : aroi.points) {
            const double de = euclid(x, r);
            const double dc = cheby(x, r);
            near_e = std::min(near_e, de);
            near_c = std::min(near_c, dc);
            all_e += de;
            all_c += dc;
        }
        block.min_euclid = std::min(block.min_euclid, near_e);
        block.min_cheby = std::min(block.min_cheby, near_c);
        if (all_pairs_average) {
            sum_e += all_e / static_cast<double>(aroi.points.size());
            sum_c += all_c / static_cast<double>(aroi.points.size());
        } else {
            sum_e += near_e;
            sum_c += near_c;
        }
    }
    block.avg_euclid = sum_e / static_cast<double>(approximation.size());
    block.avg_cheby = sum_c / static_cast<double>(approximation.size());
    return block;
}

RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                                double alpha) {
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    if (n1 < 5 || n2 < 5) throw std::invalid_argument("need at least 5 values per sample");
    const std::size_t n = n1 + n2;

    std::vector<std::pair<double, bool>> pooled;  // value, belongs-to-a
    pooled.reserve(n);
    for (double v : a) pooled.emplace_back(v, true);
    for (double v : b) pooled.emplace_back(v, false);
    std::sort(pooled.begin(), pooled.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    double rank_sum_a = 0.0;
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first) ++j;
        const double width = static_cast<double>(j - i);
        const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) {
            if (pooled[t].second) rank_sum_a += mid_rank;
        }
        tie_term += width * width * width - width;
        i = j;
    }

    RankSumResult result;
    result.rank_sum = rank_sum_a;
    const double dn = static_cast<double>(n);
    const double mean = static_cast<double>(n1) * (dn + 1.0) / 2.0;
    const double variance = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                            ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (variance <= 0.0) {
        result.p_value = 1.0;
        return result;
    }
    double delta = rank_sum_a - mean;
    if (delta > 0.5) {
        delta -= 0.5;  // continuity correction
    } else if (delta < -0.5) {
        delta += 0.5;
    } else {
        delta = 0.0;
    }
    result.z = delta / std::sqrt(variance);
    result.p_value = std::min(1.0, normal_sf_two_sided(result.z));
    result.significant = result.p_value < alpha;
    return result;
}

std::vector<bool> holm_bonferroni(const std::vector<double>& p_values, double alpha) {
    const std::size_t m = p_values.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return p_values[x] < p_values[y];
    });
    std::vector<bool> reject(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const double threshold = alpha / static_cast<double>(m - i);
        if (p_values[order[i]] <= threshold) {
            reject[order[i]] = true;
        } else {
            break;  // step-down stops at the first acceptance
        }
    }
    return reject;
}

std::vector<double> competition_positions(const std::vector<double>& scores) {
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return scores[x] < scores[y];
    });
    std::vector<double> positions(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double averaged = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) positions[order[t]] = averaged;
        i = j;
    }
    return positions;
}

BordaResult borda_ranking(const std::vector<std::vector<double>>& positions) {
    if (positions.empty()) return {};
    const std::size_t n_alg = positions.front().size();
    BordaResult result;
    result.sums.assign(n_alg, 0.0);
    for (const auto& row : positions) {
        if (row.size() != n_alg) {
            throw std::invalid_argument("inconsistent algorithm sets across problems");
        }
        for (std::size_t a = 0; a < n_alg; ++a) result.sums[a] += row[a];
    }
    result.order.resize(n_alg);
    std::iota(result.order.begin(), result.order.end(), 0);
    std::stable_sort(result.order.begin(), result.order.end(),
                     [&](std::size_t x, std::size_t y) {
                         return result.sums[x] < result.sums[y];
                     });
    return result;
}

} // namespace ioaco
