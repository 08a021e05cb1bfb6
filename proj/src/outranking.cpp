#include "ioaco/outranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ioaco {

namespace {

void check_lengths(const ObjectiveVector& fx, const ObjectiveVector& fy, const DmModel& dm) {
    if (fx.size() != fy.size()) {
        throw std::invalid_argument("objective vectors differ in length");
    }
    if (fx.size() != dm.n_obj()) {
        throw std::invalid_argument("objective vector length does not match the DM model");
    }
}

} // namespace

void validate(const DmModel& dm) {
    const std::size_t n = dm.n_obj();
    if (n == 0) throw std::invalid_argument("DM model has no weights");
    if (dm.indifference.size() != n) {
        throw std::invalid_argument("DM model: indifference vector length differs from weights");
    }
    if (dm.veto.size() != n) {
        throw std::invalid_argument("DM model: veto vector length differs from weights");
    }
    double sum_lo = 0.0;
    double sum_hi = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Interval w = dm.weights[k];
        if (!(w.lo > 0.0)) {
            throw std::invalid_argument("DM model: weight " + std::to_string(k + 1) +
                                        " must have a positive lower limit");
        }
        if (w.lo > w.hi) {
            throw std::invalid_argument("DM model: weight " + std::to_string(k + 1) +
                                        " has lower limit above upper limit");
        }
        sum_lo += w.lo;
        sum_hi += w.hi;
    }
    constexpr double kSumSlack = 1e-9;  // tolerate round-off in serialized weights
    if (sum_lo > 1.0 + kSumSlack) {
        throw std::invalid_argument("DM model: weight lower limits sum to " +
                                    std::to_string(sum_lo) + ", must be at most 1");
    }
    if (sum_hi < 1.0 - kSumSlack) {
        throw std::invalid_argument("DM model: weight upper limits sum to " +
                                    std::to_string(sum_hi) + ", must be at least 1");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (dm.indifference[k].lo > dm.indifference[k].hi || dm.veto[k].lo > dm.veto[k].hi) {
            throw std::invalid_argument("DM model: threshold " + std::to_string(k + 1) +
                                        " has inverted limits");
        }
        if (!interval_gt(dm.veto[k], dm.indifference[k])) {
            throw std::invalid_argument("DM model: veto threshold " + std::to_string(k + 1) +
                                        " must exceed the indifference threshold");
        }
    }
    if (!(dm.lambda.lo >= 0.5)) {
        throw std::invalid_argument("DM model: majority threshold lower limit must be at least 0.5");
    }
    if (!(dm.lambda.hi <= 1.0)) {
        throw std::invalid_argument("DM model: majority threshold upper limit must be at most 1");
    }
    if (dm.lambda.lo > dm.lambda.hi) {
        throw std::invalid_argument("DM model: majority threshold has inverted limits");
    }
    if (!(dm.beta >= 0.5)) {
        throw std::invalid_argument("DM model: credibility cutoff beta must be at least 0.5");
    }
    if (!(dm.beta <= 1.0)) {
        throw std::invalid_argument("DM model: credibility cutoff beta must be at most 1");
    }
}

namespace detail {

double credibility_sigma(const double* fx, const double* fy, std::size_t n,
                         const DmModel& dm, Interval* concordance_out,
                         double* discordance_out) {
    double sum_c_lo = 0.0;
    double sum_c_hi = 0.0;
    double sum_d_lo = 0.0;
    double sum_d_hi = 0.0;
    double max_veto = 0.0;
    bool any_discordant = false;
    for (std::size_t k = 0; k < n; ++k) {
        const double diff = fy[k] - fx[k];
        // In the coalition iff diff >= -q_k with credibility at least 0.5.
        const Interval q = dm.indifference[k];
        const double span = q.hi - q.lo;
        bool concordant;
        if (span == 0.0) {
            concordant = diff >= -q.lo;
        } else {
            concordant = (diff + q.hi) / span >= 0.5;  // possibility([diff,diff] >= [-q.hi,-q.lo])
        }
        if (concordant) {
            sum_c_lo += dm.weights[k].lo;
            sum_c_hi += dm.weights[k].hi;
        } else {
            any_discordant = true;
            sum_d_lo += dm.weights[k].lo;
            sum_d_hi += dm.weights[k].hi;
            max_veto = std::max(max_veto, possibility(degenerate(-diff), dm.veto[k]));
        }
    }
    Interval c;
    c.lo = (sum_c_lo + sum_d_hi >= 1.0) ? sum_c_lo : 1.0 - sum_d_hi;
    c.hi = (sum_c_hi + sum_d_lo <= 1.0) ? sum_c_hi : 1.0 - sum_d_lo;
    const double d = any_discordant ? 1.0 - max_veto : 1.0;
    const double sigma = std::min(possibility(c, dm.lambda), d);
    if (concordance_out) *concordance_out = c;
    if (discordance_out) *discordance_out = d;
    return sigma;
}

std::vector<std::size_t> fronts_from_counts(const std::vector<std::size_t>& weakness,
                                             const std::vector<std::size_t>& strength) {
    const std::size_t n = weakness.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto lex_less = [&](std::size_t a, std::size_t b) {
        if (weakness[a] != weakness[b]) return weakness[a] < weakness[b];
        return strength[a] > strength[b];
    };
    std::stable_sort(order.begin(), order.end(), lex_less);
    std::vector<std::size_t> fronts(n, 1);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t i = order[pos];
        if (pos > 0 && lex_less(order[pos - 1], i)) {
            // strictly worse than its predecessor: front = count of strictly better + 1
            fronts[i] = pos + 1;
        } else if (pos > 0) {
            fronts[i] = fronts[order[pos - 1]];
        }
    }
    return fronts;
}

} // namespace detail

std::vector<std::size_t> concordance_coalition(const ObjectiveVector& fx,
                                               const ObjectiveVector& fy,
                                               const DmModel& dm) {
    check_lengths(fx, fy, dm);
    std::vector<std::size_t> coalition;
    for (std::size_t k = 0; k < fx.size(); ++k) {
        const Interval diff = degenerate(fy[k] - fx[k]);
        if (possibility(diff, negate(dm.indifference[k])) >= 0.5) {
            coalition.push_back(k);
        }
    }
    return coalition;
}

Interval concordance_index(const ObjectiveVector& fx, const ObjectiveVector& fy,
                           const DmModel& dm) {
    check_lengths(fx, fy, dm);
    Interval c;
    detail::credibility_sigma(fx.data(), fy.data(), fx.size(), dm, &c, nullptr);
    return c;
}

double discordance_index(const ObjectiveVector& fx, const ObjectiveVector& fy,
                         const DmModel& dm) {
    check_lengths(fx, fy, dm);
    double d = 1.0;
    detail::credibility_sigma(fx.data(), fy.data(), fx.size(), dm, nullptr, &d);
    return d;
}

CredibilityRecord credibility(const ObjectiveVector& fx, const ObjectiveVector& fy,
                              const DmModel& dm) {
    check_lengths(fx, fy, dm);
    CredibilityRecord rec;
    rec.sigma = detail::credibility_sigma(fx.data(), fy.data(), fx.size(), dm,
                                          &rec.concordance, &rec.discordance);
    return rec;
}

bool outranks(const ObjectiveVector& fx, const ObjectiveVector& fy, const DmModel& dm) {
    return credibility(fx, fy, dm).sigma >= dm.beta;
}

bool prefers(const ObjectiveVector& fx, const ObjectiveVector& fy, const DmModel& dm) {
    if (pareto_dominates(fx, fy)) return true;
    return outranks(fx, fy, dm) && !outranks(fy, fx, dm);
}

PopulationAnalysis analyze_population(const std::vector<ObjectiveVector>& pop,
                                      const DmModel& dm) {
    const std::size_t n = pop.size();
    PopulationAnalysis a;
    a.size = n;
    a.sigma.assign(n * n, 1.0);
    a.s.assign(n * n, 0);
    a.pr.assign(n * n, 0);
    a.strength.assign(n, 0);
    a.weakness.assign(n, 0);
    const std::size_t n_obj = dm.n_obj();
    for (std::size_t i = 0; i < n; ++i) {
        if (pop[i].size() != n_obj) {
            throw std::invalid_argument("objective vector length does not match the DM model");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double* fi = pop[i].data();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                a.s[i * n + j] = 1;  // sigma(x, x) = 1, excluded from counts
                continue;
            }
            const double sigma = detail::credibility_sigma(fi, pop[j].data(), n_obj, dm);
            a.sigma[i * n + j] = sigma;
            a.s[i * n + j] = sigma >= dm.beta ? 1 : 0;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const bool dominates = pareto_dominates(pop[i], pop[j]);
            const bool pr = dominates || (a.s[i * n + j] && !a.s[j * n + i]);
            a.pr[i * n + j] = pr ? 1 : 0;
            if (a.s[i * n + j]) ++a.strength[i];
            if (pr) ++a.weakness[j];
        }
    }
    a.fronts = detail::fronts_from_counts(a.weakness, a.strength);
    return a;
}

StrengthWeakness strength_weakness(const std::vector<ObjectiveVector>& pop,
                                   std::size_t x_index, const DmModel& dm) {
    if (x_index >= pop.size()) {
        throw std::invalid_argument("solution index out of range");
    }
    StrengthWeakness sw;
    for (std::size_t y = 0; y < pop.size(); ++y) {
        if (y == x_index) continue;
        if (outranks(pop[x_index], pop[y], dm)) ++sw.strength;
        if (prefers(pop[y], pop[x_index], dm)) ++sw.weakness;
    }
    return sw;
}

std::vector<std::size_t> surrogate_rank(const std::vector<ObjectiveVector>& pop,
                                        const DmModel& dm) {
    if (pop.empty()) throw std::invalid_argument("population is empty");
    return analyze_population(pop, dm).fronts;
}

std::vector<std::size_t> best_compromise_indices(const std::vector<ObjectiveVector>& pop,
                                                 const DmModel& dm) {
    const std::vector<std::size_t> fronts = surrogate_rank(pop, dm);
    std::vector<std::size_t> best;
    for (std::size_t i = 0; i < fronts.size(); ++i) {
        if (fronts[i] == 1) best.push_back(i);
    }
    return best;
}

std::vector<ObjectiveVector> best_compromise(const std::vector<ObjectiveVector>& pop,
                                             const DmModel& dm) {
    std::vector<ObjectiveVector> out;
    for (std::size_t i : best_compromise_indices(pop, dm)) out.push_back(pop[i]);
    return out;
}

} // namespace ioaco
