#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ioaco/assessment.hpp"
#include "ioaco/problems.hpp"
#include "ioaco/rng.hpp"

using namespace ioaco;

namespace {

DmModel simple_dm(double w1_center, std::size_t n) {
    DmModel dm;
    const double rest = (1.0 - w1_center) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        const double c = k == 0 ? w1_center : rest;
        dm.weights.push_back({c * 0.9, c * 1.1});
        dm.indifference.push_back({0.02, 0.05});
        dm.veto.push_back({0.2, 0.4});
    }
    dm.lambda = {0.6, 0.7};
    dm.beta = 0.67;
    validate(dm);
    return dm;
}

// Problem-3 selection computed pairwise from the relation primitives, not
// through analyze_population.
std::vector<ObjectiveVector> best_compromise_oracle(const std::vector<ObjectiveVector>& pop,
                                                    const DmModel& dm) {
    const std::size_t n = pop.size();
    std::vector<std::size_t> strength(n, 0), weakness(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (outranks(pop[i], pop[j], dm)) ++strength[i];
            if (prefers(pop[j], pop[i], dm)) ++weakness[i];
        }
    }
    std::size_t best_w = *std::min_element(weakness.begin(), weakness.end());
    std::size_t best_s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (weakness[i] == best_w) best_s = std::max(best_s, strength[i]);
    }
    std::vector<ObjectiveVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (weakness[i] == best_w && strength[i] == best_s) out.push_back(pop[i]);
    }
    return out;
}

// Exact two-sided permutation p-value of the rank-sum statistic, enumerated
// over every assignment of the pooled mid-ranks to the first sample.
double permutation_p(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && pooled[order[j]] == pooled[order[i]]) ++j;
        const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) ranks[order[t]] = mid;
        i = j;
    }

    const std::size_t n1 = a.size();
    double observed = 0.0;
    for (std::size_t k = 0; k < n1; ++k) observed += ranks[k];
    const double mean = static_cast<double>(n1) * static_cast<double>(n + 1) / 2.0;
    const double tail = std::fabs(observed - mean);

    // Walk every n-choose-n1 subset with the revolving-door order.
    std::vector<std::size_t> pick(n1);
    std::iota(pick.begin(), pick.end(), 0);
    long long total = 0;
    long long extreme = 0;
    while (true) {
        double w = 0.0;
        for (std::size_t idx : pick) w += ranks[idx];
        ++total;
        if (std::fabs(w - mean) >= tail - 1e-9) ++extreme;

        std::size_t pos = n1;
        while (pos > 0 && pick[pos - 1] == n - n1 + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t t = pos; t < n1; ++t) pick[t] = pick[t - 1] + 1;
    }
    return static_cast<double>(extreme) / static_cast<double>(total);
}

} // namespace

TEST_CASE("A-RoI is the best-compromise slice of the sample") {
    const DmModel dm = simple_dm(0.34, 2);

    const std::vector<ObjectiveVector> single = {{0.3, 0.7}};
    const ARoI solo = build_aroi(single, dm);
    REQUIRE(solo.points.size() == 1);
    CHECK(solo.points[0] == single[0]);
    CHECK(solo.sample_size == 1);

    // A dominating point expels its dominated near-duplicates.
    const std::vector<ObjectiveVector> clustered = {
        {0.2, 0.2}, {0.21, 0.21}, {0.22, 0.2}, {0.2, 0.23}, {0.9, 0.1}};
    const ARoI roi = build_aroi(clustered, dm);
    for (const auto& p : roi.points) {
        CHECK(p != clustered[1]);
        CHECK(p != clustered[2]);
        CHECK(p != clustered[3]);
    }

    CHECK_THROWS_AS(build_aroi({}, dm), std::invalid_argument);
}

TEST_CASE("A-RoI matches a pairwise oracle on real front samples") {
    for (std::size_t m : {3, 5}) {
        const auto sample = sample_true_front(make_problem("dtlz2", m), 250, 77);
        const DmModel dm = simple_dm(0.5, m);
        const ARoI roi = build_aroi(sample, dm);
        CHECK(roi.points == best_compromise_oracle(sample, dm));
        REQUIRE_FALSE(roi.points.empty());
        // Membership: every A-RoI point comes from the sample.
        for (const auto& p : roi.points) {
            CHECK(std::find(sample.begin(), sample.end(), p) != sample.end());
        }
    }
}

TEST_CASE("opposed decision makers claim different regions") {
    const auto sample = sample_true_front(make_problem("dtlz1", 3), 500, 13);
    const ARoI first = build_aroi(sample, simple_dm(0.8, 3));
    const ARoI third = build_aroi(sample, simple_dm(0.1, 3));

    auto centroid = [](const std::vector<ObjectiveVector>& pts) {
        ObjectiveVector c(pts.front().size(), 0.0);
        for (const auto& p : pts) {
            for (std::size_t k = 0; k < c.size(); ++k) c[k] += p[k];
        }
        for (double& v : c) v /= static_cast<double>(pts.size());
        return c;
    };
    const ObjectiveVector a = centroid(first.points);
    const ObjectiveVector b = centroid(third.points);
    double dist = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) dist += (a[k] - b[k]) * (a[k] - b[k]);
    CHECK(std::sqrt(dist) > 0.05);
    // The DM pressing on objective 1 accepts less of it.
    CHECK(a[0] < b[0]);
}

TEST_CASE("indicator block on the worked example") {
    ARoI roi;
    roi.points = {{3.0, 4.0}};
    const IndicatorBlock block = indicators({{0.0, 0.0}}, roi);
    CHECK(block.min_euclid == doctest::Approx(5.0));
    CHECK(block.avg_euclid == doctest::Approx(5.0));
    CHECK(block.min_cheby == doctest::Approx(4.0));
    CHECK(block.avg_cheby == doctest::Approx(4.0));
}

TEST_CASE("identical sets give zero distances") {
    ARoI roi;
    roi.points = {{0.1, 0.9}, {0.5, 0.5}, {0.9, 0.1}};
    const IndicatorBlock block = indicators(roi.points, roi);
    CHECK(block.min_euclid == 0.0);
    CHECK(block.avg_euclid == 0.0);
    CHECK(block.min_cheby == 0.0);
    CHECK(block.avg_cheby == 0.0);
}

TEST_CASE("a worse point cannot improve the indicators") {
    ARoI roi;
    roi.points = {{0.0, 0.0}, {1.0, 0.0}};
    std::vector<ObjectiveVector> approx = {{0.1, 0.1}, {0.8, 0.2}};
    const IndicatorBlock before = indicators(approx, roi);
    approx.push_back({5.0, 5.0});
    const IndicatorBlock after = indicators(approx, roi);
    CHECK(after.min_euclid == before.min_euclid);
    CHECK(after.min_cheby == before.min_cheby);
    CHECK(after.avg_euclid >= before.avg_euclid);
    CHECK(after.avg_cheby >= before.avg_cheby);
}

TEST_CASE("indicators are permutation invariant") {
    Rng rng(0x696e64ULL);
    std::vector<ObjectiveVector> approx, front;
    for (int i = 0; i < 12; ++i) {
        approx.push_back({rng.uniform01(), rng.uniform01(), rng.uniform01()});
        front.push_back({rng.uniform01(), rng.uniform01(), rng.uniform01()});
    }
    ARoI roi;
    roi.points = front;
    const IndicatorBlock base = indicators(approx, roi);

    std::reverse(roi.points.begin(), roi.points.end());
    std::vector<ObjectiveVector> shuffled = approx;
    std::rotate(shuffled.begin(), shuffled.begin() + 5, shuffled.end());
    const IndicatorBlock moved = indicators(shuffled, roi);
    CHECK(moved.min_euclid == doctest::Approx(base.min_euclid).epsilon(1e-12));
    CHECK(moved.avg_euclid == doctest::Approx(base.avg_euclid).epsilon(1e-12));
    CHECK(moved.min_cheby == doctest::Approx(base.min_cheby).epsilon(1e-12));
    CHECK(moved.avg_cheby == doctest::Approx(base.avg_cheby).epsilon(1e-12));
}

TEST_CASE("all-pairs averaging is exposed behind the flag") {
    ARoI roi;
    roi.points = {{0.0, 0.0}, {2.0, 0.0}};
    const std::vector<ObjectiveVector> approx = {{0.0, 0.0}};
    const IndicatorBlock nn = indicators(approx, roi);
    CHECK(nn.avg_euclid == doctest::Approx(0.0));
    const IndicatorBlock ap = indicators(approx, roi, true);
    CHECK(ap.avg_euclid == doctest::Approx(1.0));  // (0 + 2) / 2
    CHECK(ap.min_euclid == doctest::Approx(0.0));
}

TEST_CASE("indicator preconditions") {
    ARoI roi;
    roi.points = {{0.0, 0.0}};
    CHECK_THROWS_AS(indicators({}, roi), std::invalid_argument);
    CHECK_THROWS_AS(indicators({{1.0, 2.0, 3.0}}, roi), std::invalid_argument);
    ARoI empty;
    CHECK_THROWS_AS(indicators({{1.0, 2.0}}, empty), std::invalid_argument);
}

TEST_CASE("rank-sum test on separated and identical samples") {
    std::vector<double> low(30), high(30);
    std::iota(low.begin(), low.end(), 1.0);     // 1..30
    std::iota(high.begin(), high.end(), 101.0); // 101..130
    const RankSumResult split = wilcoxon_rank_sum(low, high, 0.05);
    CHECK(split.significant);
    CHECK(split.p_value < 1e-6);

    const RankSumResult same = wilcoxon_rank_sum(low, low, 0.05);
    CHECK_FALSE(same.significant);
    CHECK(same.p_value == 1.0);

    const std::vector<double> constant(8, 3.25);
    const RankSumResult degenerate = wilcoxon_rank_sum(constant, constant, 0.05);
    CHECK(degenerate.p_value == 1.0);
    CHECK_FALSE(degenerate.significant);

    const RankSumResult ab = wilcoxon_rank_sum(low, high, 0.05);
    const RankSumResult ba = wilcoxon_rank_sum(high, low, 0.05);
    CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));

    CHECK_THROWS_AS(wilcoxon_rank_sum({1, 2, 3}, low, 0.05), std::invalid_argument);
}

TEST_CASE("normal approximation tracks the exact permutation law") {
    Rng rng(0x7065726dULL);
    for (int rep = 0; rep < 4; ++rep) {
        const std::size_t n1 = 8 + rng.uniform_index(3);
        const std::size_t n2 = 8 + rng.uniform_index(3);
        std::vector<double> a(n1), b(n2);
        const double shift = rng.uniform(0.0, 1.2);
        for (double& v : a) v = rng.normal(0.0, 1.0);
        for (double& v : b) v = rng.normal(shift, 1.0);
        // Quantize so ties actually occur.
        for (double& v : a) v = std::round(v * 4.0) / 4.0;
        for (double& v : b) v = std::round(v * 4.0) / 4.0;

        const double exact = permutation_p(a, b);
        const double approx = wilcoxon_rank_sum(a, b, 0.05).p_value;
        CHECK(std::fabs(exact - approx) < 0.02);
    }
}

TEST_CASE("Holm step-down decisions") {
    const auto single = holm_bonferroni({0.01}, 0.05);
    CHECK(single == std::vector<bool>{true});

    // Thresholds 0.05/3, 0.05/2, 0.05 all pass in order.
    const auto ladder = holm_bonferroni({0.04, 0.01, 0.02}, 0.05);
    CHECK(ladder == std::vector<bool>{true, true, true});

    // The first threshold 0.0167 already fails; everything is accepted.
    const auto stuck = holm_bonferroni({0.04, 0.04, 0.04}, 0.05);
    CHECK(stuck == std::vector<bool>{false, false, false});

    const auto mixed = holm_bonferroni({0.001, 0.5, 0.012}, 0.05);
    CHECK(mixed == std::vector<bool>{true, false, true});
}

TEST_CASE("Holm rejections are monotone in p") {
    Rng rng(0x686f6c6dULL);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t m = 1 + rng.uniform_index(10);
        std::vector<double> p(m);
        for (double& v : p) v = rng.uniform01();
        const auto reject = holm_bonferroni(p, 0.05);
        for (std::size_t i = 0; i < m; ++i) {
            if (!reject[i]) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (p[j] <= p[i]) CHECK(reject[j]);
            }
        }
    }
}

TEST_CASE("competition positions average draws") {
    CHECK(competition_positions({0.3, 0.1, 0.2}) == std::vector<double>{3.0, 1.0, 2.0});
    CHECK(competition_positions({0.1, 0.1, 0.9}) == std::vector<double>{1.5, 1.5, 3.0});
    CHECK(competition_positions({2.0, 2.0, 2.0}) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("Borda sums and ordering") {
    const BordaResult clear = borda_ranking({{1.0, 2.0, 3.0}});
    CHECK(clear.sums == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(clear.order == std::vector<std::size_t>{0, 1, 2});

    const BordaResult tied = borda_ranking({{1.5, 1.5, 3.0}});
    CHECK(tied.sums == std::vector<double>{1.5, 1.5, 3.0});

    // Position sums always account for every slot of every problem.
    const std::vector<std::vector<double>> positions = {
        {1.0, 2.0, 3.0}, {2.0, 1.0, 3.0}, {1.5, 1.5, 3.0}, {3.0, 1.0, 2.0}};
    const BordaResult total = borda_ranking(positions);
    CHECK(std::accumulate(total.sums.begin(), total.sums.end(), 0.0) ==
          doctest::Approx(4.0 * 6.0));

    // Problem order is irrelevant.
    std::vector<std::vector<double>> reordered = {positions[2], positions[0], positions[3],
                                                  positions[1]};
    CHECK(borda_ranking(reordered).sums == total.sums);

    CHECK_THROWS_AS(borda_ranking({{1.0, 2.0}, {1.0, 2.0, 3.0}}), std::invalid_argument);
    CHECK(borda_ranking({}).sums.empty());
}
