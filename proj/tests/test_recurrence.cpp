#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdda/arfima.hpp"
#include "pdda/errors.hpp"
#include "pdda/path.hpp"
#include "pdda/recurrence.hpp"
#include "pdda/rng.hpp"

#include "helpers.hpp"

using namespace pdda;
using namespace pdda::testing;

namespace {

CumulativePath normalized_path(const TimeSeries& x) {
    return cumulative_path(normalize_unit_variance(x));
}

RecurrenceCurve curve_for(std::vector<double> hurst, int n, std::uint64_t seed, double eps,
                          int tau_max, double rho = 0.3) {
    const auto x = generate(make_spec(std::move(hurst), n, seed, rho));
    return recurrence_probability(normalized_path(x), eps, dense_lag_grid(n, tau_max));
}

} // namespace

TEST_CASE("normalization rescales each column to unit variance") {
    Matrix m(6, 2);
    const double a[6] = {2, -2, 4, -4, 6, -6};
    for (int t = 0; t < 6; ++t) { m(t, 0) = a[t]; m(t, 1) = a[t] / 2; }
    const Matrix out = normalize_unit_variance(m);
    for (int t = 0; t < 6; ++t) CHECK(out(t, 0) == doctest::Approx(out(t, 1)).epsilon(1e-15));

    // Already unit variance: unchanged.
    GaussianRng rng(4);
    Matrix g(500, 1);
    for (int t = 0; t < 500; ++t) g(t, 0) = rng.normal();
    double mean = 0, var = 0;
    for (int t = 0; t < 500; ++t) mean += g(t, 0);
    mean /= 500;
    for (int t = 0; t < 500; ++t) var += (g(t, 0) - mean) * (g(t, 0) - mean);
    const double sd = std::sqrt(var / 499);
    for (int t = 0; t < 500; ++t) g(t, 0) /= sd;
    const Matrix same = normalize_unit_variance(g);
    for (int t = 0; t < 500; ++t)
        CHECK(near_rel(same(t, 0), g(t, 0), 1e-12));
}

TEST_CASE("normalization rejects constant columns") {
    Matrix m(10, 1, 3.0);
    CHECK_THROWS_AS(normalize_unit_variance(m), DataError);
}

// Normalize-then-accumulate equals accumulate-then-scale: the path is
// linear in the samples coordinate by coordinate.
TEST_CASE("normalization commutes with the cumulative path") {
    const auto x = generate(make_spec({0.4, 0.7}, 300, 17, 0.2));
    const auto left = cumulative_path(normalize_unit_variance(x));
    const auto base = cumulative_path(x);
    for (int c = 0; c < 2; ++c) {
        const auto col = x.values.col(c);
        double mean = 0, var = 0;
        for (double v : col) mean += v;
        mean /= 300;
        for (double v : col) var += (v - mean) * (v - mean);
        const double sd = std::sqrt(var / 299);
        for (int t = 0; t < 300; ++t)
            CHECK(near_rel(left.z(t, c), base.z(t, c) / sd, 1e-12));
    }
}

TEST_CASE("constant path recurs at every lag") {
    CumulativePath p;
    p.z = Matrix(50, 2, 1.25);
    const auto curve = recurrence_probability(p, 0.1, {1, 5, 20});
    for (double prob : curve.p) CHECK(prob == 1.0);
    CHECK(curve.total[0] == 49);
    CHECK(curve.recurrent[2] == 30);
}

TEST_CASE("recurrence validates its inputs") {
    CumulativePath p;
    p.z = Matrix(50, 1, 0.0);
    CHECK_THROWS_AS(recurrence_probability(p, 0.0, {1}), ParameterError);
    CHECK_THROWS_AS(recurrence_probability(p, -1.0, {1}), ParameterError);
    CHECK_THROWS_AS(recurrence_probability(p, 0.5, {}), ParameterError);
    CHECK_THROWS_AS(recurrence_probability(p, 0.5, {50}), ParameterError);
}

// Brute-force oracle: count thresholded pairs on each diagonal of the
// dense distance matrix.
TEST_CASE("recurrence counts match the dense-matrix diagonals") {
    const int n = 300;
    CumulativePath p;
    p.z = random_matrix(n, 2, 2025, 0.7);
    const auto lags = dense_lag_grid(n, 30);
    const double eps = 0.9;
    const auto curve = recurrence_probability(p, eps, lags);
    const Matrix dist = distance_matrix(p);
    for (std::size_t i = 0; i < lags.size(); ++i) {
        const int tau = lags[i];
        std::int64_t count = 0;
        for (int t = 0; t + tau < n; ++t)
            if (dist(t, t + tau) <= eps) ++count;
        CHECK(curve.recurrent[i] == count);
        CHECK(curve.p[i] == static_cast<double>(count) / (n - tau));
    }
}

TEST_CASE("recurrence probability is monotone in epsilon") {
    CumulativePath p;
    p.z = random_matrix(400, 2, 31, 1.3);
    const auto lags = dense_lag_grid(400, 40);
    const auto small = recurrence_probability(p, 0.2, lags);
    const auto large = recurrence_probability(p, 0.8, lags);
    for (std::size_t i = 0; i < lags.size(); ++i) CHECK(small.p[i] <= large.p[i]);
}

TEST_CASE("range dimension closed form") {
    CHECK(range_dimension(0.25, 2) == 2.0);
    CHECK(range_dimension(0.75, 2) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(range_dimension(0.5, 1) == 1.0);
    CHECK_THROWS_AS(range_dimension(0.0, 2), ParameterError);
    CHECK_THROWS_AS(range_dimension(0.5, 0), ParameterError);
}

TEST_CASE("decay report carries the regime prediction") {
    RecurrenceCurve curve;
    GaussianRng rng(8);
    for (int tau = 1; tau <= 80; ++tau) {
        curve.lags.push_back(tau);
        curve.p.push_back(0.5 * std::pow(tau, -0.4) * (1 + 0.02 * rng.normal()));
        curve.recurrent.push_back(100);
        curve.total.push_back(1000 - tau);
    }
    const auto report = decay_report(curve, 0.2, 2, {8, 55});
    CHECK(report.d_range_theoretical == 2.0);
    CHECK(report.predicted_decay == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(std::abs(report.fitted_decay - (-0.4)) <= 0.03);

    // Smooth regime: the predicted decay saturates at -1.
    const auto smooth = decay_report(curve, 0.9, 1, {8, 55});
    CHECK(smooth.predicted_decay == doctest::Approx(-0.9).epsilon(1e-15));
    const auto capped = decay_report(curve, 0.8, 2, {8, 55});
    CHECK(capped.predicted_decay == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("decay report excludes empty lags and can run dry") {
    RecurrenceCurve curve;
    for (int tau = 1; tau <= 60; ++tau) {
        curve.lags.push_back(tau);
        const bool dead = tau > 20;
        curve.p.push_back(dead ? 0.0 : 0.3 * std::pow(tau, -0.5));
        curve.recurrent.push_back(dead ? 0 : 10);
        curve.total.push_back(500 - tau);
    }
    const auto report = decay_report(curve, 0.25, 2, {8, 55});
    CHECK(report.zero_lags_excluded == 35);
    CHECK(report.fit.points_used == 13);

    RecurrenceCurve dead = curve;
    for (std::size_t i = 0; i < dead.p.size(); ++i)
        if (dead.lags[i] >= 6) { dead.p[i] = 0.0; dead.recurrent[i] = 0; }
    CHECK_THROWS_AS(decay_report(dead, 0.25, 2, {8, 55}), FitError);
}

// Rough isotropic pair: the decay follows -m*H.
TEST_CASE("dimension-controlled decay for a rough process") {
    double acc = 0;
    const int seeds = 3;
    for (int s = 0; s < seeds; ++s) {
        const auto curve = curve_for({0.2, 0.2}, 30000, 777 + s, 0.2, 110);
        acc += decay_report(curve, 0.2, 2, {8, 55}).fitted_decay;
    }
    CHECK(std::abs(acc / seeds - (-0.4)) <= 0.2);
}

// The saturation the regime rule predicts for persistent processes
// does not materialize at fixed lag: the displacement is a full-rank
// Gaussian vector, so the measured decay keeps following
// -(H1+...+Hm) rather than flattening at -1. The expected failure
// documents the gap between the regime rule and the measured decay.
TEST_CASE("persistent isotropic decay saturates near -1"
          * doctest::should_fail()) {
    for (double h : {0.6, 0.75, 0.9}) {
        double acc = 0;
        const int seeds = 3;
        for (int s = 0; s < seeds; ++s) {
            const auto curve = curve_for({h, h}, 30000, 900 + s, 1.0, 110);
            acc += decay_report(curve, h, 2, {8, 55}).fitted_decay;
        }
        const double fitted = acc / seeds;
        CHECK(fitted >= -1.3);
        CHECK(fitted <= -0.7);
    }
}

// Static geometry: at fixed lag the recurrence mass grows as
// epsilon^D_range.
TEST_CASE("epsilon scaling matches the range dimension") {
    const auto x = generate(make_spec({0.25, 0.25}, 30000, 424242, 0.3));
    const auto z = normalized_path(x);
    std::vector<double> epss = {0.05, 0.08, 0.125, 0.2, 0.3, 0.4}, ps;
    for (double eps : epss) {
        const auto curve = recurrence_probability(z, eps, {16});
        ps.push_back(curve.p[0]);
    }
    const auto fit = loglog_fit(epss, ps, {0.04, 0.5});
    CHECK(std::abs(fit.slope - 2.0) <= 0.3);
}
