#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "pdda/arfima.hpp"
#include "pdda/errors.hpp"
#include "pdda/estimators.hpp"
#include "pdda/rng.hpp"

#include "helpers.hpp"

using namespace pdda;
using namespace pdda::testing;

TEST_CASE("fractional coefficients match the closed forms") {
    const auto zero = fractional_coefficients(0.0, 3);
    CHECK(zero == std::vector<double>{1.0, 0.0, 0.0, 0.0});

    const auto pos = fractional_coefficients(0.25, 2);
    CHECK(pos[0] == 1.0);
    CHECK(pos[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(pos[2] == doctest::Approx(0.15625).epsilon(1e-15));

    const auto neg = fractional_coefficients(-0.25, 2);
    CHECK(neg[1] == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(neg[2] == doctest::Approx(-0.09375).epsilon(1e-15));
}

TEST_CASE("fractional coefficients reject out-of-range d") {
    CHECK_THROWS_AS(fractional_coefficients(0.5, 4), ParameterError);
    CHECK_THROWS_AS(fractional_coefficients(-0.6, 4), ParameterError);
    CHECK_THROWS_AS(fractional_coefficients(0.1, 0), ParameterError);
}

TEST_CASE("coefficient tails decay monotonically") {
    for (double d : {0.1, 0.3, 0.45}) {
        const auto a = fractional_coefficients(d, 200);
        for (int k = 1; k <= 200; ++k) {
            CHECK(a[k] > 0.0);
            if (k > 1) CHECK(a[k] < a[k - 1]);
        }
    }
    for (double d : {-0.1, -0.3, -0.45}) {
        const auto a = fractional_coefficients(d, 200);
        for (int k = 1; k <= 200; ++k) {
            CHECK(a[k] < 0.0);
            if (k > 1) CHECK(std::abs(a[k]) < std::abs(a[k - 1]));
        }
    }
}

TEST_CASE("innovation factor reproduces the equicorrelation matrix") {
    const auto check_factor = [](int m, double rho) {
        const Matrix factor = innovation_factor(m, rho);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                double dot = 0.0;
                for (int k = 0; k < m; ++k) dot += factor(i, k) * factor(j, k);
                const double want = i == j ? 1.0 : rho;
                CHECK(near(dot, want, 1e-12));
            }
        }
    };
    check_factor(1, 0.7);
    check_factor(2, 0.0);
    check_factor(2, 0.3);
    check_factor(2, 1.0);          // singular endpoint
    check_factor(3, -0.5);         // PSD boundary for m=3
    check_factor(4, 0.9);

    const Matrix two = innovation_factor(2, 0.3);
    CHECK(two(0, 0) == 1.0);
    CHECK(two(1, 0) == doctest::Approx(0.3));
    CHECK(two(1, 1) == doctest::Approx(std::sqrt(0.91)));
}

TEST_CASE("innovation factor rejects indefinite correlations") {
    CHECK_THROWS_AS(innovation_factor(3, -0.6), ParameterError);
    CHECK_THROWS_AS(innovation_factor(2, 1.2), ParameterError);
}

TEST_CASE("spec validation") {
    ArfimaSpec spec = make_spec({0.5}, 100, 1);
    CHECK_NOTHROW(spec.resolved().validate());
    CHECK(spec.resolved().truncation == 2048);

    spec.hurst = {1.0};
    CHECK_THROWS_AS(spec.resolved().validate(), ParameterError);
    spec.hurst = {0.5};
    spec.length = 1;
    CHECK_THROWS_AS(spec.resolved().validate(), ParameterError);
    spec.length = 100;
    spec.burn_in = -1;
    CHECK_THROWS_AS(spec.resolved().validate(), ParameterError);
    spec.burn_in = 0;
    spec.hurst = {0.5, 0.5, 0.5};
    spec.innovation_correlation = -0.9;
    CHECK_THROWS_AS(spec.resolved().validate(), ParameterError);
}

TEST_CASE("H=0.5 collapses to the correlated innovations") {
    ArfimaSpec spec = make_spec({0.5, 0.5}, 200, 99, 0.4);
    spec.truncation = 64;
    const TimeSeries x = generate(spec);

    // Replay the innovation stream; the filter is the identity, so the
    // output must equal the retained window of the stream.
    const Matrix factor = innovation_factor(2, 0.4);
    GaussianRng rng(99);
    const int total = 200 + 64;
    Matrix eta(total, 2);
    for (int t = 0; t < total; ++t) {
        const double g0 = rng.normal();
        const double g1 = rng.normal();
        eta(t, 0) = factor(0, 0) * g0;
        eta(t, 1) = factor(1, 0) * g0 + factor(1, 1) * g1;
    }
    for (int t = 0; t < 200; ++t) {
        CHECK(x.values(t, 0) == eta(t + 64, 0));
        CHECK(x.values(t, 1) == eta(t + 64, 1));
    }
}

TEST_CASE("rho = 1 duplicates the coordinates") {
    ArfimaSpec spec = make_spec({0.7, 0.7}, 500, 3, 1.0);
    spec.truncation = 256;
    const TimeSeries x = generate(spec);
    for (int t = 0; t < x.length(); ++t)
        CHECK(near_rel(x.values(t, 0), x.values(t, 1), 1e-12));
}

TEST_CASE("identical specs reproduce bit for bit") {
    ArfimaSpec spec = make_spec({0.3, 0.8}, 300, 1234, 0.2);
    spec.truncation = 128;
    const TimeSeries a = generate(spec);
    const TimeSeries b = generate(spec);
    CHECK(a.values == b.values);
}

TEST_CASE("different seeds give different series") {
    ArfimaSpec spec = make_spec({0.6}, 64, 0);
    spec.truncation = 32;
    for (std::uint64_t s = 0; s < 100; ++s) {
        spec.seed = s;
        const TimeSeries a = generate(spec);
        spec.seed = s + 1000;
        const TimeSeries b = generate(spec);
        CHECK(a.values(0, 0) != b.values(0, 0));
    }
}

TEST_CASE("empirical cross-correlation approaches rho at H=0.5") {
    const int n = 20000;
    for (double rho : {0.0, 0.3, -0.5}) {
        ArfimaSpec spec = make_spec({0.5, 0.5}, n, 77, rho);
        spec.truncation = 16;
        const TimeSeries x = generate(spec);
        double sxy = 0, sxx = 0, syy = 0, mx = 0, my = 0;
        for (int t = 0; t < n; ++t) { mx += x.values(t, 0); my += x.values(t, 1); }
        mx /= n; my /= n;
        for (int t = 0; t < n; ++t) {
            const double dx = x.values(t, 0) - mx;
            const double dy = x.values(t, 1) - my;
            sxy += dx * dy; sxx += dx * dx; syy += dy * dy;
        }
        const double r = sxy / std::sqrt(sxx * syy);
        CHECK(std::abs(r - rho) < 3.0 / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("unit variance at H=0.5") {
    const int n = 40000;
    ArfimaSpec spec = make_spec({0.5}, n, 2024);
    spec.truncation = 16;
    const TimeSeries x = generate(spec);
    double ss = 0, mean = 0;
    for (int t = 0; t < n; ++t) mean += x.values(t, 0);
    mean /= n;
    for (int t = 0; t < n; ++t) ss += (x.values(t, 0) - mean) * (x.values(t, 0) - mean);
    CHECK(std::abs(ss / n - 1.0) < 5.0 / std::sqrt(static_cast<double>(n)));
}

// Ensemble autocovariance of the increments should decay as a power
// law with exponent 2H-2; checked in log-log over dyadic lags.
TEST_CASE("increment autocovariance decays with exponent 2H-2") {
    const double h = 0.75;
    const int n = 1 << 15;
    const int reps = 50;
    const std::vector<int> lag_points = {16, 32, 64, 128, 256};

    std::vector<double> acov(lag_points.size(), 0.0);
    for (int r = 0; r < reps; ++r) {
        const TimeSeries x = generate(make_spec({h}, n, 5000 + r));
        double mean = 0;
        const auto col = x.values.col(0);
        for (double v : col) mean += v;
        mean /= n;
        for (std::size_t i = 0; i < lag_points.size(); ++i) {
            const int k = lag_points[i];
            double acc = 0;
            for (int t = 0; t + k < n; ++t) acc += (col[t] - mean) * (col[t + k] - mean);
            acov[i] += acc / (n - k) / reps;
        }
    }
    std::vector<double> lags_d(lag_points.begin(), lag_points.end());
    const LogLogFit fit = loglog_fit(lags_d, acov, {1, 1 << 14});
    CHECK(fit.points_used == 5);
    CHECK(near(fit.slope, 2 * h - 2, 0.15));
}
