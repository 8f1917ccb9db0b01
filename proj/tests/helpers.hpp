#pragma once

#include <cmath>
#include <vector>

#include "pdda/arfima.hpp"
#include "pdda/rng.hpp"

namespace pdda::testing {

inline ArfimaSpec make_spec(std::vector<double> hurst, int n, std::uint64_t seed,
                            double rho = 0.0) {
    ArfimaSpec spec;
    spec.hurst = std::move(hurst);
    spec.innovation_correlation = rho;
    spec.length = n;
    spec.seed = seed;
    return spec;
}

// Absolute tolerance.
inline bool near(double a, double b, double atol) { return std::abs(a - b) <= atol; }

// Relative tolerance with an absolute floor for values below 1.
inline bool near_rel(double a, double b, double rtol) {
    return std::abs(a - b) <= rtol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double mean_of(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

inline double sample_sd(const std::vector<double>& v) {
    const double mean = mean_of(v);
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

// Deterministic random matrix for oracle tests.
inline Matrix random_matrix(int rows, int cols, std::uint64_t seed, double scale = 1.0) {
    GaussianRng rng(seed);
    Matrix m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) m(r, c) = scale * rng.normal();
    return m;
}

} // namespace pdda::testing
