#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdda/matrix.hpp"

namespace pdda {

// Parameters of an m-variate ARFIMA(0,d,0) generator with uniform
// pairwise innovation correlation between coordinates.
struct ArfimaSpec {
    std::vector<double> hurst;            // one H per coordinate, each in (0,1)
    double innovation_correlation = 0.0;  // rho applied to every coordinate pair
    int length = 0;                       // retained samples N
    int truncation = 0;                   // MA filter length K; 0 = max(length, 2048)
    int burn_in = 0;                      // extra discarded leading samples B
    std::uint64_t seed = 0;

    int dimension() const { return static_cast<int>(hurst.size()); }

    // Copy with the defaulted truncation filled in.
    ArfimaSpec resolved() const;

    // Throws ParameterError when any invariant is violated. Expects a
    // resolved spec (truncation > 0).
    void validate() const;
};

struct TimeSeries {
    Matrix values;                   // length x dimension
    std::optional<ArfimaSpec> spec;  // absent for externally loaded data

    int length() const { return static_cast<int>(values.rows()); }
    int dimension() const { return static_cast<int>(values.cols()); }
};

// Fractional integration coefficients a_0..a_K for exponent d:
// a_0 = 1, a_k = a_{k-1} (k - 1 + d) / k.
std::vector<double> fractional_coefficients(double d, int truncation);

// Lower-triangular factor L with L L^T equal to the m x m matrix with
// unit diagonal and rho off-diagonal. Handles the singular endpoints
// rho = 1 and rho = -1/(m-1).
Matrix innovation_factor(int m, double rho);

// Draws B+N+K correlated innovation vectors, filters each coordinate
// with its truncated MA(K) coefficients and discards the first B+K
// outputs, so every retained sample uses a full coefficient window.
// Deterministic given the seed.
TimeSeries generate(const ArfimaSpec& spec);

} // namespace pdda
