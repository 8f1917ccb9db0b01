#include "pdda/arfima.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdda/errors.hpp"
#include "pdda/rng.hpp"

namespace pdda {

namespace {

constexpr double kCholeskyTol = 1e-12;

// Four-lane dot product. Fixed accumulation order, so results are
// deterministic; differs from the strictly sequential sum only by
// rounding (well inside the 1e-9 equivalence budget for the filter).
double dot(const double* a, const double* b, int n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    for (; i < n; ++i) s0 += a[i] * b[i];
    return (s0 + s1) + (s2 + s3);
}

} // namespace

ArfimaSpec ArfimaSpec::resolved() const {
    ArfimaSpec out = *this;
    if (out.truncation <= 0) out.truncation = std::max(out.length, 2048);
    return out;
}

void ArfimaSpec::validate() const {
    if (hurst.empty())
        throw ParameterError("arfima: at least one Hurst exponent is required");
    for (double h : hurst) {
        if (!(h > 0.0 && h < 1.0))
            throw ParameterError("arfima: Hurst exponent " + std::to_string(h) +
                                 " outside the open interval (0,1)");
    }
    const int m = dimension();
    if (std::abs(innovation_correlation) > 1.0)
        throw ParameterError("arfima: |rho| must not exceed 1");
    if (m >= 2) {
        const double lower = -1.0 / (m - 1);
        if (innovation_correlation < lower - 1e-12)
            throw ParameterError(
                "arfima: rho = " + std::to_string(innovation_correlation) +
                " makes the innovation covariance indefinite; need rho >= " +
                std::to_string(lower) + " for m = " + std::to_string(m));
    }
    if (length < 2) throw ParameterError("arfima: length must be at least 2");
    if (truncation < 1) throw ParameterError("arfima: truncation must be at least 1");
    if (burn_in < 0) throw ParameterError("arfima: burn-in must be non-negative");
}

std::vector<double> fractional_coefficients(double d, int truncation) {
    if (!(d > -0.5 && d < 0.5))
        throw ParameterError("arfima: fractional exponent d = " + std::to_string(d) +
                             " outside (-0.5, 0.5)");
    if (truncation < 1)
        throw ParameterError("arfima: truncation must be at least 1");
    std::vector<double> a(static_cast<std::size_t>(truncation) + 1);
    a[0] = 1.0;
    for (int k = 1; k <= truncation; ++k)
        a[k] = a[k - 1] * (k - 1 + d) / k;
    return a;
}

Matrix innovation_factor(int m, double rho) {
    if (m < 1) throw ParameterError("arfima: dimension must be at least 1");
    if (std::abs(rho) > 1.0)
        throw ParameterError("arfima: |rho| must not exceed 1");
    if (m >= 2 && rho < -1.0 / (m - 1) - 1e-12)
        throw ParameterError("arfima: rho below the positive semi-definite bound -1/(m-1)");

    // Cholesky of the equicorrelation matrix, tolerant of the PSD
    // boundary where pivots hit zero (rho = 1 or rho = -1/(m-1)).
    Matrix factor(m, m, 0.0);
    for (int j = 0; j < m; ++j) {
        double pivot = 1.0;
        for (int k = 0; k < j; ++k) pivot -= factor(j, k) * factor(j, k);
        if (pivot < -kCholeskyTol)
            throw ParameterError("arfima: innovation covariance is not positive semi-definite");
        factor(j, j) = pivot > kCholeskyTol ? std::sqrt(pivot) : 0.0;
        for (int i = j + 1; i < m; ++i) {
            if (factor(j, j) == 0.0) continue;
            double s = rho;
            for (int k = 0; k < j; ++k) s -= factor(i, k) * factor(j, k);
            factor(i, j) = s / factor(j, j);
        }
    }
    return factor;
}

TimeSeries generate(const ArfimaSpec& input) {
    const ArfimaSpec spec = input.resolved();
    spec.validate();

    const int m = spec.dimension();
    const int n = spec.length;
    const int k = spec.truncation;
    const int total = spec.burn_in + n + k;

    const Matrix factor = innovation_factor(m, spec.innovation_correlation);

    // Innovations drawn vector-by-vector (coordinate order within each
    // step) so the stream layout is independent of any later filtering.
    Matrix innovations(total, m);
    {
        GaussianRng rng(spec.seed);
        std::vector<double> raw(m);
        for (int t = 0; t < total; ++t) {
            for (int c = 0; c < m; ++c) raw[c] = rng.normal();
            for (int c = 0; c < m; ++c) {
                double v = 0.0;
                for (int j = 0; j <= c; ++j) v += factor(c, j) * raw[j];
                innovations(t, c) = v;
            }
        }
    }

    TimeSeries series;
    series.values = Matrix(n, m);
    series.spec = spec;

    std::vector<double> reversed(static_cast<std::size_t>(k) + 1);
    for (int c = 0; c < m; ++c) {
        const auto coeffs = fractional_coefficients(spec.hurst[c] - 0.5, k);
        for (int i = 0; i <= k; ++i) reversed[i] = coeffs[k - i];
        const double* eps = innovations.col(c).data();
        double* out = series.values.col(c).data();
        // Output t uses innovations [B+t, B+t+K]; the first B+K raw
        // filter outputs are never formed.
        for (int t = 0; t < n; ++t)
            out[t] = dot(reversed.data(), eps + spec.burn_in + t, k + 1);
    }
    return series;
}

} // namespace pdda
