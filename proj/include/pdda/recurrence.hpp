#pragma once

#include <cstdint>
#include <vector>

#include "pdda/estimators.hpp"
#include "pdda/matrix.hpp"
#include "pdda/path.hpp"

namespace pdda {

// Fraction of state pairs a fixed lag apart that stay within distance
// epsilon, per lag.
struct RecurrenceCurve {
    double epsilon = 0.0;
    std::vector<int> lags;
    std::vector<double> p;
    std::vector<std::int64_t> recurrent;  // pairs within epsilon
    std::vector<int> total;               // length - lag
};

struct RangeDimensionReport {
    double h_max = 0.0;
    int dimension = 0;                  // embedding dimension m
    double d_range_theoretical = 0.0;   // min(m, 1/h_max)
    double predicted_decay = 0.0;       // -h_max * d_range_theoretical
    double fitted_decay = 0.0;          // slope of ln p vs ln tau
    LogLogFit fit;
    int zero_lags_excluded = 0;         // lags with p = 0 dropped from the fit
};

// Each column divided by its sample standard deviation (denominator
// n-1). Throws DataError on a constant column.
Matrix normalize_unit_variance(const Matrix& values);
TimeSeries normalize_unit_variance(const TimeSeries& x);

// Per lag tau: fraction of the N-tau pairs (t, t+tau) with Euclidean
// separation <= epsilon. Streaming, O(N) per lag.
RecurrenceCurve recurrence_probability(const CumulativePath& z, double epsilon,
                                       const std::vector<int>& lags);

// min(m, 1/h_max): how many directions the trajectory's range fills.
double range_dimension(double h_max, int m);

// Fits the decay of ln p against ln tau inside fit_range and compares
// it with the -h_max * min(m, 1/h_max) prediction. Lags with zero
// recurrent pairs are excluded from the fit (counted in the report);
// if fewer than 3 positive lags remain the FitError suggests a larger
// epsilon.
RangeDimensionReport decay_report(const RecurrenceCurve& curve, double h_max, int m,
                                  FitRange fit_range);

} // namespace pdda
