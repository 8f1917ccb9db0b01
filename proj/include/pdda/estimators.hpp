#pragma once

#include <span>
#include <string>
#include <vector>

#include "pdda/arfima.hpp"
#include "pdda/path.hpp"

namespace pdda {

// Inclusive natural-scale bounds on the regression abscissa.
struct FitRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    FitRange fit_range;
    int points_used = 0;
};

struct HurstEstimate {
    double h = 0.0;
    LogLogFit fit;
};

struct LocalSlopePoint {
    double tau = 0.0;
    double h = 0.0;
};

struct EstimatorReport {
    double h_rs = 0.0;
    double h_msd = 0.0;
    LogLogFit rs_fit;
    LogLogFit msd_fit;
    std::vector<LocalSlopePoint> local_curve;  // filled only when requested
    std::vector<std::string> warnings;         // e.g. an estimate outside (0,1)
};

// Grids and windows forwarded to the two estimators. Empty grids and
// zero ranges select the documented defaults for the series length.
struct EstimatorSettings {
    std::vector<int> window_grid;
    std::vector<int> lag_grid;
    FitRange rs_range;
    FitRange msd_range;
    bool weight_by_pairs = false;  // pair-count weighting of the MSD fit
    int local_smoothing = 5;       // moving-average window for the local slope
};

// [32, n/4]; the lower bound drops to 8 for short series so that at
// least three dyadic sizes remain. Small windows carry the strongest
// rescaled-range transients.
FitRange default_rs_range(int n);

// [4, min(n/10, 180)]. Lags beyond a few hundred add variance faster
// than signal: the path is pinned to zero at both ends, which bends
// the displacement curve downward as the lag approaches the series
// length.
FitRange default_msd_range(int n);

// Log-spaced lags, 12 per decade over [1, n/10]: the default
// measurement grid for the displacement estimators. Equal weight per
// scale; a dense integer grid would concentrate nearly all points at
// the largest, noisiest lags.
std::vector<int> default_lag_grid(int n);

// Ordinary least squares of ln(ordinate) on ln(abscissa) over the
// points inside `range` with strictly positive coordinates. Optional
// per-point weights (same length as the inputs, applied after
// filtering). Throws FitError when fewer than 3 points survive.
LogLogFit loglog_fit(std::span<const double> abscissa, std::span<const double> ordinate,
                     FitRange range, std::span<const double> weights = {});

// Route 1: slope of ln(mean diameter/dispersion ratio) vs ln window size.
HurstEstimate rs_pdda(const TimeSeries& x, const std::vector<int>& window_sizes, FitRange range);

// Route 2: half the slope of ln M2(tau) vs ln tau.
HurstEstimate msd_pdda(const TimeSeries& x, const std::vector<int>& lag_grid, FitRange range,
                       bool weight_by_pairs = false);

// The fit stage of Route 2, shared with msd_pdda so estimating from a
// series and fitting a precomputed profile are bitwise identical.
HurstEstimate msd_fit_from_profile(const DistanceProfile& profile, FitRange range,
                                   bool weight_by_pairs = false);

// Scale-dependent exponent: centered differences of ln m2 against
// ln tau (one-sided at the ends), halved, then smoothed with a centered
// moving average over `smoothing_window` grid points.
std::vector<LocalSlopePoint> local_hurst(const DistanceProfile& profile, int smoothing_window = 5);

// Runs both routes (and optionally the local curve) with defaults
// resolved from the series length.
EstimatorReport estimate(const TimeSeries& x, const EstimatorSettings& settings = {},
                         bool with_local_curve = false);

// Roughly geometrically spaced integer lags in [lo, hi], deduplicated.
std::vector<int> log_spaced_lags(int lo, int hi, int count);

} // namespace pdda
