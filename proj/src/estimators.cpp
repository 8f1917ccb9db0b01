#include "pdda/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "pdda/errors.hpp"

namespace pdda {

FitRange default_rs_range(int n) {
    return {n >= 512 ? 32.0 : 8.0, static_cast<double>(n / 4)};
}

FitRange default_msd_range(int n) {
    return {4.0, static_cast<double>(std::min(n / 10, 180))};
}

std::vector<int> default_lag_grid(int n) {
    const int hi = std::max(n / 10, 2);
    const int count = static_cast<int>(std::ceil(std::log10(static_cast<double>(hi)) * 12)) + 1;
    return log_spaced_lags(1, hi, std::max(count, 2));
}

LogLogFit loglog_fit(std::span<const double> abscissa, std::span<const double> ordinate,
                     FitRange range, std::span<const double> weights) {
    if (abscissa.size() != ordinate.size())
        throw ParameterError("fit: abscissa and ordinate lengths differ");
    if (!weights.empty() && weights.size() != abscissa.size())
        throw ParameterError("fit: weight vector length differs from the data");

    std::vector<double> lx, ly, w;
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
        const double a = abscissa[i];
        const double o = ordinate[i];
        if (a <= 0.0 || o <= 0.0) continue;
        if (a < range.lo || a > range.hi) continue;
        lx.push_back(std::log(a));
        ly.push_back(std::log(o));
        w.push_back(weights.empty() ? 1.0 : weights[i]);
    }
    const int used = static_cast<int>(lx.size());
    if (used < 3)
        throw FitError("fit: only " + std::to_string(used) +
                       " usable points inside [" + std::to_string(range.lo) + ", " +
                       std::to_string(range.hi) + "]; need at least 3");

    double wsum = 0.0, mx = 0.0, my = 0.0;
    for (int i = 0; i < used; ++i) {
        wsum += w[i];
        mx += w[i] * lx[i];
        my += w[i] * ly[i];
    }
    mx /= wsum;
    my /= wsum;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (int i = 0; i < used; ++i) {
        const double dx = lx[i] - mx;
        const double dy = ly[i] - my;
        sxx += w[i] * dx * dx;
        sxy += w[i] * dx * dy;
        syy += w[i] * dy * dy;
    }
    if (sxx <= 0.0)
        throw FitError("fit: degenerate abscissa (all points at one scale)");

    LogLogFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    // Constant ordinate: the flat line is an exact fit.
    fit.r_squared = syy > 0.0 ? std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0) : 1.0;
    fit.fit_range = range;
    fit.points_used = used;
    return fit;
}

HurstEstimate rs_pdda(const TimeSeries& x, const std::vector<int>& window_sizes, FitRange range) {
    const WindowGeometry geometry = window_geometry(x, window_sizes);

    std::vector<double> sizes(geometry.window_sizes.begin(), geometry.window_sizes.end());
    const LogLogFit fit = loglog_fit(sizes, geometry.ratios, range);
    return {fit.slope, fit};
}

HurstEstimate msd_fit_from_profile(const DistanceProfile& profile, FitRange range,
                                   bool weight_by_pairs) {
    std::vector<double> lags(profile.lags.begin(), profile.lags.end());
    std::vector<double> weights;
    if (weight_by_pairs)
        weights.assign(profile.pair_counts.begin(), profile.pair_counts.end());
    const LogLogFit fit = loglog_fit(lags, profile.m2, range, weights);
    return {fit.slope / 2.0, fit};
}

HurstEstimate msd_pdda(const TimeSeries& x, const std::vector<int>& lag_grid, FitRange range,
                       bool weight_by_pairs) {
    const CumulativePath path = cumulative_path(x);
    const DistanceProfile profile = distance_profile(path, lag_grid);
    return msd_fit_from_profile(profile, range, weight_by_pairs);
}

std::vector<LocalSlopePoint> local_hurst(const DistanceProfile& profile, int smoothing_window) {
    const int n = static_cast<int>(profile.lags.size());
    if (n < 5)
        throw ParameterError("local slope: need at least 5 lags, got " + std::to_string(n));
    if (smoothing_window < 1)
        throw ParameterError("local slope: smoothing window must be at least 1");

    std::vector<double> lt(n), lm(n);
    for (int i = 0; i < n; ++i) {
        if (profile.m2[i] <= 0.0)
            throw EstimationError("local slope: m2 must be positive at every lag");
        lt[i] = std::log(static_cast<double>(profile.lags[i]));
        lm[i] = std::log(profile.m2[i]);
    }

    std::vector<double> raw(n);
    raw[0] = 0.5 * (lm[1] - lm[0]) / (lt[1] - lt[0]);
    for (int i = 1; i + 1 < n; ++i)
        raw[i] = 0.5 * (lm[i + 1] - lm[i - 1]) / (lt[i + 1] - lt[i - 1]);
    raw[n - 1] = 0.5 * (lm[n - 1] - lm[n - 2]) / (lt[n - 1] - lt[n - 2]);

    const int half = smoothing_window / 2;
    std::vector<LocalSlopePoint> curve(n);
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - half);
        const int hi = std::min(n - 1, i + half);
        double acc = 0.0;
        for (int j = lo; j <= hi; ++j) acc += raw[j];
        curve[i] = {static_cast<double>(profile.lags[i]), acc / (hi - lo + 1)};
    }
    return curve;
}

EstimatorReport estimate(const TimeSeries& x, const EstimatorSettings& settings,
                         bool with_local_curve) {
    const int n = x.length();

    std::vector<int> windows =
        settings.window_grid.empty() ? default_window_grid(n) : settings.window_grid;
    std::vector<int> lags = settings.lag_grid.empty() ? default_lag_grid(n) : settings.lag_grid;
    const FitRange rs_range = (settings.rs_range.lo == 0.0 && settings.rs_range.hi == 0.0)
                                  ? default_rs_range(n)
                                  : settings.rs_range;
    const FitRange msd_range = (settings.msd_range.lo == 0.0 && settings.msd_range.hi == 0.0)
                                   ? default_msd_range(n)
                                   : settings.msd_range;

    const CumulativePath path = cumulative_path(x);
    const WindowGeometry geometry = window_geometry(x, windows);
    const DistanceProfile profile = distance_profile(path, lags);

    EstimatorReport report;
    {
        std::vector<double> sizes(geometry.window_sizes.begin(), geometry.window_sizes.end());
        report.rs_fit = loglog_fit(sizes, geometry.ratios, rs_range);
        report.h_rs = report.rs_fit.slope;
    }
    {
        const HurstEstimate msd = msd_fit_from_profile(profile, msd_range, settings.weight_by_pairs);
        report.msd_fit = msd.fit;
        report.h_msd = msd.h;
    }
    if (with_local_curve) report.local_curve = local_hurst(profile, settings.local_smoothing);

    // Estimates are reported unclamped; flag suspicious values instead.
    if (!(report.h_rs > 0.0 && report.h_rs < 1.0))
        report.warnings.push_back("h_rs outside (0,1); check the fit window");
    if (!(report.h_msd > 0.0 && report.h_msd < 1.0))
        report.warnings.push_back("h_msd outside (0,1); check the fit window");
    return report;
}

std::vector<int> log_spaced_lags(int lo, int hi, int count) {
    if (lo < 1 || hi < lo) throw ParameterError("lag grid: need 1 <= lo <= hi");
    if (count < 2) throw ParameterError("lag grid: need at least 2 points");
    std::vector<int> lags;
    const double ratio = std::log(static_cast<double>(hi) / lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
        const int lag = static_cast<int>(std::lround(lo * std::exp(ratio * i)));
        if (lags.empty() || lag > lags.back()) lags.push_back(lag);
    }
    return lags;
}

} // namespace pdda
