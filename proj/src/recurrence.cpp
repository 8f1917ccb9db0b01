#include "pdda/recurrence.hpp"

#include <cmath>
#include <string>

#include "pdda/errors.hpp"

namespace pdda {

Matrix normalize_unit_variance(const Matrix& values) {
    const int n = static_cast<int>(values.rows());
    const int m = static_cast<int>(values.cols());
    if (n < 2) throw ParameterError("recurrence: need at least 2 rows to normalize");

    Matrix out(n, m);
    for (int c = 0; c < m; ++c) {
        const auto col = values.col(c);
        double mean = 0.0;
        for (double v : col) mean += v;
        mean /= n;
        double var = 0.0;
        for (double v : col) var += (v - mean) * (v - mean);
        var /= (n - 1);
        if (var <= 0.0)
            throw DataError("recurrence: column " + std::to_string(c + 1) +
                            " is constant; cannot normalize to unit variance");
        const double inv_sd = 1.0 / std::sqrt(var);
        auto dst = out.col(c);
        for (int t = 0; t < n; ++t) dst[t] = col[t] * inv_sd;
    }
    return out;
}

TimeSeries normalize_unit_variance(const TimeSeries& x) {
    TimeSeries out;
    out.values = normalize_unit_variance(x.values);
    out.spec = x.spec;
    return out;
}

RecurrenceCurve recurrence_probability(const CumulativePath& z, double epsilon,
                                       const std::vector<int>& lags) {
    const int n = z.length();
    const int m = z.dimension();
    if (!(epsilon > 0.0)) throw ParameterError("recurrence: epsilon must be positive");
    if (lags.empty()) throw ParameterError("recurrence: empty lag grid");
    for (std::size_t i = 0; i < lags.size(); ++i) {
        if (lags[i] < 1 || lags[i] >= n)
            throw ParameterError("recurrence: lag " + std::to_string(lags[i]) +
                                 " outside [1, " + std::to_string(n - 1) + "]");
        if (i > 0 && lags[i] <= lags[i - 1])
            throw ParameterError("recurrence: lag grid must be strictly increasing");
    }

    const double eps_sq = epsilon * epsilon;
    RecurrenceCurve curve;
    curve.epsilon = epsilon;
    curve.lags = lags;
    curve.p.resize(lags.size());
    curve.recurrent.resize(lags.size());
    curve.total.resize(lags.size());
    for (std::size_t i = 0; i < lags.size(); ++i) {
        const int tau = lags[i];
        std::int64_t count = 0;
        for (int t = 0; t + tau < n; ++t) {
            double d_sq = 0.0;
            for (int c = 0; c < m; ++c) {
                const double d = z.z(t + tau, c) - z.z(t, c);
                d_sq += d * d;
            }
            if (d_sq <= eps_sq) ++count;  // closed threshold
        }
        curve.recurrent[i] = count;
        curve.total[i] = n - tau;
        curve.p[i] = static_cast<double>(count) / (n - tau);
    }
    return curve;
}

double range_dimension(double h_max, int m) {
    if (!(h_max > 0.0 && h_max < 1.0))
        throw ParameterError("recurrence: h_max must lie in (0,1)");
    if (m < 1) throw ParameterError("recurrence: dimension must be at least 1");
    return std::min(static_cast<double>(m), 1.0 / h_max);
}

RangeDimensionReport decay_report(const RecurrenceCurve& curve, double h_max, int m,
                                  FitRange fit_range) {
    RangeDimensionReport report;
    report.h_max = h_max;
    report.dimension = m;
    report.d_range_theoretical = range_dimension(h_max, m);
    report.predicted_decay = -h_max * report.d_range_theoretical;

    std::vector<double> lags, p;
    for (std::size_t i = 0; i < curve.lags.size(); ++i) {
        if (curve.lags[i] < fit_range.lo || curve.lags[i] > fit_range.hi) continue;
        if (curve.p[i] <= 0.0) {
            ++report.zero_lags_excluded;  // log of zero is undefined; do not impute
            continue;
        }
        lags.push_back(curve.lags[i]);
        p.push_back(curve.p[i]);
    }
    if (lags.size() < 3)
        throw FitError("recurrence: only " + std::to_string(lags.size()) +
                       " lags with nonzero recurrence probability inside the fit range; "
                       "increase epsilon or widen the range");
    report.fit = loglog_fit(lags, p, fit_range);
    report.fitted_decay = report.fit.slope;
    return report;
}

} // namespace pdda
