#include "pdda/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "pdda/errors.hpp"
#include "pdda/path.hpp"
#include "pdda/rng.hpp"

namespace pdda {

void SweepConfig::validate() const {
    if (h_points.empty()) throw ParameterError("sweep: no Hurst points");
    const std::size_t m = h_points.front().size();
    for (const auto& point : h_points) {
        if (point.empty() || point.size() != m)
            throw ParameterError("sweep: every point must carry the same number of coordinates");
    }
    if (replicates < 1) throw ParameterError("sweep: replicates must be at least 1");
    if (threads < 0) throw ParameterError("sweep: threads must be non-negative");
    // Per-point generator invariants are checked where the spec is
    // materialized, replicate by replicate.
    for (const auto& point : h_points) {
        ArfimaSpec spec;
        spec.hurst = point;
        spec.innovation_correlation = innovation_correlation;
        spec.length = length;
        spec.truncation = truncation;
        spec.burn_in = burn_in;
        spec.resolved().validate();
    }
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t point, std::uint64_t replicate) {
    return mix64(mix64(master + 0x9E3779B97F4A7C15ULL * (point + 1)) +
                 0x9E3779B97F4A7C15ULL * (replicate + 1));
}

namespace {

struct ReplicateOutcome {
    std::optional<double> h_rs;
    std::optional<double> h_msd;
    std::string rs_error;
    std::string msd_error;
};

EstimatorStats aggregate(const std::vector<std::optional<double>>& estimates, double reference) {
    EstimatorStats stats;
    stats.reference_h = reference;
    for (const auto& e : estimates) {
        if (e) stats.estimates.push_back(*e);
        else ++stats.failures;
    }
    stats.replicates_used = static_cast<int>(stats.estimates.size());
    if (stats.replicates_used == 0) return stats;

    double sum = 0.0;
    for (double h : stats.estimates) sum += h;
    stats.mean_h = sum / stats.replicates_used;
    stats.bias = stats.mean_h - reference;

    double ss = 0.0, mse = 0.0;
    for (double h : stats.estimates) {
        ss += (h - stats.mean_h) * (h - stats.mean_h);
        mse += (h - reference) * (h - reference);
    }
    stats.sd = stats.replicates_used > 1 ? std::sqrt(ss / (stats.replicates_used - 1)) : 0.0;
    stats.rmse = std::sqrt(mse / stats.replicates_used);
    return stats;
}

} // namespace

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();

    const int points = static_cast<int>(config.h_points.size());
    const int reps = config.replicates;
    std::vector<ReplicateOutcome> outcomes(static_cast<std::size_t>(points) * reps);

    auto run_one = [&](int point, int rep) {
        ArfimaSpec spec;
        spec.hurst = config.h_points[point];
        spec.innovation_correlation = config.innovation_correlation;
        spec.length = config.length;
        spec.truncation = config.truncation;
        spec.burn_in = config.burn_in;
        spec.seed = split_seed(config.master_seed, point, rep);

        ReplicateOutcome& out = outcomes[static_cast<std::size_t>(point) * reps + rep];
        TimeSeries x;
        try {
            x = generate(spec);
        } catch (const std::exception& e) {
            out.rs_error = e.what();
            out.msd_error = e.what();
            return;
        }

        const int n = x.length();
        const EstimatorSettings& s = config.settings;
        const auto windows = s.window_grid.empty() ? default_window_grid(n) : s.window_grid;
        const auto lags = s.lag_grid.empty() ? default_lag_grid(n) : s.lag_grid;
        const FitRange rs_range =
            (s.rs_range.lo == 0.0 && s.rs_range.hi == 0.0) ? default_rs_range(n) : s.rs_range;
        const FitRange msd_range =
            (s.msd_range.lo == 0.0 && s.msd_range.hi == 0.0) ? default_msd_range(n) : s.msd_range;

        try {
            out.h_rs = rs_pdda(x, windows, rs_range).h;
        } catch (const std::exception& e) {
            out.rs_error = e.what();
        }
        try {
            out.h_msd = msd_pdda(x, lags, msd_range, s.weight_by_pairs).h;
        } catch (const std::exception& e) {
            out.msd_error = e.what();
        }
    };

    int workers = config.threads;
    if (workers == 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, points * reps));

    if (workers == 1) {
        for (int p = 0; p < points; ++p)
            for (int r = 0; r < reps; ++r) run_one(p, r);
    } else {
        std::atomic<int> next{0};
        const int total = points * reps;
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1))
                run_one(i / reps, i % reps);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SweepResult result;
    result.config = config;
    for (int p = 0; p < points; ++p) {
        SweepPointResult point;
        point.hurst = config.h_points[p];
        const double reference = *std::max_element(point.hurst.begin(), point.hurst.end());

        std::vector<std::optional<double>> rs(reps), msd(reps);
        for (int r = 0; r < reps; ++r) {
            const ReplicateOutcome& out = outcomes[static_cast<std::size_t>(p) * reps + r];
            rs[r] = out.h_rs;
            msd[r] = out.h_msd;
            if (!out.rs_error.empty())
                point.failure_messages.push_back("replicate " + std::to_string(r) +
                                                 " rs: " + out.rs_error);
            if (!out.msd_error.empty())
                point.failure_messages.push_back("replicate " + std::to_string(r) +
                                                 " msd: " + out.msd_error);
        }
        point.rs = aggregate(rs, reference);
        point.msd = aggregate(msd, reference);
        result.points.push_back(std::move(point));
    }
    return result;
}

} // namespace pdda
