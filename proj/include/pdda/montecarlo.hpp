#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdda/arfima.hpp"
#include "pdda/estimators.hpp"

namespace pdda {

// One sweep point is a full Hurst vector (one entry per coordinate);
// the reference exponent for bias/RMSE is its maximum.
struct SweepConfig {
    std::vector<std::vector<double>> h_points;
    double innovation_correlation = 0.0;
    int length = 0;          // N per replicate
    int replicates = 1;      // R per point
    std::uint64_t master_seed = 0;
    int truncation = 0;      // forwarded; 0 = module default
    int burn_in = 0;
    EstimatorSettings settings;
    int threads = 1;         // 0 = hardware concurrency

    void validate() const;
};

// Aggregates for one estimator at one sweep point. SD uses the sample
// convention (R-1); RMSE is the direct root mean squared error, so
// rmse^2 = bias^2 + sd^2 (R-1)/R.
struct EstimatorStats {
    double reference_h = 0.0;
    double mean_h = 0.0;
    double bias = 0.0;
    double sd = 0.0;
    double rmse = 0.0;
    int replicates_used = 0;
    int failures = 0;
    std::vector<double> estimates;  // successful replicates, in index order
};

struct SweepPointResult {
    std::vector<double> hurst;
    EstimatorStats rs;
    EstimatorStats msd;
    std::vector<std::string> failure_messages;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepPointResult> points;
};

// Deterministic per-replicate seed: two rounds of the SplitMix64
// finalizer absorbing the point and replicate indices. Collision-free
// over any practical sweep grid (verified exhaustively in tests).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t point, std::uint64_t replicate);

// Runs R replicates per point (optionally across threads), applies
// both estimators to each generated series, and aggregates in
// replicate-index order so results are independent of scheduling.
// A replicate whose estimator throws is excluded from that
// estimator's aggregates and counted as a failure.
SweepResult run_sweep(const SweepConfig& config);

} // namespace pdda
