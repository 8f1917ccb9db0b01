#pragma once

#include <vector>

#include "pdda/arfima.hpp"
#include "pdda/matrix.hpp"

namespace pdda {

// Cumulative deviate trajectory: per-coordinate running sum of the
// mean-centered samples. The final row telescopes to ~0.
struct CumulativePath {
    Matrix z;  // length x dimension

    int length() const { return static_cast<int>(z.rows()); }
    int dimension() const { return static_cast<int>(z.cols()); }
};

// Mean squared Euclidean increment norm per lag, with the number of
// start points contributing at each lag.
struct DistanceProfile {
    std::vector<int> lags;
    std::vector<double> m2;
    std::vector<int> pair_counts;  // length - lag
};

// Block-averaged window diameter and increment dispersion per window
// size, plus the averaged diameter/dispersion ratio the rescaled-range
// estimator fits.
struct WindowGeometry {
    std::vector<int> window_sizes;
    std::vector<double> diameters;    // mean diameter over blocks
    std::vector<double> dispersions;  // mean dispersion over blocks
    std::vector<double> ratios;       // mean diameter/dispersion over blocks
    std::vector<int> blocks_used;     // blocks with nonzero dispersion
};

struct BlockGeometry {
    double diameter;    // max pairwise distance among the block's path points
    double dispersion;  // sqrt of the covariance trace of the block's raw samples
};

CumulativePath cumulative_path(const TimeSeries& x);

// Every integer lag in [1, cap]; cap defaults to n/10.
std::vector<int> dense_lag_grid(int n, int cap = 0);

// Window sizes 8, 16, 32, ..., ending at n/4 (the endpoint is kept
// even when it is not a power of two).
std::vector<int> default_window_grid(int n);

// Streaming per-lag scan; never materializes the pair matrix.
DistanceProfile distance_profile(const CumulativePath& z, const std::vector<int>& lags);

// Max pairwise Euclidean distance among path rows [start, start+size).
// Univariate shortcut: max - min. Multivariate: exact pairwise scan
// seeded with the bounding-box extent.
double segment_diameter(const Matrix& z, int start, int size);

// Rescaled-range building block for one window: the window's samples
// are re-centered on their own mean and accumulated into a local path
// whose diameter is taken; the dispersion is the square root of the
// covariance trace of the window's raw samples (denominator = window
// length). In one dimension this is the classical R/S pair for the
// window.
BlockGeometry block_geometry(const TimeSeries& x, int start, int size);

// Averages block_geometry over the floor(N/n) disjoint blocks of each
// window size. Blocks with zero dispersion are skipped; a size where
// every block is constant raises EstimationError.
WindowGeometry window_geometry(const TimeSeries& x, const std::vector<int>& window_sizes);

// Full symmetric pair-distance matrix, for plots and oracle tests.
// Guarded: N=32768 would need ~8 GB dense.
Matrix distance_matrix(const CumulativePath& z, int max_points = 5000);

} // namespace pdda
