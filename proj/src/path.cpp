#include "pdda/path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdda/errors.hpp"

namespace pdda {

CumulativePath cumulative_path(const TimeSeries& x) {
    const int n = x.length();
    const int m = x.dimension();
    if (n < 2) throw ParameterError("path: need at least 2 samples");
    for (double v : x.values.raw())
        if (!std::isfinite(v)) throw DataError("path: non-finite sample in input series");

    CumulativePath path;
    path.z = Matrix(n, m);
    for (int c = 0; c < m; ++c) {
        const auto col = x.values.col(c);
        double mean = 0.0;
        for (double v : col) mean += v;
        mean /= n;
        double running = 0.0;
        auto out = path.z.col(c);
        for (int t = 0; t < n; ++t) {
            running += col[t] - mean;
            out[t] = running;
        }
    }
    return path;
}

std::vector<int> dense_lag_grid(int n, int cap) {
    if (cap <= 0) cap = n / 10;
    cap = std::min(cap, n - 1);
    std::vector<int> lags;
    for (int tau = 1; tau <= cap; ++tau) lags.push_back(tau);
    return lags;
}

std::vector<int> default_window_grid(int n) {
    std::vector<int> sizes;
    for (int w = 8; w <= n / 4; w *= 2) sizes.push_back(w);
    // The grid runs through n/4 itself, not just the last power of two
    // below it.
    if (!sizes.empty() && sizes.back() < n / 4) sizes.push_back(n / 4);
    return sizes;
}

DistanceProfile distance_profile(const CumulativePath& z, const std::vector<int>& lags) {
    const int n = z.length();
    const int m = z.dimension();
    if (lags.empty()) throw ParameterError("path: empty lag grid");
    for (std::size_t i = 0; i < lags.size(); ++i) {
        if (lags[i] < 1 || lags[i] >= n)
            throw ParameterError("path: lag " + std::to_string(lags[i]) +
                                 " outside [1, " + std::to_string(n - 1) + "]");
        if (i > 0 && lags[i] <= lags[i - 1])
            throw ParameterError("path: lag grid must be strictly increasing");
    }

    DistanceProfile profile;
    profile.lags = lags;
    profile.m2.resize(lags.size());
    profile.pair_counts.resize(lags.size());
    for (std::size_t i = 0; i < lags.size(); ++i) {
        const int tau = lags[i];
        double total = 0.0;
        for (int c = 0; c < m; ++c) {
            const double* col = z.z.col(c).data();
            double acc = 0.0;
            for (int t = 0; t + tau < n; ++t) {
                const double d = col[t + tau] - col[t];
                acc += d * d;
            }
            total += acc;
        }
        profile.pair_counts[i] = n - tau;
        profile.m2[i] = total / (n - tau);
    }
    return profile;
}

double segment_diameter(const Matrix& z, int start, int size) {
    const int n = static_cast<int>(z.rows());
    const int m = static_cast<int>(z.cols());
    if (size < 1 || start < 0 || start + size > n)
        throw ParameterError("path: segment outside the trajectory");

    if (m == 1) {
        const double* col = z.col(0).data() + start;
        double lo = col[0], hi = col[0];
        for (int t = 1; t < size; ++t) {
            lo = std::min(lo, col[t]);
            hi = std::max(hi, col[t]);
        }
        return hi - lo;
    }

    // Bounding-box extent is a free lower bound; the scan can only
    // raise it.
    double best_sq = 0.0;
    for (int c = 0; c < m; ++c) {
        const double* col = z.col(c).data() + start;
        double lo = col[0], hi = col[0];
        for (int t = 1; t < size; ++t) {
            lo = std::min(lo, col[t]);
            hi = std::max(hi, col[t]);
        }
        best_sq = std::max(best_sq, (hi - lo) * (hi - lo));
    }
    for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) {
            double d_sq = 0.0;
            for (int c = 0; c < m; ++c) {
                const double d = z(start + j, c) - z(start + i, c);
                d_sq += d * d;
            }
            best_sq = std::max(best_sq, d_sq);
        }
    }
    return std::sqrt(best_sq);
}

BlockGeometry block_geometry(const TimeSeries& x, int start, int size) {
    const int n = x.length();
    const int m = x.dimension();
    if (size < 2 || start < 0 || start + size > n)
        throw ParameterError("path: block outside the series");

    Matrix local(size, m);
    double trace = 0.0;
    for (int c = 0; c < m; ++c) {
        const double* col = x.values.col(c).data() + start;
        double mean = 0.0;
        for (int t = 0; t < size; ++t) mean += col[t];
        mean /= size;
        double running = 0.0, var = 0.0;
        double* out = local.col(c).data();
        for (int t = 0; t < size; ++t) {
            running += col[t] - mean;
            out[t] = running;
            var += (col[t] - mean) * (col[t] - mean);
        }
        trace += var / size;
    }
    return {segment_diameter(local, 0, size), std::sqrt(trace)};
}

WindowGeometry window_geometry(const TimeSeries& x, const std::vector<int>& window_sizes) {
    const int n = x.length();
    if (window_sizes.empty()) throw ParameterError("path: empty window grid");
    for (double v : x.values.raw())
        if (!std::isfinite(v)) throw DataError("path: non-finite sample in input series");

    WindowGeometry geometry;
    for (int size : window_sizes) {
        if (size < 2 || size > n)
            throw ParameterError("path: window size " + std::to_string(size) +
                                 " outside [2, " + std::to_string(n) + "]");
        const int blocks = n / size;
        double sum_diameter = 0.0, sum_dispersion = 0.0, sum_ratio = 0.0;
        int used = 0;
        for (int b = 0; b < blocks; ++b) {
            const BlockGeometry block = block_geometry(x, b * size, size);
            if (block.dispersion <= 0.0) continue;  // constant block
            sum_diameter += block.diameter;
            sum_dispersion += block.dispersion;
            sum_ratio += block.diameter / block.dispersion;
            ++used;
        }
        if (used == 0)
            throw EstimationError("path: every block of size " + std::to_string(size) +
                                  " is constant; no dispersion to rescale by");
        geometry.window_sizes.push_back(size);
        geometry.diameters.push_back(sum_diameter / used);
        geometry.dispersions.push_back(sum_dispersion / used);
        geometry.ratios.push_back(sum_ratio / used);
        geometry.blocks_used.push_back(used);
    }
    return geometry;
}

Matrix distance_matrix(const CumulativePath& z, int max_points) {
    const int n = z.length();
    const int m = z.dimension();
    if (n > max_points)
        throw SizeError("path: " + std::to_string(n) + " points exceed the dense-matrix guard of " +
                        std::to_string(max_points) + "; use distance_profile/window_geometry instead");

    Matrix dist(n, n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d_sq = 0.0;
            for (int c = 0; c < m; ++c) {
                const double d = z.z(j, c) - z.z(i, c);
                d_sq += d * d;
            }
            const double d = std::sqrt(d_sq);
            dist(i, j) = d;
            dist(j, i) = d;
        }
    }
    return dist;
}

} // namespace pdda
