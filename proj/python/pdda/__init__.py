"""Distance-plot Hurst exponent analysis.

Thin wrapper over the compiled _pdda extension: ARFIMA(0,d,0)
generation, the two distance-based Hurst estimators, local
scale-dependent exponents, recurrence-probability decay, and the
Monte Carlo sweep harness.
"""

from ._pdda import (
    ArfimaSpec,
    CumulativePath,
    DistanceProfile,
    EstimatorReport,
    EstimatorSettings,
    EstimatorStats,
    FitRange,
    HurstEstimate,
    LocalSlopePoint,
    LogLogFit,
    RangeDimensionReport,
    RecurrenceCurve,
    SweepConfig,
    SweepPointResult,
    SweepResult,
    TimeSeries,
    WindowGeometry,
    block_geometry,
    cumulative_path,
    decay_report,
    default_lag_grid,
    default_msd_range,
    default_rs_range,
    default_window_grid,
    dense_lag_grid,
    distance_matrix,
    distance_profile,
    estimate,
    fractional_coefficients,
    generate,
    innovation_factor,
    local_hurst,
    log_spaced_lags,
    loglog_fit,
    msd_fit_from_profile,
    msd_pdda,
    normalize_series,
    normalize_unit_variance,
    range_dimension,
    recurrence_probability,
    rs_pdda,
    run_sweep,
    segment_diameter,
    split_seed,
    window_geometry,
)

__all__ = [
    "ArfimaSpec",
    "CumulativePath",
    "DistanceProfile",
    "EstimatorReport",
    "EstimatorSettings",
    "EstimatorStats",
    "FitRange",
    "HurstEstimate",
    "LocalSlopePoint",
    "LogLogFit",
    "RangeDimensionReport",
    "RecurrenceCurve",
    "SweepConfig",
    "SweepPointResult",
    "SweepResult",
    "TimeSeries",
    "WindowGeometry",
    "block_geometry",
    "cumulative_path",
    "decay_report",
    "default_lag_grid",
    "default_msd_range",
    "default_rs_range",
    "default_window_grid",
    "dense_lag_grid",
    "distance_matrix",
    "distance_profile",
    "estimate",
    "fractional_coefficients",
    "generate",
    "innovation_factor",
    "local_hurst",
    "log_spaced_lags",
    "loglog_fit",
    "msd_fit_from_profile",
    "msd_pdda",
    "normalize_series",
    "normalize_unit_variance",
    "range_dimension",
    "recurrence_probability",
    "rs_pdda",
    "run_sweep",
    "segment_diameter",
    "split_seed",
    "window_geometry",
]

__version__ = "0.1.0"
