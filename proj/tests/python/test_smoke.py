"""Smoke tests for the compiled pdda module."""

import math

import numpy as np
import pytest

import pdda


def make_spec(hurst, n, seed, rho=0.0, truncation=0):
    return pdda.ArfimaSpec(hurst=hurst, rho=rho, n=n, seed=seed, truncation=truncation)


def test_fractional_coefficients_closed_form():
    a = pdda.fractional_coefficients(0.25, 2)
    assert a == pytest.approx([1.0, 0.25, 0.15625], abs=1e-15)


def test_generation_shape_and_determinism():
    spec = make_spec([0.7, 0.3], 500, seed=11, rho=0.3, truncation=256)
    x = pdda.generate(spec)
    y = pdda.generate(spec)
    assert x.values.shape == (500, 2)
    assert np.array_equal(x.values, y.values)
    assert x.spec.truncation == 256

    spec.seed = 12
    z = pdda.generate(spec)
    assert not np.array_equal(x.values, z.values)


def test_cumulative_path_matches_numpy():
    spec = make_spec([0.5], 300, seed=4, truncation=64)
    x = pdda.generate(spec)
    path = pdda.cumulative_path(x)
    expected = np.cumsum(x.values - x.values.mean(axis=0), axis=0)
    assert np.allclose(path.z, expected, atol=1e-12)


def test_distance_profile_against_numpy():
    rng = np.random.default_rng(3)
    z = pdda.CumulativePath(rng.normal(size=(200, 2)))
    lags = [1, 2, 5, 10]
    profile = pdda.distance_profile(z, lags)
    zv = z.z
    for lag, m2 in zip(lags, profile.m2):
        diffs = zv[lag:] - zv[:-lag]
        assert m2 == pytest.approx((diffs**2).sum(axis=1).mean(), rel=1e-12)


def test_estimate_recovers_hurst():
    x = pdda.generate(make_spec([0.75], 20000, seed=3))
    report = pdda.estimate(x)
    assert report.h_rs == pytest.approx(0.75, abs=0.1)
    assert report.h_msd == pytest.approx(0.75, abs=0.1)
    assert report.h_msd == report.msd_fit.slope / 2


def test_local_hurst_power_law():
    lags = pdda.log_spaced_lags(1, 500, 30)
    profile = pdda.distance_profile(
        pdda.CumulativePath(np.arange(2000.0)), lags
    )
    curve = pdda.local_hurst(profile, 1)
    for pt in curve:
        assert pt.h == pytest.approx(1.0, abs=1e-9)


def test_recurrence_constant_path():
    z = pdda.CumulativePath(np.ones((50, 2)))
    curve = pdda.recurrence_probability(z, 0.1, [1, 5, 20])
    assert all(p == 1.0 for p in curve.p)


def test_range_dimension_and_decay_report():
    assert pdda.range_dimension(0.25, 2) == 2.0
    assert pdda.range_dimension(0.75, 2) == pytest.approx(4 / 3)

    x = pdda.generate(make_spec([0.25, 0.25], 6000, seed=21, rho=0.3))
    normalized = pdda.normalize_series(x)
    z = pdda.cumulative_path(normalized)
    curve = pdda.recurrence_probability(z, 0.2, pdda.dense_lag_grid(6000, 110))
    rep = pdda.decay_report(curve, 0.25, 2, pdda.FitRange(8, 55))
    assert rep.predicted_decay == pytest.approx(-0.5)
    assert rep.fitted_decay < -0.3


def test_run_sweep_aggregates():
    config = pdda.SweepConfig()
    config.h_points = [[0.4], [0.6]]
    config.n = 512
    config.replicates = 4
    config.master_seed = 5
    config.truncation = 256
    result = pdda.run_sweep(config)
    assert len(result.points) == 2
    for point in result.points:
        assert point.rs.replicates_used == 4
        assert point.rs.failures == 0
        r = point.rs.replicates_used
        assert point.rs.rmse**2 == pytest.approx(
            point.rs.bias**2 + point.rs.sd**2 * (r - 1) / r, abs=1e-9
        )


def test_split_seed_unique():
    seeds = {pdda.split_seed(1, p, r) for p in range(50) for r in range(50)}
    assert len(seeds) == 2500


def test_parameter_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        pdda.generate(make_spec([1.5], 100, seed=1))
    with pytest.raises(ValueError):
        pdda.fractional_coefficients(0.5, 3)
