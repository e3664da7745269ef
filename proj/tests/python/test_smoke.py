"""Smoke tests for the python bindings against known values."""

import math

import pytest

try:
    import rejodds
except ImportError:
    import _rejodds as rejodds


def test_normal_kernel():
    assert rejodds.std_normal_cdf(0.0) == 0.5
    assert abs(rejodds.std_normal_cdf(1.96) - 0.9750021) < 1e-7
    assert abs(rejodds.std_normal_quantile(0.975) - 1.959964) < 1e-6


def test_bf_bound():
    assert abs(rejodds.bf_bound(0.05) - 2.456) < 5e-4
    assert abs(rejodds.bf_bound(0.001) - 53.256) < 5e-3
    assert rejodds.bf_bound(0.5) is None
    with pytest.raises(ValueError):
        rejodds.bf_bound(0.0)


def test_power_and_ratio():
    m = rejodds.TestModel(family="two-sample-z", sides="one", n1=280, n2=280)
    pr = rejodds.compute_power(m, "point:0.21", 0.05)
    assert abs(pr.avg_power - 0.7995) < 1e-3
    assert rejodds.rejection_ratio(pr.avg_power, 0.05) == pr.avg_power / 0.05
    report = rejodds.design_report(m, "point:0.21", 0.05, prior_odds=1.0)
    assert report.o_pre == report.r_pre


def test_solvers():
    assert abs(rejodds.solve_alpha(1e-5, 0.5, 10.0) - 5e-7) < 1e-18
    m = rejodds.TestModel(family="two-sample-z", sides="one")
    assert rejodds.solve_sample_size(m, "point:0.21", 0.05, 8.7) == 100


def test_bayes_factors():
    m = rejodds.TestModel()
    assert abs(rejodds.bayes_factor(m, 2.06, "uniform:0:2.95") - 5.6278) < 1e-3
    eb = rejodds.empirical_bayes_all(m, 2.06)
    assert abs(eb.value - math.exp(2.06**2 / 2)) < 1e-9
    noninc = rejodds.empirical_bayes_nonincreasing(m, 2.06)
    assert abs(noninc.argmax - 2.9478) < 5e-3
    assert rejodds.intrinsic_prior(m) == (0.0, pytest.approx(math.sqrt(2.0)))


def test_result2_identity():
    m = rejodds.TestModel()
    e_bf = rejodds.expected_bf_under_null(m, "uniform:0:2.95", 0.05)
    pr = rejodds.compute_power(m, "uniform:0:2.95", 0.05)
    assert abs(e_bf - pr.avg_power / 0.05) < 1e-6 * e_bf
    mc = rejodds.mc_check_result2(m, "point:1", 0.05, runs=50_000, seed=3)
    assert abs(mc.z_score) < 4.0


def test_stopping_sim_is_deterministic():
    kwargs = dict(batches=[0.25, 0.25], threshold=0.05, sides="two", runs=20_000, seed=5)
    a = rejodds.simulate_sequential(**kwargs)
    b = rejodds.simulate_sequential(**kwargs)
    assert a.cumulative_stop_prob == b.cumulative_stop_prob
    assert a.per_stage_stop_prob == b.per_stage_stop_prob
    assert 0.0 < a.cumulative_stop_prob < 1.0
    stopped, fixed = rejodds.bf_stopped_vs_fixed(1.2, 1.5, "uniform:0:2", stopping_factor=0.37)
    assert stopped == pytest.approx(fixed, rel=1e-13)
