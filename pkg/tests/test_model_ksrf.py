import logging
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lattice_pricer.coefficients import CoefficientCurve
from lattice_pricer.errors import DomainError, ParameterRegimeError
from lattice_pricer.lattice import TimeGrid, recombination_residual
from lattice_pricer.models import (
    KSRFModel,
    crr_hedge_ratio,
    ksrf_factors,
    ksrf_hedge_ratio,
    ksrf_risk_neutral_moments,
    ksrf_risk_neutral_prob,
    ksrf_step,
)
from lattice_pricer.verification import shrink_ratios

from conftest import make_market


@pytest.mark.parametrize(
    "p, up, down",
    [
        (0.5, 1.021, 0.981),
        (0.52, 1.0202154, 0.9801833),
    ],
)
def test_ksrf_factors(p, up, down):
    u, d = ksrf_factors(0.1, 0.2, p, 0.01)
    assert u == pytest.approx(up, rel=1e-7)
    assert d == pytest.approx(down, rel=1e-7)


@given(
    p=st.floats(min_value=0.05, max_value=0.95),
    mu=st.floats(min_value=-0.2, max_value=0.3),
)
def test_ksrf_factors_match_the_drift_exactly(p, mu):
    dt = 0.01
    up, down = ksrf_factors(mu, 0.2, p, dt)
    assert down < 1.0 + mu * dt < up
    assert p * up + (1.0 - p) * down == pytest.approx(1.0 + mu * dt, abs=1e-14)


def test_ksrf_factors_reject_non_positive_down():
    with pytest.raises(ParameterRegimeError, match="reduce dt"):
        ksrf_factors(0.1, 0.5, 0.999, 1.0)


@pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.2])
def test_ksrf_factors_reject_p_outside_unit_interval(p):
    with pytest.raises(DomainError):
        ksrf_factors(0.1, 0.2, p, 0.01)


@pytest.mark.parametrize(
    "p, theta, dt, expected",
    [
        (0.52, 0.25, 0.01, 0.5075100),
        (0.37, 0.0, 0.01, 0.37),
        (0.5, 0.25, 0.01, 0.4875),
    ],
)
def test_ksrf_risk_neutral_prob(p, theta, dt, expected):
    assert ksrf_risk_neutral_prob(p, theta, dt) == pytest.approx(expected, abs=1e-7)


def test_ksrf_hedge_ratio_at_half_equals_crr():
    ksrf = ksrf_hedge_ratio(3.0, 1.0, 100.0, 0.2, 0.5, 0.01)
    assert ksrf == pytest.approx(crr_hedge_ratio(3.0, 1.0, 100.0, 0.2, 0.01), rel=1e-14)


def test_ksrf_hedge_ratio_examples():
    assert ksrf_hedge_ratio(1.0, 0.0, 100.0, 0.2, 0.52, 0.01) == pytest.approx(0.2498, abs=1e-6)
    assert ksrf_hedge_ratio(4.0, 4.0, 100.0, 0.2, 0.52, 0.01) == 0.0


def test_ksrf_step_composition(standard_market):
    step = ksrf_step(standard_market, CoefficientCurve.constant(0.52), 0.5, 0.01)
    assert step.u_factor == pytest.approx(1.0202154, rel=1e-7)
    assert step.d_factor == pytest.approx(0.9801833, rel=1e-7)
    assert step.theta == pytest.approx(0.25, rel=1e-12)
    assert step.q_star == pytest.approx(0.5075100, abs=1e-7)
    assert step.spec("natural").probabilities == (1.0 - 0.52, 0.52)
    assert step.spec().probabilities == (1.0 - step.q_star, step.q_star)


def test_ksrf_step_symmetric_when_mu_equals_r():
    step = ksrf_step(make_market(mu=0.05, rate=0.05), CoefficientCurve.constant(0.5), 0.2, 0.01)
    assert step.q_star == 0.5
    assert step.u_factor - 1.0005 == pytest.approx(1.0005 - step.d_factor, abs=1e-15)


def test_ksrf_step_reads_p_curve_at_step_end(standard_market):
    step = ksrf_step(standard_market, CoefficientCurve.linear(0.4, 0.2), 0.5, 0.01)
    assert step.p_natural == pytest.approx(0.5, abs=1e-15)
    assert step.u_factor == pytest.approx(1.021, rel=1e-12)


def test_lopsided_p_warns_once_per_model(standard_market, caplog):
    model = KSRFModel(standard_market, CoefficientCurve.constant(0.02))
    with caplog.at_level(logging.WARNING):
        model.steps(TimeGrid(1.0, 50))
        model.steps(TimeGrid(1.0, 100))
    skewed = [r for r in caplog.records if "skewed" in r.getMessage()]
    assert len(skewed) == 1
    assert skewed[0].levelno == logging.WARNING


def test_ksrf_step_logs_lopsided_p_at_debug(standard_market, caplog):
    with caplog.at_level(logging.DEBUG, logger="lattice_pricer.models.ksrf"):
        ksrf_step(standard_market, CoefficientCurve.constant(0.02), 0.5, 0.01)
    assert [r.levelno for r in caplog.records if "skewed" in r.getMessage()] == [logging.DEBUG]


@pytest.mark.parametrize("p", [0.2, 0.5, 0.8])
@pytest.mark.parametrize("zeta", [0.5, 2.0, 3.0, 4.0])
def test_all_moments_residual_shrinks(p, zeta):
    mu, sigma = 0.06, 0.2  # the p = 0.8 first-decade ratio falls to about 23 at mu = 0.1
    residuals = []
    for dt in (1e-2, 1e-3, 1e-4):
        up, down = ksrf_factors(mu, sigma, p, dt)
        moment = p * up**zeta + (1.0 - p) * down**zeta
        residuals.append(abs(moment - (1.0 + zeta * (mu + 0.5 * (zeta - 1.0) * sigma**2) * dt)))
    assert all(ratio >= 25 for ratio in shrink_ratios(residuals))


@pytest.mark.parametrize("p", [0.2, 0.5, 0.8])
@pytest.mark.parametrize("dt", [1e-2, 1e-3, 1e-4])
def test_second_moment_is_exact_up_to_squared_drift(p, dt):
    mu, sigma = 0.06, 0.2
    up, down = ksrf_factors(mu, sigma, p, dt)
    moment = p * up**2 + (1.0 - p) * down**2
    assert moment == pytest.approx((1.0 + mu * dt) ** 2 + sigma**2 * dt, rel=1e-14)


@pytest.mark.parametrize("p", [0.2, 0.5, 0.8])
@pytest.mark.parametrize("dt", [1e-2, 1e-4])
def test_risk_neutral_mean_is_one_plus_r_dt(standard_market, p, dt):
    step = ksrf_step(standard_market, CoefficientCurve.constant(p), 0.5, dt)
    mean, variance = ksrf_risk_neutral_moments(step)
    assert mean == pytest.approx(1.0 + 0.05 * dt, abs=1e-14)

    theta = step.theta
    ratio = 1.0 - (1.0 - 2.0 * p) * theta * math.sqrt(dt) / math.sqrt(p * (1.0 - p)) - theta**2 * dt
    assert variance / (0.04 * dt) == pytest.approx(ratio, rel=1e-10)


def test_risk_neutral_prob_is_continuous_in_p():
    theta, dt = 0.25, 0.01
    grid = np.linspace(1e-3, 1.0 - 1e-4, 2001)
    q_star = np.array([ksrf_risk_neutral_prob(p, theta, dt) for p in grid])
    step = grid[1] - grid[0]

    assert np.all(np.diff(q_star) > 0)
    assert np.max(np.diff(q_star)) <= 3.0 * step
    assert q_star[0] <= 1e-2
    assert q_star[-1] >= 0.99
    assert np.max(np.abs(q_star - grid)) <= theta * math.sqrt(dt) / 2.0

    with pytest.raises(ParameterRegimeError):
        ksrf_risk_neutral_prob(1e-4, theta, dt)


class TestKSRFModel:
    def test_default_p_is_one_half(self, standard_market):
        model = KSRFModel(standard_market)
        step = model.steps(TimeGrid(1.0, 100), world="natural")[0]
        assert step.probabilities == (0.5, 0.5)
        assert step.up == pytest.approx(1.021, rel=1e-12)

    def test_p_curve_must_cover_maturity(self, standard_market):
        p_curve = CoefficientCurve.piecewise([(0.0, 0.5), (0.5, 0.6)])
        with pytest.raises(DomainError, match="p curve"):
            KSRFModel(standard_market, p_curve).steps(TimeGrid(1.0, 10))

    def test_hedge_ratio_reads_p_at_step_end(self, standard_market):
        model = KSRFModel(standard_market, CoefficientCurve.linear(0.4, 0.2))
        step = model.steps(TimeGrid(1.0, 100))[49]
        expected = ksrf_hedge_ratio(1.0, 0.0, 100.0, 0.2, 0.5, 0.01)
        assert model.hedge_ratio(1.0, 0.0, 100.0, step) == pytest.approx(expected, rel=1e-12)


def test_recombination_residual_follows_p(standard_market):
    grid = TimeGrid(1.0, 100)
    constant = KSRFModel(standard_market, CoefficientCurve.constant(0.52)).steps(grid)
    varying = KSRFModel(standard_market, CoefficientCurve.linear(0.4, 0.2)).steps(grid)
    assert recombination_residual(constant, grid) == 0.0
    assert 0.0 < recombination_residual(varying, grid) < 1e-3
