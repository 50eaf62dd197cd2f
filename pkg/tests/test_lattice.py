import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lattice_pricer.coefficients import CoefficientCurve
from lattice_pricer.errors import DomainError, ParameterRegimeError, ShapeError
from lattice_pricer.lattice import (
    UPS_FIRST,
    StepSpec,
    TimeGrid,
    build_binomial,
    build_lattice,
    build_trinomial,
    recombination_residual,
)
from lattice_pricer.models import CRRModel, new_trinomial_natural_step
from lattice_pricer.verification import forward_probabilities

from conftest import make_market


def crr_spec(sigma=0.2, dt=0.01, q=0.5):
    up = math.exp(sigma * math.sqrt(dt))
    return StepSpec.binomial(1.0 / up, up, q, dt=dt)


class TestTimeGrid:
    def test_dt_and_levels(self):
        grid = TimeGrid(1.0, 4)
        assert grid.dt == 0.25
        assert grid.time(4) == 1.0
        assert grid.step_end(0) == 0.25
        assert list(grid.times()) == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_last_level_is_maturity(self):
        assert TimeGrid(0.1, 3).time(3) == 0.1

    @pytest.mark.parametrize("maturity, steps", [(0.0, 10), (-1.0, 10), (1.0, 0), (1.0, 2.5), (math.inf, 3)])
    def test_rejects_bad_grid(self, maturity, steps):
        with pytest.raises(DomainError):
            TimeGrid(maturity, steps)


class TestStepSpec:
    def test_binomial_accessors(self):
        step = StepSpec.binomial(0.9, 1.1, 0.6)
        assert step.probabilities == pytest.approx((0.4, 0.6))
        assert (step.down, step.up, step.prob_up) == (0.9, 1.1, 0.6)
        assert step.mean_factor() == pytest.approx(1.02)
        with pytest.raises(ShapeError):
            step.mid

    @pytest.mark.parametrize(
        "factors, probabilities, error",
        [
            ((0.9,), (1.0,), ShapeError),
            ((0.9, 1.1), (0.5, 0.3, 0.2), ShapeError),
            ((1.1, 0.9), (0.5, 0.5), ShapeError),
            ((-0.1, 1.1), (0.5, 0.5), ParameterRegimeError),
            ((0.9, 1.1), (0.0, 1.0), ParameterRegimeError),
            ((0.9, 1.1), (0.5, 0.5 + 1e-9), ParameterRegimeError),
        ],
    )
    def test_invalid(self, factors, probabilities, error):
        with pytest.raises(error):
            StepSpec(factors, probabilities)


class TestBuildBinomial:
    def test_one_step(self):
        grid = TimeGrid(0.01, 1)
        lattice = build_binomial(100.0, grid, [StepSpec.binomial(0.980199, 1.020201, 0.5)])
        assert lattice.level(0)[0] == 100.0
        assert lattice.level(1) == pytest.approx([98.0199, 102.0201], rel=1e-12)

    def test_identity_factors(self):
        grid = TimeGrid(1.0, 5)
        lattice = build_binomial(100.0, grid, [StepSpec.binomial(1.0, 1.0, 0.5)] * 5)
        for level in lattice.levels():
            assert np.all(level == 100.0)

    def test_constant_crr_middle_node(self):
        lattice = build_binomial(100.0, TimeGrid(0.02, 2), [crr_spec()] * 2)
        assert lattice.level(2)[1] == pytest.approx(100.0, rel=1e-14)

    def test_level_sizes(self):
        lattice = build_binomial(100.0, TimeGrid(0.05, 5), [crr_spec()] * 5)
        assert [len(level) for level in lattice.levels()] == [1, 2, 3, 4, 5, 6]
        assert list(lattice.indices(3)) == [0, 1, 2, 3]

    def test_rejects_trinomial_steps(self):
        step = new_trinomial_natural_step(0.1, 0.2, 0.01).spec()
        with pytest.raises(ShapeError):
            build_binomial(100.0, TimeGrid(0.01, 1), [step])

    def test_rejects_wrong_step_count(self):
        with pytest.raises(ShapeError):
            build_binomial(100.0, TimeGrid(0.02, 2), [crr_spec()])

    def test_rejects_non_positive_spot(self):
        with pytest.raises(DomainError):
            build_binomial(0.0, TimeGrid(0.01, 1), [crr_spec()])

    def test_ups_first_convention_is_literal_path_value(self, time_dependent_market):
        grid = TimeGrid(1.0, 4)
        steps = CRRModel(time_dependent_market).steps(grid)
        lattice = build_binomial(100.0, grid, steps, convention=UPS_FIRST)
        ups = [s.up for s in steps]
        downs = [s.down for s in steps]
        expected = [100.0 * math.prod(ups[:j]) * math.prod(downs[j:]) for j in range(5)]
        assert lattice.level(4) == pytest.approx(expected, rel=1e-14)
        assert lattice.is_path_product

    def test_conventions_agree_for_constant_factors(self):
        grid = TimeGrid(0.05, 5)
        steps = [crr_spec(q=0.52)] * 5
        matched = build_binomial(100.0, grid, steps)
        literal = build_binomial(100.0, grid, steps, convention=UPS_FIRST)
        assert matched.is_path_product
        for n in range(6):
            assert np.array_equal(matched.level(n), literal.level(n))

    def test_unknown_convention(self):
        with pytest.raises(DomainError):
            build_binomial(100.0, TimeGrid(0.01, 1), [crr_spec()], convention="downs-first")


class TestMomentMatchedConvention:
    def test_level_means_follow_path_products(self, time_dependent_market):
        grid = TimeGrid(1.0, 40)
        steps = CRRModel(time_dependent_market).steps(grid)
        lattice = build_binomial(100.0, grid, steps)
        assert not lattice.is_path_product
        weights = np.ones(1)
        for n, step in enumerate(steps, start=1):
            weights = np.concatenate((weights * step.prob_down, [0.0])) + np.concatenate(([0.0], weights * step.prob_up))
            if n in (1, 7, 40):
                expected = 100.0 * math.prod(s.mean_factor() for s in steps[:n])
                assert float(np.dot(weights, lattice.level(n))) == pytest.approx(expected, rel=1e-12)

    def test_terminal_level_matches_forward_distribution(self, time_dependent_market):
        grid = TimeGrid(1.0, 40)
        steps = CRRModel(time_dependent_market).steps(grid)
        dist = forward_probabilities(build_binomial(100.0, grid, steps), [s.probabilities for s in steps])
        assert dist.moment(1.0) == pytest.approx(100.0 * math.prod(s.mean_factor() for s in steps), rel=1e-12)

    def test_one_swing_on_every_level(self, time_dependent_market):
        grid = TimeGrid(1.0, 30)
        steps = CRRModel(time_dependent_market).steps(grid)
        lattice = build_binomial(100.0, grid, steps)
        swing = math.sqrt(np.mean([math.log(s.up / s.down) ** 2 for s in steps]))
        for n in (1, 12, 30):
            assert np.diff(np.log(lattice.level(n))) == pytest.approx(np.full(n, swing), rel=1e-9)

    def test_children_share_factors_across_a_level(self, time_dependent_market):
        grid = TimeGrid(1.0, 20)
        steps = CRRModel(time_dependent_market).steps(grid)
        lattice = build_binomial(100.0, grid, steps)
        assert not lattice.has_constant_factors
        for n in (0, 5, 19):
            parents, children = lattice.level(n), lattice.level(n + 1)
            up, down = children[1:] / parents, children[:-1] / parents
            assert up == pytest.approx(np.full(n + 1, up[0]), rel=1e-12)
            assert down == pytest.approx(np.full(n + 1, down[0]), rel=1e-12)

    @pytest.mark.parametrize("n_steps", [2, 3, 4])
    def test_path_reordering_discrepancy(self, time_dependent_market, n_steps):
        grid = TimeGrid(1.0, n_steps)
        steps = CRRModel(time_dependent_market).steps(grid)
        terminal = build_binomial(100.0, grid, steps).terminal()
        bound = 2.0 * grid.maturity * 0.1 * math.sqrt(grid.dt)
        for path in itertools.product((0, 1), repeat=n_steps):
            value = 100.0 * math.prod(step.factors[b] for step, b in zip(steps, path))
            canonical = terminal[sum(path)]
            assert abs(value - canonical) / canonical <= bound

    def test_levels_strictly_increasing(self, time_dependent_market):
        grid = TimeGrid(1.0, 30)
        lattice = CRRModel(time_dependent_market).build(100.0, grid)
        for level in lattice.levels():
            assert np.all(np.diff(level) > 0)
            assert np.all(level > 0)


class TestBuildTrinomial:
    step = new_trinomial_natural_step(0.1, 0.2, 0.01).spec()

    def test_one_step(self):
        lattice = build_trinomial(100.0, TimeGrid(0.01, 1), [self.step])
        assert lattice.level(1) == pytest.approx([97.66051, 100.08, 102.55949], rel=1e-7)
        assert list(lattice.indices(1)) == [-1, 0, 1]

    def test_two_step_centre(self):
        lattice = build_trinomial(100.0, TimeGrid(0.02, 2), [self.step] * 2)
        assert lattice.level(2)[2] == pytest.approx(100.0 * 1.0008 ** 2, rel=1e-14)
        assert lattice.level(2)[2] == pytest.approx(100.16006, abs=1e-5)
        assert [len(level) for level in lattice.levels()] == [1, 3, 5]

    def test_identity_factors(self):
        flat = StepSpec.trinomial(1.0, 1.0, 1.0, 1 / 3, 1 / 3, 1 / 3)
        lattice = build_trinomial(100.0, TimeGrid(1.0, 3), [flat] * 3)
        assert np.all(lattice.terminal() == 100.0)

    def test_rejects_time_varying_factors(self):
        other = new_trinomial_natural_step(0.1, 0.25, 0.01).spec()
        with pytest.raises(ShapeError):
            build_trinomial(100.0, TimeGrid(0.02, 2), [self.step, other])

    def test_dispatch(self):
        assert not build_lattice(100.0, TimeGrid(0.01, 1), [self.step]).is_binomial
        assert build_lattice(100.0, TimeGrid(0.01, 1), [crr_spec()]).is_binomial
        with pytest.raises(ShapeError):
            build_lattice(100.0, TimeGrid(0.01, 1), [])

    def test_levels_strictly_increasing(self):
        lattice = build_trinomial(100.0, TimeGrid(0.2, 20), [self.step] * 20)
        for level in lattice.levels():
            assert np.all(np.diff(level) > 0)


class TestRecombinationResidual:
    def test_constant_crr_is_exact(self):
        assert recombination_residual([crr_spec()] * 10, TimeGrid(0.1, 10)) == 0.0

    def test_new_trinomial(self):
        step = new_trinomial_natural_step(0.1, 0.2, 0.01).spec()
        residual = recombination_residual([step], TimeGrid(0.01, 1))
        assert residual == pytest.approx(5.7e-7 / 1.00160064, rel=1e-6)

    def test_trinomial_residual_is_second_order(self):
        coarse = new_trinomial_natural_step(0.1, 0.2, 0.01).spec()
        fine = new_trinomial_natural_step(0.1, 0.2, 0.005).spec()
        ratio = recombination_residual([coarse], TimeGrid(0.01, 1)) / recombination_residual(
            [fine], TimeGrid(0.005, 1)
        )
        assert 3.9 < ratio < 4.1

    def test_time_dependent_crr(self):
        mc = make_market(sigma=CoefficientCurve.linear(0.15, 0.1))
        grid = TimeGrid(1.0, 100)
        residual = recombination_residual(CRRModel(mc).steps(grid), grid)
        assert residual == pytest.approx(math.exp(2e-4) - 1.0, rel=1e-6)
        assert residual <= 2.01e-4

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            recombination_residual([crr_spec()], TimeGrid(0.02, 2))


@given(
    st.lists(st.floats(0.05, 0.6), min_size=1, max_size=25),
    st.floats(0.2, 0.8),
)
def test_binomial_levels_monotone_for_any_volatility_path(sigmas, q):
    grid = TimeGrid(0.01 * len(sigmas), len(sigmas))
    steps = [crr_spec(sigma=s, q=q) for s in sigmas]
    lattice = build_binomial(100.0, grid, steps)
    for level in lattice.levels():
        assert np.all(np.diff(level) > 0)
