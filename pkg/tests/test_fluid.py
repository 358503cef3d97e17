import math
import random
from fractions import Fraction

import pytest

from sphereint.exactpi import DomainError, PiRational, to_float
from sphereint.fluid import (
    FluidParams,
    fluid_closed,
    fluid_closed_factors,
    fluid_series,
    gamma_factor,
)
from sphereint.integrals import sphere_volume


def test_params_validation():
    with pytest.raises(ValueError):
        FluidParams(3, (0.5,))  # D=3 has two rotation circles
    with pytest.raises(DomainError):
        FluidParams(2, (1.0,))
    with pytest.raises(DomainError):
        FluidParams(2, (-1.2,))
    p = FluidParams(3, (0.3, -0.4))
    assert p.omegas == (0.3, -0.4)


def test_gamma_factor_values():
    p = FluidParams(2, (0.6,))
    # at mu_1 = 1 the speed is 0.6, so gamma = 1.25
    assert gamma_factor(p, (1.0, 0.0)) == pytest.approx(1.25, rel=1e-15)
    # at the pole mu_1 = 0 nothing moves
    assert gamma_factor(p, (0.0, 1.0)) == 1.0
    with pytest.raises(ValueError):
        gamma_factor(p, ())


def test_gamma_factor_diverges_at_light_speed():
    p = FluidParams(2, (0.999999,))
    big = FluidParams(2, (0.5,))
    with pytest.raises(DomainError):
        gamma_factor(big, (2.0, 0.0))  # off-sphere radii can push v^2 past 1
    assert gamma_factor(p, (1.0, 0.0)) > 700


def test_closed_form_values():
    assert fluid_closed(FluidParams(2, (0.0,))) == pytest.approx(
        to_float(sphere_volume(2)), rel=1e-15
    )
    assert fluid_closed(FluidParams(2, (0.5,))) == pytest.approx(
        16 * math.pi / 3, rel=1e-14
    )
    assert fluid_closed(FluidParams(3, (0.3, 0.4))) == pytest.approx(
        2 * math.pi ** 2 / (0.91 * 0.84), rel=1e-14
    )


def test_closed_form_factors_are_exact_vol_and_float_denominator():
    p = FluidParams(4, (0.2, 0.7))
    vol, denom = fluid_closed_factors(p)
    assert isinstance(vol, PiRational)
    assert vol == sphere_volume(4)
    assert denom == pytest.approx((1 - 0.04) * (1 - 0.49), rel=1e-15)
    assert fluid_closed(p) == pytest.approx(to_float(vol) / denom, rel=1e-15)


def test_factorized_divergence():
    rng = random.Random(73)
    for D in range(1, 7):
        k = (D + 1) // 2
        for _ in range(25):
            omegas = [rng.uniform(-0.995, 0.995) for _ in range(k)]
            p = FluidParams(D, omegas)
            _, denom = fluid_closed_factors(p)
            assert fluid_closed(p) * denom == pytest.approx(
                to_float(sphere_volume(D)), rel=1e-14
            )


def test_closed_form_lower_bound():
    rng = random.Random(5)
    for D in (1, 2, 4, 6):
        k = (D + 1) // 2
        omegas = [rng.uniform(-0.9, 0.9) for _ in range(k)]
        assert fluid_closed(FluidParams(D, omegas)) >= to_float(sphere_volume(D))
    # equality only with no rotation at all
    assert fluid_closed(FluidParams(3, (0.0, 0.0))) == pytest.approx(
        to_float(sphere_volume(3)), rel=1e-15
    )


def test_series_zeroth_shell_is_volume():
    for D, omegas in [(1, (0.4,)), (2, (0.6,)), (5, (0.1, 0.2, 0.3))]:
        res = fluid_series(FluidParams(D, omegas), 0)
        assert res.terms_used == 1
        assert res.truncation_order == 0
        assert res.value == pytest.approx(to_float(sphere_volume(D)), rel=1e-13)


def test_series_converges_to_closed_form():
    p = FluidParams(2, (0.5,))
    closed = fluid_closed(p)
    res = fluid_series(p, 40)
    assert res.value == pytest.approx(closed, rel=1e-10)
    assert res.terms_used == 41  # one slot, one index per shell
    p2 = FluidParams(5, (0.5, -0.3, 0.2))
    res2 = fluid_series(p2, 40)
    assert res2.value == pytest.approx(fluid_closed(p2), rel=1e-10)


def test_series_partial_sums_are_monotone():
    p = FluidParams(4, (0.6, 0.3))
    prev = 0.0
    closed = fluid_closed(p)
    for K in range(0, 30, 3):
        res = fluid_series(p, K)
        assert res.value >= prev
        assert res.value <= closed * (1 + 1e-12)
        prev = res.value
    assert res.last_term_magnitude >= 0.0


def test_series_refuses_near_divergence():
    p = FluidParams(2, (0.9995,))
    with pytest.raises(DomainError) as err:
        fluid_series(p, 10)
    assert "fluid_closed" in str(err.value)
    # the closed form itself still works there
    assert fluid_closed(p) > 0


def test_series_rejects_bad_order():
    p = FluidParams(2, (0.5,))
    with pytest.raises(ValueError):
        fluid_series(p, -1)
    with pytest.raises(TypeError):
        fluid_series(p, 2.0)
