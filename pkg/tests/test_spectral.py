"""Periodic quadrature and the closed-form power thresholds."""

import math

import numpy as np
import pytest
from scipy.special import i0

from isicap import (
    ChannelSpec,
    QuadratureFailure,
    integrate_periodic,
    pbar_asymptotic,
    pbar_two_tap,
    pmin_two_tap,
)


def test_constant_function():
    res = integrate_periodic(lambda lam: np.ones_like(lam))
    assert res.value == pytest.approx(2 * math.pi, rel=1e-15)
    assert res.est_error <= 1e-10


def test_cosine_squared():
    res = integrate_periodic(lambda lam: np.cos(lam) ** 2)
    assert res.value == pytest.approx(math.pi, rel=1e-13)


def test_poisson_integral():
    # 1/|1 + 0.2 e^{j lam}|^2 integrates to 2 pi / (1 - 0.04).
    def f(lam):
        return 1.0 / np.abs(1.0 + 0.2 * np.exp(1j * lam)) ** 2

    res = integrate_periodic(f)
    assert res.value == pytest.approx(2 * math.pi / 0.96, rel=1e-13)


def test_bessel_moment():
    res = integrate_periodic(lambda lam: np.exp(np.cos(lam)))
    assert res.value == pytest.approx(2 * math.pi * i0(1.0), rel=1e-13)


def test_grid_size_is_power_of_two():
    res = integrate_periodic(lambda lam: np.cos(lam) ** 4)
    assert res.grid_size & (res.grid_size - 1) == 0
    assert res.grid_size >= 1 << 11


def test_needle_exhausts_budget():
    # Analyticity strip ~1e-7 wide: no trapezoid refinement within budget
    # can certify 1e-10, so the failure must surface rather than a bad value.
    rho = 1.0 - 1e-7

    def needle(lam):
        return (1 - rho**2) / (1 + rho**2 - 2 * rho * np.cos(lam))

    with pytest.raises(QuadratureFailure):
        integrate_periodic(needle)


def test_loose_tolerance_stops_early():
    rho = 0.99

    def kernel(lam):
        return (1 - rho**2) / (1 + rho**2 - 2 * rho * np.cos(lam))

    tight = integrate_periodic(kernel, tol=1e-10)
    loose = integrate_periodic(kernel, tol=1e-3)
    assert loose.grid_size < tight.grid_size
    assert tight.value == pytest.approx(2 * math.pi, rel=1e-9)
    assert loose.value == pytest.approx(tight.value, abs=2e-3)


def test_pbar_two_tap_values():
    assert pbar_two_tap(0.2, 0.3) == 0.09375
    assert pbar_two_tap(0.0, 0.5) == 0.25
    with pytest.raises(ValueError):
        pbar_two_tap(1.0, 0.3)


def test_pmin_two_tap_values():
    assert pmin_two_tap(0.2, 0.3) == pytest.approx(0.09 * 25 / 36, rel=1e-14)
    assert pmin_two_tap(0.0, 0.5) == 0.25
    with pytest.raises(ValueError):
        pmin_two_tap(-0.1, 0.3)


@pytest.mark.parametrize("eps", [0.1, 0.2, 0.45, 0.8])
def test_pbar_asymptotic_matches_closed_form(eps):
    spec = ChannelSpec((1.0, eps), 0.3, 12)
    assert pbar_asymptotic(spec) == pytest.approx(pbar_two_tap(eps, 0.3), rel=1e-12)


def test_pbar_asymptotic_single_tap():
    spec = ChannelSpec((2.0,), 0.3, 8)
    assert pbar_asymptotic(spec) == pytest.approx(0.09 / 4.0, rel=1e-13)
