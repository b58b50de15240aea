"""Periodic quadrature and the asymptotic power thresholds.

For smooth 2*pi-periodic integrands the uniform trapezoid rule (equivalently
the left-endpoint rectangle rule) converges geometrically, so a doubling grid
with a self-consistency stop is both simple and tight.  The zero-forcing
power ceiling is

    Pbar = delta^2/(2*pi) * integral 1/|f(lam)|^2 dlam,

with the two-tap channel (1, eps) admitting closed forms
Pbar = delta^2/(1-eps^2) and floor Pmin = delta^2/(1+eps)^2.
"""

from dataclasses import dataclass

import numpy as np

from .channel import ChannelSpec, frequency_response
from .exceptions import QuadratureFailure

QUAD_TOL = 1e-10

_GRID_START = 1 << 10
_GRID_MAX = 1 << 20


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    grid_size: int
    est_error: float


def integrate_periodic(f, tol: float = QUAD_TOL) -> QuadratureResult:
    """Integrate a vectorized periodic function over [0, 2*pi).

    Doubles the uniform grid, reusing previous evaluations, until two
    successive grid levels agree within tol (absolute on the integral).
    """
    m = _GRID_START
    lam = 2.0 * np.pi * np.arange(m) / m
    mean = float(np.mean(f(lam)))
    value = 2.0 * np.pi * mean
    while 2 * m <= _GRID_MAX:
        # Midpoints of the current grid supply the other half of the 2m rule.
        mid = lam + np.pi / m
        mid_mean = float(np.mean(f(mid)))
        new_value = np.pi * (mean + mid_mean)
        est = abs(new_value - value)
        m *= 2
        lam = 2.0 * np.pi * np.arange(m) / m
        mean = 0.5 * (mean + mid_mean)
        value = new_value
        if est <= tol:
            return QuadratureResult(value=value, grid_size=m, est_error=est)
    raise QuadratureFailure(
        f"no convergence to tol={tol:.1e} within {_GRID_MAX} grid points"
    )


def pbar_asymptotic(spec: ChannelSpec, tol: float = QUAD_TOL) -> float:
    """Zero-forcing power ceiling delta^2/(2*pi) * integral 1/|f|^2."""
    def integrand(lam):
        return 1.0 / np.abs(frequency_response(spec, lam)) ** 2

    res = integrate_periodic(integrand, tol=tol)
    return spec.delta**2 / (2.0 * np.pi) * res.value


def pbar_two_tap(epsilon: float, delta: float) -> float:
    """Closed-form ceiling for taps (1, eps), |eps| < 1."""
    if not abs(epsilon) < 1:
        raise ValueError("|epsilon| must be < 1")
    return delta**2 / (1.0 - epsilon**2)


def pmin_two_tap(epsilon: float, delta: float) -> float:
    """Closed-form floor for taps (1, eps): the all-ones pattern's per-use energy."""
    if not 0 <= epsilon < 1:
        raise ValueError("epsilon must be in [0, 1)")
    return delta**2 / (1.0 + epsilon) ** 2
