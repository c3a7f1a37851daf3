"""Numerical integration engines.

Two integrals recur throughout the package:

* semi-infinite spectral integrals of the form
  ``int_0^inf e^-x g(x) / sqrt(x (x + s)) dx`` with a 1/sqrt(x) endpoint
  singularity, and
* surface integrals over the unit sphere, used by the brute-force
  validation oracles.

The spectral engine removes the endpoint singularity with the substitution
x = t^2 and hands the smooth transformed integrand to QUADPACK.  The sphere
engine is a product Gauss-Legendre (polar) x trapezoid (azimuth) rule with
level doubling until two successive levels agree.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate as _sci_integrate

from .errors import QuadratureError

__all__ = [
    "QuadratureSpec",
    "DEFAULT_QUADRATURE",
    "integrate_spectral",
    "integrate_spectral_with_error",
    "integrate_unit_sphere",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for the adaptive spectral integrator."""

    rel_tol: float = 1e-9
    abs_tol: float = 1e-300  # pure guard against zero-valued integrands
    max_subdivisions: int = 200

    def __post_init__(self) -> None:
        if not 0.0 < self.rel_tol <= 1e-3:
            raise ValueError(f"rel_tol must lie in (0, 1e-3], got {self.rel_tol}")
        if self.max_subdivisions < 10:
            raise ValueError("max_subdivisions must be at least 10")


DEFAULT_QUADRATURE = QuadratureSpec()


def integrate_spectral_with_error(
    g: Callable[[float], float],
    s: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> tuple[float, float]:
    """Like :func:`integrate_spectral` but also returns the error estimate."""
    if s < 0.0:
        raise ValueError(f"s must be non-negative, got {s}")

    # x = t^2 turns the weight into 2 e^{-t^2} / sqrt(t^2 + s), finite at the
    # origin for s > 0 and integrable for the g(0) = 0 integrands used at s = 0.
    def transformed(t: float) -> float:
        x = t * t
        return 2.0 * math.exp(-x) * g(x) / math.sqrt(x + s)

    # Truncate where the e^-x envelope is far below the tolerance floor; all
    # integrands carry that envelope, so the discarded tail is negligible.
    x_cut = -math.log(spec.rel_tol) + 18.5
    t_max = math.sqrt(x_cut)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", _sci_integrate.IntegrationWarning)
        result = _sci_integrate.quad(
            transformed,
            0.0,
            t_max,
            epsabs=spec.abs_tol,
            epsrel=spec.rel_tol,
            limit=spec.max_subdivisions,
            full_output=1,
        )
    value, abserr = result[0], result[1]
    if len(result) > 3:
        raise QuadratureError(
            f"spectral integral did not converge within "
            f"{spec.max_subdivisions} subdivisions: {result[3]}",
            estimate=abserr,
        )
    if abserr > 10.0 * spec.rel_tol * abs(value) + spec.abs_tol and abs(value) > 0.0:
        raise QuadratureError(
            f"spectral integral error estimate {abserr:.3e} exceeds the "
            f"requested relative tolerance {spec.rel_tol:.1e}",
            estimate=abserr,
        )
    return value, abserr


def integrate_spectral(
    g: Callable[[float], float],
    s: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """``int_0^inf e^-x g(x) / sqrt(x (x + s)) dx`` to the spec's rel_tol.

    ``s`` is the dimensionless photon-to-thermal energy ratio; ``g`` must be
    bounded on (0, inf) and, for s = 0, must vanish at the origin fast enough
    to keep the integrand integrable.
    """
    return integrate_spectral_with_error(g, s, spec)[0]


_SPHERE_LEVELS = (8, 16, 32, 64, 128, 256, 512)


def integrate_unit_sphere(
    f: Callable[[np.ndarray], float],
    rel_tol: float = 1e-10,
) -> float:
    """Integral of ``f(direction)`` over the unit sphere.

    Product rule: Gauss-Legendre in cos(theta), uniform trapezoid in azimuth
    (spectrally accurate for periodic integrands).  The node count doubles
    until two successive levels agree to ``rel_tol`` relative.
    """
    previous = None
    for n_polar in _SPHERE_LEVELS:
        nodes, weights = np.polynomial.legendre.leggauss(n_polar)
        n_azimuth = 2 * n_polar
        phis = 2.0 * math.pi * np.arange(n_azimuth) / n_azimuth
        total = 0.0
        for u, w in zip(nodes, weights):
            sin_theta = math.sqrt(max(0.0, 1.0 - u * u))
            ring = 0.0
            for phi in phis:
                direction = np.array(
                    [sin_theta * math.cos(phi), sin_theta * math.sin(phi), u]
                )
                ring += f(direction)
            total += w * ring
        total *= 2.0 * math.pi / n_azimuth
        if previous is not None:
            scale = max(abs(total), abs(previous), 1e-300)
            if abs(total - previous) <= rel_tol * scale:
                return total
        previous = total
    raise QuadratureError(
        f"unit-sphere quadrature did not converge to rel_tol={rel_tol:g} "
        f"within {_SPHERE_LEVELS[-1]} polar nodes",
        estimate=abs(total - previous) if previous is not None else None,
    )
