"""Brute-force evaluations of the pre-reduction collision integrals.

These exist to certify the analytic reductions used by the production code:
the closed-form angular integral against a direct unit-sphere quadrature, the
integration-by-parts identity behind the single-integral absorbed power, and
the energy-shift relation behind detailed balance.  They ship with the
library so the certification is reproducible outside CI.
"""

from __future__ import annotations

import math
import warnings
from typing import Callable

import numpy as np
from scipy import integrate as _sci_integrate

from .constants import C_LIGHT, E_CHARGE, HBAR
from .errors import QuadratureError
from .geometry import Material, Polarization, Valley, cos_phi
from .quadrature import integrate_unit_sphere
from .special import shape_b1, shape_b2

__all__ = [
    "angular_integral_numeric",
    "angular_integral_closed",
    "momentum_window_integral",
    "double_integral_direct",
    "boundary_term_integral",
    "collision_prefactor",
    "p_minus_direct",
]

# e^-x envelope truncation for the outer energy integrals.
_X_CUT = 42.0


def _quad(f: Callable[[float], float], a: float, b: float, rel: float) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", _sci_integrate.IntegrationWarning)
        result = _sci_integrate.quad(f, a, b, epsabs=1e-300, epsrel=rel,
                                     limit=300, full_output=1)
    if len(result) > 3:
        raise QuadratureError(f"oracle quadrature failed: {result[3]}",
                              estimate=result[1])
    return result[0]


def angular_integral_numeric(
    q_star: float,
    r_D: float,
    material: Material,
    A_perp: float,
    A_par: float,
    rel_tol: float = 1e-10,
) -> float:
    """Direct angular integral over the deformed momentum-transfer sphere.

    Integrates gamma^2 / (q_lab^2 + 1/r_D^2)^2 over the directions of the
    deformed vector q*, with gamma = A_perp q_x + (m_perp/m_par) A_par q_par
    built from the laboratory components (valley axis along z,
    q_par = sqrt(m_par/m_perp) q*_z, transverse components unchanged).
    """
    if q_star <= 0.0 or r_D <= 0.0:
        raise ValueError("q_star and r_D must be positive")
    stretch = math.sqrt(material.m_par / material.m_perp)
    mass_ratio = material.m_perp / material.m_par
    inv_rd_sq = 1.0 / (r_D * r_D)

    def integrand(direction: np.ndarray) -> float:
        q_x = q_star * direction[0]
        q_y = q_star * direction[1]
        q_par = stretch * q_star * direction[2]
        gamma = A_perp * q_x + mass_ratio * A_par * q_par
        denom = q_x * q_x + q_y * q_y + q_par * q_par + inv_rd_sq
        return gamma * gamma / (denom * denom)

    return integrate_unit_sphere(integrand, rel_tol)


def angular_integral_closed(
    q_star: float,
    r_D: float,
    material: Material,
    A_perp: float,
    A_par: float,
) -> float:
    """Closed form of :func:`angular_integral_numeric`:

    (pi/q*^2) (m_perp/(m_par - m_perp))^2
        { A_perp^2 B1(b) + 2 (m_perp/m_par) A_par^2 B2(b) }.
    """
    b0_sq = material.m_perp / material.mass_contrast
    b = math.sqrt(b0_sq * (1.0 + 1.0 / (q_star * r_D) ** 2))
    bracket = (
        A_perp**2 * shape_b1(b)
        + 2.0 * (material.m_perp / material.m_par) * A_par**2 * shape_b2(b)
    )
    return math.pi / q_star**2 * (material.m_perp / material.mass_contrast) ** 2 * bracket


def _y_closed(q: float, material: Material, a_perp_sq: float, a_par_sq: float) -> float:
    b0_sq = material.m_perp / material.mass_contrast
    r_D = material.require_r_D()
    b = math.sqrt(b0_sq * (1.0 + 1.0 / (q * r_D) ** 2))
    bracket = (
        a_perp_sq * shape_b1(b)
        + 2.0 * (material.m_perp / material.m_par) * a_par_sq * shape_b2(b)
    )
    return math.pi / (q * q) * (material.m_perp / material.mass_contrast) ** 2 * bracket


def _amplitudes(pol: Polarization, valley: Valley, A0: float) -> tuple[float, float]:
    c2 = cos_phi(valley, pol) ** 2
    return (1.0 - c2) * A0 * A0, c2 * A0 * A0


def momentum_window_integral(
    x: float,
    valley: Valley,
    material: Material,
    omega: float,
    pol: Polarization,
    A0: float = 1.0,
    rel_tol: float = 1e-11,
) -> float:
    """Inner integral int_{q_min(x)}^{q_max(x)} dq q y(q) at dimensionless
    energy x; zero when the kinematic window has zero width (x = 0)."""
    theta = valley.theta
    s = HBAR * omega / theta
    kappa = math.sqrt(2.0 * material.m_perp * theta) / HBAR
    a_perp_sq, a_par_sq = _amplitudes(pol, valley, A0)
    root_x = math.sqrt(x)
    root_xs = math.sqrt(x + s)
    q_lo = kappa * (root_xs - root_x)
    q_hi = kappa * (root_xs + root_x)
    if q_hi <= q_lo:
        return 0.0
    return _quad(
        lambda q: q * _y_closed(q, material, a_perp_sq, a_par_sq),
        q_lo,
        q_hi,
        rel_tol,
    )


def double_integral_direct(
    valley: Valley,
    material: Material,
    omega: float,
    pol: Polarization,
    A0: float = 1.0,
    rel_tol: float = 1e-10,
) -> float:
    """Nested quadrature of the pre-reduction double integral (absorption
    branch):

        int_0^inf d(eps) e^{-eps/theta}
            int_{q_min(eps)}^{q_max(eps)} dq q y(q).

    Outer integral substituted eps = theta t^2 to remove the sqrt(x)
    endpoint behaviour of the window width.
    """
    theta = valley.theta

    def outer_integrand(t: float) -> float:
        x = t * t
        return (
            2.0
            * t
            * math.exp(-x)
            * momentum_window_integral(
                x, valley, material, omega, pol, A0, rel_tol * 0.1
            )
        )

    outer = _quad(outer_integrand, 0.0, math.sqrt(_X_CUT), rel_tol)
    return theta * outer


def boundary_term_integral(
    valley: Valley,
    material: Material,
    omega: float,
    pol: Polarization,
    A0: float = 1.0,
    rel_tol: float = 1e-11,
) -> float:
    """The integration-by-parts reduction of :func:`double_integral_direct`:

        theta * int_0^inf dx e^-x { [q y(q)]_{q_max} dq_max/dx
                                    - [q y(q)]_{q_min} dq_min/dx }.

    Must agree with the double integral; the boundary terms of the parts
    integration vanish because the window closes at eps = 0.
    """
    theta = valley.theta
    s = HBAR * omega / theta
    kappa = math.sqrt(2.0 * material.m_perp * theta) / HBAR
    a_perp_sq, a_par_sq = _amplitudes(pol, valley, A0)

    # With x = t^2 the 1/sqrt(x) in dq/dx cancels against dx = 2 t dt.
    def integrand(t: float) -> float:
        x = t * t
        root_xs = math.sqrt(x + s)
        q_hi = kappa * (t + root_xs)
        q_lo = kappa * (root_xs - t)
        ratio = t / root_xs
        hi = q_hi * _y_closed(q_hi, material, a_perp_sq, a_par_sq) * (1.0 + ratio)
        lo = q_lo * _y_closed(q_lo, material, a_perp_sq, a_par_sq) * (1.0 - ratio)
        return math.exp(-x) * kappa * (hi + lo)

    return theta * _quad(integrand, 0.0, math.sqrt(_X_CUT), rel_tol)


def collision_prefactor(valley: Valley, material: Material, omega: float) -> float:
    """Prefactor converting the double integral into absorbed power:

        e0^6 n_a n_i sqrt(m_par) /
            (sqrt(2 pi) theta^{3/2} eps0^2 c^2 hbar omega m_perp^2).
    """
    return (
        E_CHARGE**6
        * material.n_a
        * valley.n
        * math.sqrt(material.m_par)
        / (
            math.sqrt(2.0 * math.pi)
            * valley.theta**1.5
            * material.eps0**2
            * C_LIGHT**2
            * HBAR
            * omega
            * material.m_perp**2
        )
    )


def p_minus_direct(
    valley: Valley,
    material: Material,
    omega: float,
    pol: Polarization,
    A0: float,
    rel_tol: float = 1e-10,
) -> float:
    """Emitted power integrated directly over eps >= hbar*omega, without the
    variable shift; only electrons that can spare a photon contribute.

    Returns the signed power (negative), to be compared against
    -e^{-hbar omega/theta} p_plus.
    """
    theta = valley.theta
    s = HBAR * omega / theta
    kappa = math.sqrt(2.0 * material.m_perp * theta) / HBAR
    a_perp_sq, a_par_sq = _amplitudes(pol, valley, A0)

    def window_integral(x: float) -> float:
        # Emission branch: q window at energy x >= s.
        root_x = math.sqrt(x)
        root_xms = math.sqrt(x - s)
        q_lo = kappa * (root_x - root_xms)
        q_hi = kappa * (root_x + root_xms)
        if q_hi <= q_lo:
            return 0.0
        return _quad(
            lambda q: q * _y_closed(q, material, a_perp_sq, a_par_sq),
            q_lo,
            q_hi,
            rel_tol * 0.1,
        )

    # x = s + t^2: removes the sqrt(x - s) edge at the emission threshold.
    outer = _quad(
        lambda t: 2.0 * t * math.exp(-(s + t * t)) * window_integral(s + t * t),
        0.0,
        math.sqrt(_X_CUT),
        rel_tol,
    )
    return -collision_prefactor(valley, material, omega) * theta * outer
