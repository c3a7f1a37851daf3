"""Free-carrier absorption under anisotropic acoustic-phonon scattering.

The relaxation tensor scales as tau(eps) = tau0 sqrt(theta/eps), so the
whole-frequency-range coefficient collapses to a modified-Bessel kernel,
a^3 d/da [K1(a)/a] = -a^2 K2(a), with a = hbar*omega / (2 theta_i).  The sign
bookkeeping is: leading minus times the negative kernel gives K > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import C_LIGHT, E_CHARGE, HBAR
from .errors import RegimeError
from .geometry import Material, Polarization, Valley, ValleySet, cos_phi
from .modes import CLASSICAL_S_MAX, QUANTUM_S_MIN, Regime
from .special import bessel_k2

__all__ = [
    "AcousticTensor",
    "acoustic_tensor",
    "tau_acoustic",
    "absorption_acoustic",
    "mobility_acoustic",
    "CLASSICAL_COEFF_ACOUSTIC",
]

_GENERAL_COEFF = 16.0 * math.sqrt(math.pi) / 3.0
CLASSICAL_COEFF_ACOUSTIC = 32.0 * math.sqrt(math.pi) / 3.0
_QUANTUM_COEFF = 4.0 * math.pi / 3.0
_MOBILITY_COEFF = 4.0 / (3.0 * math.sqrt(math.pi))


def tau_acoustic(epsilon: float, theta: float, tau0: float) -> float:
    """Acoustic relaxation time tau0 * sqrt(theta/epsilon) at energy epsilon."""
    if epsilon <= 0.0 or theta <= 0.0 or tau0 <= 0.0:
        raise ValueError("epsilon, theta and tau0 must be positive")
    return tau0 * math.sqrt(theta / epsilon)


@dataclass(frozen=True)
class AcousticTensor:
    """Energy-dependent acoustic relaxation-time pair for one valley
    temperature; tau_alpha(eps) = tau_alpha0 * sqrt(theta/eps)."""

    theta: float
    tau_perp0: float
    tau_par0: float

    def tau_perp(self, epsilon: float) -> float:
        return tau_acoustic(epsilon, self.theta, self.tau_perp0)

    def tau_par(self, epsilon: float) -> float:
        return tau_acoustic(epsilon, self.theta, self.tau_par0)


def acoustic_tensor(material: Material, theta: float) -> AcousticTensor:
    return AcousticTensor(
        theta=theta, tau_perp0=material.tau_perp0, tau_par0=material.tau_par0
    )


def _tensor_weight(material: Material, cos2phi: float) -> float:
    """sin^2/(m_perp tau_perp) + cos^2/(m_par tau_par) at eps = theta_i.

    tau_alpha(theta_i) = tau_alpha0 by the sqrt(theta/eps) scaling, so the
    weight involves the bare prefactors.
    """
    return (1.0 - cos2phi) / (material.m_perp * material.tau_perp0) + cos2phi / (
        material.m_par * material.tau_par0
    )


def _populated(valleys: ValleySet) -> list[Valley]:
    return [v for v in valleys if v.n > 0.0]


def check_classical_acoustic(valleys: ValleySet, omega: float) -> None:
    for v in _populated(valleys):
        s = HBAR * omega / v.theta
        if s > CLASSICAL_S_MAX:
            raise RegimeError(
                f"classical acoustic form needs hbar*omega/theta <= "
                f"{CLASSICAL_S_MAX}, got {s:.3e} at omega = {omega:.6e} rad/s"
            )


def check_quantum_acoustic(valleys: ValleySet, omega: float) -> None:
    for v in _populated(valleys):
        s = HBAR * omega / v.theta
        if s < QUANTUM_S_MIN:
            raise RegimeError(
                f"quantum acoustic form needs hbar*omega/theta >= "
                f"{QUANTUM_S_MIN}, got {s:.3e} at omega = {omega:.6e} rad/s"
            )


def absorption_acoustic(
    valleys: ValleySet,
    material: Material,
    omega: float,
    pol: Polarization,
    regime: Regime | str = Regime.GENERAL,
) -> float:
    """Absorption coefficient K (cm^-1) under acoustic scattering.

    general:   (16 sqrt(pi)/3 sqrt(eps0)) (e0^2/c hbar) sum_i (n_i theta_i /
               omega^3) (1 - e^{-hbar omega/theta_i}) {weight} a_i^2 K2(a_i)
    classical: (32 sqrt(pi)/3) (e0^2/sqrt(eps0) c omega^2) sum_i n_i {weight}
    quantum:   (4 pi/3) (e0^2/sqrt(eps0) c omega^2) sum_i n_i
               sqrt(hbar omega/theta_i) e^{-a_i} (1 + 3/(2 a_i)) {weight},
               the large-argument form of the Bessel kernel.
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    regime = Regime(regime)

    if regime is Regime.GENERAL:
        total = 0.0
        for v in _populated(valleys):
            a = HBAR * omega / (2.0 * v.theta)
            weight = _tensor_weight(material, cos_phi(v, pol) ** 2)
            # (1 - e^{-2a}) times the kernel magnitude a^2 K2(a).
            total += (
                v.n * v.theta * (-math.expm1(-2.0 * a)) * weight * a * a * bessel_k2(a)
            )
        return (
            _GENERAL_COEFF
            * E_CHARGE**2
            / (math.sqrt(material.eps0) * C_LIGHT * HBAR * omega**3)
            * total
        )

    if regime is Regime.CLASSICAL:
        check_classical_acoustic(valleys, omega)
        total = sum(
            v.n * _tensor_weight(material, cos_phi(v, pol) ** 2)
            for v in _populated(valleys)
        )
        return (
            CLASSICAL_COEFF_ACOUSTIC
            * E_CHARGE**2
            / (math.sqrt(material.eps0) * C_LIGHT * omega**2)
            * total
        )

    check_quantum_acoustic(valleys, omega)
    total = 0.0
    for v in _populated(valleys):
        a = HBAR * omega / (2.0 * v.theta)
        weight = _tensor_weight(material, cos_phi(v, pol) ** 2)
        total += (
            v.n
            * math.sqrt(2.0 * a)
            * math.exp(-a)
            * (1.0 + 1.5 / a)
            * weight
        )
    return (
        _QUANTUM_COEFF
        * E_CHARGE**2
        / (math.sqrt(material.eps0) * C_LIGHT * omega**2)
        * total
    )


def mobility_acoustic(material: Material, theta: float) -> tuple[float, float]:
    """(mu_perp, mu_par) = (4/(3 sqrt(pi))) e0 tau_alpha(theta)/m_alpha."""
    tau_perp = tau_acoustic(theta, theta, material.tau_perp0)
    tau_par = tau_acoustic(theta, theta, material.tau_par0)
    mu_perp = _MOBILITY_COEFF * E_CHARGE * tau_perp / material.m_perp
    mu_par = _MOBILITY_COEFF * E_CHARGE * tau_par / material.m_par
    return mu_perp, mu_par
