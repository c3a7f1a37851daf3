"""Spontaneous emission by hot electrons.

Field-induced emission turns into spontaneous emission by normalizing the
wave amplitude to one photon in the quantization volume and multiplying by
the photon mode density per unit angular frequency and steradian.  The
volume cancels, so results are reported per unit volume.

Output convention: ``dW_dOmega`` is energy per unit time, per steradian, per
unit angular-frequency interval, per unit volume (erg s^-1 sr^-1 cm^-3 per
rad/s, i.e. erg cm^-3 sr^-1).  Values are magnitudes for a single
polarization direction q0; summing two orthogonal polarizations is the
caller's business.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .acoustic import (
    _tensor_weight,
    check_classical_acoustic,
    check_quantum_acoustic,
)
from .constants import C_LIGHT, E_CHARGE, HBAR
from .geometry import Material, Polarization, Valley, ValleySet, cos_phi
from .impurity import (
    check_classical_impurity,
    check_quantum_impurity,
    p_plus,
    x_min,
)
from .modes import Mechanism, Regime
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec
from .special import acoustic_kernel_scaled, coulomb_log, psi_infinity

__all__ = [
    "EmissionResult",
    "photon_amplitude",
    "mode_density",
    "emission_impurity",
    "emission_acoustic",
]

_CLASSICAL_IMPURITY_COEFF = 1.0 / (2.0 * math.pi) ** 1.5
_QUANTUM_IMPURITY_COEFF = 1.0 / (math.sqrt(2.0) * math.pi)
_GENERAL_ACOUSTIC_COEFF = 2.0 / (3.0 * math.pi**2.5)
_CLASSICAL_ACOUSTIC_COEFF = 4.0 / (3.0 * math.pi**2.5)
_QUANTUM_ACOUSTIC_COEFF = 1.0 / (6.0 * math.pi**2)


@dataclass(frozen=True)
class EmissionResult:
    """Spectral emission intensity at one frequency."""

    dW_dOmega: float  # erg s^-1 sr^-1 cm^-3 per unit angular frequency
    omega: float      # rad/s
    regime: Regime
    mechanism: Mechanism

    def __post_init__(self) -> None:
        if self.dW_dOmega < 0.0:
            raise ValueError(f"emission intensity must be >= 0, got {self.dW_dOmega}")


def photon_amplitude(omega: float, volume: float) -> float:
    """Vector-potential amplitude carrying one photon in ``volume``:
    A0 = 2 c sqrt(2 pi hbar / (V omega))."""
    if omega <= 0.0 or volume <= 0.0:
        raise ValueError("omega and volume must be positive")
    return 2.0 * C_LIGHT * math.sqrt(2.0 * math.pi * HBAR / (volume * omega))


def mode_density(omega: float, volume: float) -> float:
    """Photon mode density V omega^2/(2 pi c)^3 per steradian per unit
    angular frequency."""
    if omega <= 0.0 or volume <= 0.0:
        raise ValueError("omega and volume must be positive")
    return volume * omega**2 / (2.0 * math.pi * C_LIGHT) ** 3


def _populated(valleys: ValleySet) -> list[Valley]:
    return [v for v in valleys if v.n > 0.0]


def emission_impurity(
    valleys: ValleySet,
    material: Material,
    omega: float,
    pol: Polarization,
    regime: Regime | str = Regime.GENERAL,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> EmissionResult:
    """Spontaneous emission intensity under impurity scattering.

    The general branch applies the one-photon substitution once: per valley,
    |emitted power| = e^{-hbar omega/theta} p_plus evaluated at the
    photon-normalized amplitude, times the mode density (volume cancels).
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    regime = Regime(regime)

    if regime is Regime.GENERAL:
        a0 = photon_amplitude(omega, 1.0)
        rho = mode_density(omega, 1.0)
        total = 0.0
        for v in _populated(valleys):
            s = HBAR * omega / v.theta
            total += math.exp(-s) * p_plus(v, material, omega, pol, a0, spec)
        value = total * rho

    elif regime is Regime.CLASSICAL:
        check_classical_impurity(valleys, material, omega)
        pref = (
            _CLASSICAL_IMPURITY_COEFF
            * E_CHARGE**6
            * material.n_a
            * math.sqrt(material.m_par)
            / (material.eps0**2 * C_LIGHT**3 * material.mass_contrast**2)
        )
        total = 0.0
        for v in _populated(valleys):
            log_term = coulomb_log(x_min(material, v.theta))
            total += (
                v.n
                / math.sqrt(v.theta)
                * psi_infinity(cos_phi(v, pol) ** 2, material)
                * log_term
            )
        value = pref * total

    else:
        check_quantum_impurity(valleys, material, omega)
        pref = (
            _QUANTUM_IMPURITY_COEFF
            * E_CHARGE**6
            * material.n_a
            * math.sqrt(material.m_par)
            / (
                material.eps0**2
                * C_LIGHT**3
                * material.mass_contrast**2
                * math.sqrt(HBAR * omega)
            )
        )
        total = 0.0
        for v in _populated(valleys):
            s = HBAR * omega / v.theta
            total += (
                v.n * psi_infinity(cos_phi(v, pol) ** 2, material) * math.exp(-s)
            )
        value = pref * total

    return EmissionResult(
        dW_dOmega=value, omega=omega, regime=regime, mechanism=Mechanism.IMPURITY
    )


def emission_acoustic(
    valleys: ValleySet,
    material: Material,
    omega: float,
    pol: Polarization,
    regime: Regime | str = Regime.GENERAL,
) -> EmissionResult:
    """Spontaneous emission intensity under acoustic scattering.

    general:   (2 e0^2/3 pi^{5/2} c^3) sum_i n_i theta_i e^{-2 a_i} {weight}
               e^{a_i} a_i^2 K2(a_i)
    classical: (4 e0^2/3 pi^{5/2} c^3) sum_i n_i theta_i {weight}; note the
               complete absence of omega: the classical spectrum is flat.
    quantum:   (e0^2/6 pi^2 c^3) sum_i (n_i/sqrt(theta_i)) (hbar omega)^{3/2}
               e^{-hbar omega/theta_i} {weight}
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    regime = Regime(regime)

    if regime is Regime.GENERAL:
        total = 0.0
        for v in _populated(valleys):
            a = HBAR * omega / (2.0 * v.theta)
            weight = _tensor_weight(material, cos_phi(v, pol) ** 2)
            # e^{-2a} * e^{a} a^2 K2(a), grouped through the scaled kernel so
            # neither factor overflows at large a.
            total += (
                v.n
                * v.theta
                * weight
                * math.exp(-2.0 * a)
                * (-acoustic_kernel_scaled(a))
            )
        value = _GENERAL_ACOUSTIC_COEFF * E_CHARGE**2 / C_LIGHT**3 * total

    elif regime is Regime.CLASSICAL:
        check_classical_acoustic(valleys, omega)
        total = sum(
            v.n * v.theta * _tensor_weight(material, cos_phi(v, pol) ** 2)
            for v in _populated(valleys)
        )
        value = _CLASSICAL_ACOUSTIC_COEFF * E_CHARGE**2 / C_LIGHT**3 * total

    else:
        check_quantum_acoustic(valleys, omega)
        total = 0.0
        for v in _populated(valleys):
            s = HBAR * omega / v.theta
            weight = _tensor_weight(material, cos_phi(v, pol) ** 2)
            total += (
                v.n / math.sqrt(v.theta) * (HBAR * omega) ** 1.5 * math.exp(-s) * weight
            )
        value = _QUANTUM_ACOUSTIC_COEFF * E_CHARGE**2 / C_LIGHT**3 * total

    return EmissionResult(
        dW_dOmega=value, omega=omega, regime=regime, mechanism=Mechanism.ACOUSTIC
    )
