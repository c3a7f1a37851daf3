import pytest

import multivalley as mv


@pytest.fixture
def ge_material():
    # Ge-like valleys; explicit r_D keeps x_min ~ 5e-5 at 300 K so every
    # closed-form regime in the suite is reachable.
    return mv.Material.from_units(
        m_perp_me=0.082,
        m_par_me=1.59,
        eps0=16.0,
        n_a=1.0e16,
        tau_perp0=1.2e-12,
        tau_par0=9.0e-13,
        r_D=3.0e-5,
    )


@pytest.fixture
def theta_300():
    return mv.theta_from_kelvin(300.0)


@pytest.fixture
def valley_z(theta_300):
    return mv.Valley(axis=(0.0, 0.0, 1.0), n=1.0e16, theta=theta_300)


@pytest.fixture
def single_valley(valley_z):
    return mv.ValleySet((valley_z,))


@pytest.fixture
def pol_skew():
    return mv.Polarization.from_vector([0.3, -0.5, 0.9])
