"""End-to-end smoke checks of the Python bindings against frozen core values."""

import math

import pytest

import twoslit


def default_system(sigma_bar=2.0):
    p_psi = twoslit.PacketParams(1.0, 0.2, 0.2)
    p_phi = twoslit.PacketParams(sigma_bar, 0.2, 0.2)
    geom = twoslit.SlitGeometry(0.1, 0.4)
    return twoslit.make_two_particle_system(p_psi, p_phi, geom)


def test_version_matches_module():
    assert twoslit.__version__ == "0.1.0"


def test_beam_coefficients_frozen_values():
    coeffs = twoslit.slit_beam_coefficients(
        twoslit.PacketParams(1.0, 0.2, 0.2), twoslit.SlitGeometry(0.1, 0.4), twoslit.Slit.A
    )
    assert coeffs.alpha == pytest.approx(0.1234829240756421112, rel=1e-13)
    assert coeffs.delta == pytest.approx(-0.1016088060965283658, rel=1e-13)
    assert twoslit.single_particle_norm(coeffs) == pytest.approx(
        2.442707140075353084, rel=1e-13
    )


def test_pair_overlap_frozen_value():
    sys = default_system()
    assert sys.overlap_sq == pytest.approx(0.99593143008622991, rel=1e-12)


def test_fermion_density_vanishes_on_diagonal():
    sys = default_system()
    assert twoslit.joint_density(0.7, 0.7, sys, twoslit.Statistics.fermion) == 0.0


def test_pattern_is_even_in_y():
    sys = default_system()
    grid = [-1.5, -0.5, 0.5, 1.5]
    pattern = twoslit.fixed_detector_pattern(grid, sys, twoslit.Statistics.boson)
    assert pattern.density[0] == pytest.approx(pattern.density[3], rel=1e-12)
    assert pattern.density[1] == pytest.approx(pattern.density[2], rel=1e-12)


def test_degenerate_fermion_raises():
    sys = default_system(sigma_bar=1.0)
    with pytest.raises(twoslit.DegenerateFermionError):
        twoslit.joint_norm(sys.overlap_sq, twoslit.Statistics.fermion)


def test_oracle_confirms_overlap():
    sys = default_system()
    direct = twoslit.oracle.overlap_by_quadrature(sys.psi, sys.phi)
    assert abs(direct - sys.overlap) < 1e-8


def test_integrate_1d_gaussian():
    result = twoslit.integrate_1d(lambda t: complex(math.exp(-t * t), 0.0), -8.0, 8.0)
    assert result.value.real == pytest.approx(math.sqrt(math.pi), rel=1e-12)
