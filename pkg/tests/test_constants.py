import math

import pytest
from hypothesis import given, strategies as st

from magcp import CODATA, Drude, Plasma, TwoFluidSuperconductor, length_scales, thermal_wavelength
from magcp.errors import DomainError

from conftest import GAMMA, OMEGA_M, OMEGA_P


def test_thermal_wavelength_1K():
    # ~ 0.18 mm K / T
    assert thermal_wavelength(1.0) == pytest.approx(0.18e-3, rel=0.02)


def test_thermal_wavelength_room_temperature():
    # ~ 0.6 um at room temperature
    assert thermal_wavelength(300.0) == pytest.approx(0.6e-6, rel=0.02)


def test_thermal_wavelength_halves():
    assert thermal_wavelength(2.0) == 0.5 * thermal_wavelength(1.0)


@given(
    t1=st.floats(1e-6, 1e4, allow_nan=False),
    t2=st.floats(1e-6, 1e4, allow_nan=False),
)
def test_thermal_wavelength_scaling(t1, t2):
    ratio = thermal_wavelength(t1) / thermal_wavelength(t2)
    assert ratio == pytest.approx(t2 / t1, rel=1e-12)


@pytest.mark.parametrize("T", [0.0, -1.0])
def test_thermal_wavelength_domain(T):
    with pytest.raises(DomainError):
        thermal_wavelength(T)


def test_plasma_wavelength_matches_caption():
    scales = length_scales(Drude(OMEGA_P, GAMMA), OMEGA_M)
    assert scales.plasma_wavelength == pytest.approx(210e-9, rel=0.01)


def test_skin_depth_at_zeeman_frequency():
    # frozen fixture, cross-checked against the independent rearrangement
    # delta = sqrt(2 gamma c^2 / (omega_p^2 omega))
    scales = length_scales(Drude(OMEGA_P, GAMMA), OMEGA_M)
    alt = math.sqrt(2.0 * GAMMA * CODATA.c**2 / (OMEGA_P**2 * OMEGA_M))
    assert scales.skin_depth == pytest.approx(alt, rel=1e-12)
    assert scales.skin_depth == pytest.approx(8.1736e-6, rel=1e-4)


def test_skin_depth_frequency_scaling():
    s1 = length_scales(Drude(OMEGA_P, GAMMA), 1e10)
    s2 = length_scales(Drude(OMEGA_P, GAMMA), 2e10)
    assert s2.skin_depth == pytest.approx(s1.skin_depth / math.sqrt(2.0), rel=1e-12)


def test_hagen_rubens_ordering():
    # omega << gamma << omega_p implies delta << lambda
    omega = 1e-3 * GAMMA
    scales = length_scales(Drude(OMEGA_P, GAMMA), omega)
    assert scales.skin_depth < 1e-2 * scales.photon_wavelength


def test_dissipationless_models_have_no_skin_depth():
    assert length_scales(Plasma(OMEGA_P), OMEGA_M).skin_depth is None
    sc = TwoFluidSuperconductor(OMEGA_P, GAMMA, 1.0)
    assert length_scales(sc, OMEGA_M, T=0.0).skin_depth is None
    assert length_scales(sc, OMEGA_M, T=0.5).skin_depth is not None


def test_drude_scales_independent_of_temperature():
    a = length_scales(Drude(OMEGA_P, GAMMA), OMEGA_M, T=0.0)
    b = length_scales(Drude(OMEGA_P, GAMMA), OMEGA_M, T=300.0)
    assert a == b


def test_length_scales_domain():
    with pytest.raises(DomainError):
        length_scales(Drude(OMEGA_P, GAMMA), 0.0)


def test_constants_positive():
    for name in ("mu0", "hbar", "kB", "c", "muB", "gS", "alpha_fs"):
        assert getattr(CODATA, name) > 0.0
    assert CODATA.gS == pytest.approx(2.0023, rel=1e-4)
    assert CODATA.alpha_fs == pytest.approx(1.0 / 137.0, rel=1e-3)
