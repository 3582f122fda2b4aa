import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from magcp import (
    CODATA,
    Drude,
    PerfectConductor,
    PerfectCrystal,
    Plasma,
    ReflectionRegime,
    SpectralPoint,
    TwoFluidSuperconductor,
    fresnel,
    fresnel_asymptote,
    gamma_of_T,
    order_parameter,
    permittivity,
    static_reflection,
)
from magcp.errors import DomainError

from conftest import GAMMA, OMEGA_M, OMEGA_P

C = CODATA.c


# ---------------------------------------------------------------------------
# permittivity
# ---------------------------------------------------------------------------

def test_drude_imaginary_axis_closed_form(drude):
    xi = 3.7e11
    eps = permittivity(drude, SpectralPoint.imaginary(xi))
    assert eps == pytest.approx(1.0 + OMEGA_P**2 / (xi * (xi + GAMMA)), rel=1e-14)
    assert eps > 1.0


def test_drude_real_axis_closed_form(drude):
    omega = 2.2e13
    eps = permittivity(drude, SpectralPoint.real(omega))
    assert eps == pytest.approx(1.0 - OMEGA_P**2 / (omega * (omega + 1j * GAMMA)), rel=1e-14)
    assert eps.imag > 0.0


def test_two_fluid_limits(drude, plasma):
    sc = TwoFluidSuperconductor(OMEGA_P, GAMMA, Tc=1.0)
    for s in (SpectralPoint.imaginary(1e10), SpectralPoint.real(3e11)):
        assert permittivity(sc, s, T=0.0) == permittivity(plasma, s)
        assert permittivity(sc, s, T=1.01) == permittivity(drude, s, T=1.01)


def test_two_fluid_interpolates(drude, plasma):
    sc = TwoFluidSuperconductor(OMEGA_P, GAMMA, Tc=1.0)
    for xi in (1e9, 1e11, 1e13):
        s = SpectralPoint.imaginary(xi)
        lo = permittivity(drude, s)
        hi = permittivity(plasma, s)
        mid = permittivity(sc, s, T=0.5)
        assert lo < mid < hi


def test_order_parameter_values():
    assert order_parameter(0.0, 1.0) == 1.0
    assert order_parameter(1.0, 1.0) == 0.0  # theta(0) resolves normal
    assert order_parameter(0.5, 1.0) == pytest.approx(15.0 / 16.0, abs=1e-15)


@given(st.floats(0.0, 10.0), st.floats(0.1, 10.0))
def test_order_parameter_bounds(T, Tc):
    eta = order_parameter(T, Tc)
    assert 0.0 <= eta <= 1.0


def test_gamma_of_T_power_law():
    pc = PerfectCrystal(OMEGA_P, GAMMA, T_ref=300.0, exponent=2.0)
    assert gamma_of_T(pc, 300.0) == GAMMA
    assert gamma_of_T(pc, 0.0) == 0.0
    assert gamma_of_T(pc, 150.0) == pytest.approx(GAMMA / 4.0, rel=1e-14)
    assert gamma_of_T(pc, 1000.0) == GAMMA  # saturation


def test_perfect_crystal_permittivity_limits():
    pc = PerfectCrystal(OMEGA_P, GAMMA, T_ref=300.0, exponent=2.0)
    s = SpectralPoint.imaginary(5e9)
    assert permittivity(pc, s, T=0.0) == permittivity(Plasma(OMEGA_P), s)
    assert permittivity(pc, s, T=300.0) == permittivity(Drude(OMEGA_P, GAMMA), s)


def test_permittivity_monotone_decreasing(drude, plasma):
    sc = TwoFluidSuperconductor(OMEGA_P, GAMMA, 1.0)
    xis = np.geomspace(1e6, 1e16, 41)
    for model, T in ((drude, 0.0), (plasma, 0.0), (sc, 0.5)):
        eps = [permittivity(model, SpectralPoint.imaginary(x), T) for x in xis]
        assert all(e >= 1.0 for e in eps)
        assert all(a > b for a, b in zip(eps, eps[1:]))


def test_spectral_point_domain():
    with pytest.raises(DomainError):
        SpectralPoint.imaginary(0.0)
    with pytest.raises(DomainError):
        SpectralPoint.real(-1.0)


def test_perfect_conductor_permittivity_is_formal_limit():
    eps = permittivity(PerfectConductor(), SpectralPoint.imaginary(1e10))
    assert math.isinf(abs(eps))


# ---------------------------------------------------------------------------
# Fresnel coefficients
# ---------------------------------------------------------------------------

def test_vacuum_reflects_nothing():
    # epsilon = 1 is the gamma -> 0, omega_p -> 0 corner; emulate with a
    # vanishingly small plasma frequency
    pair = fresnel(Plasma(1e-30), SpectralPoint.imaginary(1e10), 1e6)
    assert pair.r_TE == pytest.approx(0.0, abs=1e-30)
    assert pair.r_TM == pytest.approx(0.0, abs=1e-30)


def test_perfect_conductor_reflection():
    for s in (SpectralPoint.imaginary(1e12), SpectralPoint.real(1e12)):
        pair = fresnel(PerfectConductor(), s, 3e6)
        assert pair.r_TE == -1.0
        assert pair.r_TM == 1.0


def test_fresnel_fixture_drude_imaginary():
    # frozen from a 50-digit mpmath evaluation of the reflection formulae
    # at xi = Omega_m, k = 1/(1 um), Drude reference parameters
    pair = fresnel(Drude(OMEGA_P, GAMMA), SpectralPoint.imaginary(OMEGA_M), 1e6)
    assert pair.r_TE == pytest.approx(-0.0073746926982924663, rel=1e-12)
    assert pair.r_TM == pytest.approx(0.99999999313874977, rel=1e-12)


@pytest.mark.parametrize("xi", [1e8, 1e11, 1e14])
@pytest.mark.parametrize("k", [1e2, 1e6, 1e9])
def test_imaginary_axis_reflection_bounds(drude, plasma, xi, k):
    sc = TwoFluidSuperconductor(OMEGA_P, GAMMA, 1.0)
    for model, T in ((drude, 0.0), (plasma, 0.0), (sc, 0.5), (sc, 2.0)):
        pair = fresnel(model, SpectralPoint.imaginary(xi), k, T)
        assert -1.0 <= pair.r_TE <= 0.0
        assert 0.0 <= pair.r_TM <= 1.0


def test_real_axis_branch_convention(drude):
    # kappa carries Im <= 0 so that e^{-2 kappa L} is outgoing/decaying;
    # propagating-sector coefficients stay inside the unit disk (the
    # evanescent TM coefficient may exceed it for lossy media)
    omega = 1e12
    for k in (1e2, omega / C * 0.5, omega / C * 0.99):
        pair = fresnel(drude, SpectralPoint.real(omega), k)
        assert abs(pair.r_TE) <= 1.0 + 1e-12
        assert abs(pair.r_TM) <= 1.0 + 1e-12
    # reconstruct kappa with the stated convention at representative k
    for k in (1e2, omega / C * 0.5, omega / C * 2.0, 1e8):
        kappa = np.sqrt(complex(k**2 - (omega / C) ** 2))
        if kappa.imag > 0:
            kappa = -kappa
        assert kappa.imag <= 0.0
        assert kappa.real >= 0.0


def test_static_limits(drude, plasma):
    k = 2.2e6
    pair = static_reflection(drude, k)
    assert pair.r_TE == 0.0
    assert pair.r_TM == 1.0

    pair = static_reflection(plasma, k)
    skp = math.sqrt(k**2 + (OMEGA_P / C) ** 2)
    assert pair.r_TE == pytest.approx((k - skp) / (k + skp), rel=1e-14)
    assert pair.r_TM == 1.0

    sc = TwoFluidSuperconductor(OMEGA_P, GAMMA, 1.0)
    eta = order_parameter(0.5, 1.0)
    pair = static_reflection(sc, k, T=0.5)
    s_eta = math.sqrt(k**2 + eta * (OMEGA_P / C) ** 2)
    assert pair.r_TE == pytest.approx((k - s_eta) / (k + s_eta), rel=1e-14)
    assert static_reflection(sc, k, T=2.0).r_TE == 0.0

    pc = PerfectCrystal(OMEGA_P, GAMMA, 300.0, 2.0)
    assert static_reflection(pc, k, T=0.1).r_TE == 0.0  # any dissipation quenches
    assert static_reflection(pc, k, T=0.0).r_TE == static_reflection(plasma, k).r_TE


# ---------------------------------------------------------------------------
# asymptotic reflection forms (oracles)
# ---------------------------------------------------------------------------

def test_retarded_asymptote_perfect_conductor_limit():
    s = SpectralPoint.real(1e10)
    pair = fresnel_asymptote(ReflectionRegime.RETARDED, 1e12, s, 1.0)
    assert pair.r_TE == pytest.approx(-1.0, abs=3e-6)
    assert pair.r_TM == pytest.approx(1.0, abs=3e-6)


def test_sub_skin_depth_k_decay(drude):
    # r_TE ~ 1/k^2 at large k
    s = SpectralPoint.real(OMEGA_M)
    eps = permittivity(drude, s)
    r1 = fresnel_asymptote(ReflectionRegime.SUB_SKIN_DEPTH, eps, s, 1e7).r_TE
    r2 = fresnel_asymptote(ReflectionRegime.SUB_SKIN_DEPTH, eps, s, 2e7).r_TE
    assert abs(r2 / r1) == pytest.approx(0.25, rel=1e-12)


def test_non_retarded_interior_agreement(drude):
    # deviation from the exact coefficients < 5% well inside
    # 1/lambda << k << 1/delta
    xi = 1e10
    eps = permittivity(drude, SpectralPoint.imaginary(xi))
    lam = 2.0 * math.pi * C / xi
    delta = (C / OMEGA_P) * math.sqrt(2.0 * GAMMA / xi)
    ks = np.geomspace(100.0 * 2.0 * math.pi / lam, 0.01 / delta, 13)
    for k in ks:
        exact = fresnel(drude, SpectralPoint.imaginary(xi), float(k))
        approx = fresnel_asymptote(
            ReflectionRegime.NON_RETARDED, eps, SpectralPoint.imaginary(xi), float(k)
        )
        assert complex(approx.r_TE).real == pytest.approx(exact.r_TE, rel=0.05)
        assert complex(approx.r_TM).real == pytest.approx(exact.r_TM, rel=0.05)


def test_sub_skin_interior_agreement(drude):
    # k two decades above 1/delta
    xi = 1e10
    eps = permittivity(drude, SpectralPoint.imaginary(xi))
    delta = (C / OMEGA_P) * math.sqrt(2.0 * GAMMA / xi)
    for k in (100.0 / delta, 300.0 / delta):
        exact = fresnel(drude, SpectralPoint.imaginary(xi), k)
        approx = fresnel_asymptote(
            ReflectionRegime.SUB_SKIN_DEPTH, eps, SpectralPoint.imaginary(xi), k
        )
        assert complex(approx.r_TE).real == pytest.approx(exact.r_TE, rel=0.05)
        assert complex(approx.r_TM).real == pytest.approx(exact.r_TM, rel=0.05)


def test_retarded_interior_agreement(drude):
    # k two decades below xi/c
    xi = 1e10
    eps = permittivity(drude, SpectralPoint.imaginary(xi))
    for k in (0.01 * xi / C, 0.003 * xi / C):
        exact = fresnel(drude, SpectralPoint.imaginary(xi), k)
        approx = fresnel_asymptote(
            ReflectionRegime.RETARDED, eps, SpectralPoint.imaginary(xi), k
        )
        assert complex(approx.r_TE).real == pytest.approx(exact.r_TE, rel=0.05)
        assert complex(approx.r_TM).real == pytest.approx(exact.r_TM, rel=0.05)


def test_fresnel_domain_errors(drude):
    with pytest.raises(DomainError):
        fresnel(drude, SpectralPoint.imaginary(1e10), -1.0)
