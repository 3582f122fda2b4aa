import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from magcp import (
    CODATA,
    Rb87Hyperfine,
    SpectralPoint,
    clebsch_gordan,
    nanosphere_polarizability,
    state_polarizability,
    thermal_polarizability,
    transition_table,
)
from magcp.errors import DomainError, PoleProximityError

from conftest import GAMMA, MU_X2, OMEGA_M, OMEGA_P

HBAR = CODATA.hbar
KB = CODATA.kB
SCALE = CODATA.gS * CODATA.muB  # dipole scale g_S mu_B

MI_VALS = (-1.5, -0.5, 0.5, 1.5)
MS_VALS = (-0.5, 0.5)
PRODUCT_BASIS = [(mi, ms) for mi in MI_VALS for ms in MS_VALS]
COUPLED_STATES = [(F, mF) for F in (1, 2) for mF in range(-F, F + 1)]


# ---------------------------------------------------------------------------
# Clebsch-Gordan: textbook values, selection rules, diagonalization oracle
# ---------------------------------------------------------------------------

def test_spin_half_pair_value():
    assert clebsch_gordan(0.5, 0.5, 0.5, -0.5, 1, 0) == pytest.approx(
        1.0 / math.sqrt(2.0), abs=1e-15
    )


def test_magnetic_selection_rule():
    assert clebsch_gordan(0.5, 0.5, 0.5, 0.5, 1, 0) == 0.0
    assert clebsch_gordan(1.5, 0.5, 0.5, 0.5, 2, 2) == 0.0


def test_triangle_rule():
    assert clebsch_gordan(1.5, 0.5, 0.5, 0.5, 3, 1) == 0.0
    assert clebsch_gordan(1.5, 0.5, 0.5, -0.5, 0, 0) == 0.0


def test_invalid_quantum_numbers():
    with pytest.raises(DomainError):
        clebsch_gordan(0.5, 0.5, 0.7, -0.5, 1, 0.2)
    with pytest.raises(DomainError):
        clebsch_gordan(0.5, 0.5, 1.5, -0.5, 1, 1)  # |m| > j
    with pytest.raises(DomainError):
        clebsch_gordan(1.0, 0.5, 0.5, -0.5, 1, 0)  # m not integral with j


def _angular_momentum_matrices(j, mvals):
    dim = len(mvals)
    jz = np.diag(mvals).astype(complex)
    jp = np.zeros((dim, dim), dtype=complex)
    for i, m in enumerate(mvals[:-1]):
        jp[i + 1, i] = math.sqrt(j * (j + 1) - m * (m + 1))
    jm = jp.conj().T
    return (jp + jm) / 2.0, (jp - jm) / 2j, jz


def f2_diagonalization_oracle():
    """Eigenvectors of total F^2 (+ epsilon Fz to lift degeneracy)."""
    ix, iy, iz = _angular_momentum_matrices(1.5, MI_VALS)
    sx, sy, sz = _angular_momentum_matrices(0.5, MS_VALS)
    eye_i, eye_s = np.eye(4), np.eye(2)
    fx = np.kron(ix, eye_s) + np.kron(eye_i, sx)
    fy = np.kron(iy, eye_s) + np.kron(eye_i, sy)
    fz = np.kron(iz, eye_s) + np.kron(eye_i, sz)
    f2 = fx @ fx + fy @ fy + fz @ fz
    evals, evecs = np.linalg.eigh(f2 + 1e-3 * fz)
    return evals, evecs


def test_full_table_matches_f2_oracle():
    # acceptance: spin-1/2 x spin-3/2 coefficients vs brute-force
    # diagonalization, matched up to phase, to 1e-12
    evals, evecs = f2_diagonalization_oracle()
    matched = 0
    for col in range(8):
        for F, mF in COUPLED_STATES:
            if abs(F * (F + 1) + 1e-3 * mF - evals[col]) < 1e-6:
                vec = evecs[:, col].real
                cg = np.array(
                    [clebsch_gordan(1.5, 0.5, mi, ms, F, mF) for mi, ms in PRODUCT_BASIS]
                )
                sign = 1.0 if np.dot(vec, cg) >= 0.0 else -1.0
                assert np.max(np.abs(sign * vec - cg)) < 1e-12
                matched += 1
    assert matched == 8


@settings(max_examples=80, deadline=None)
@given(
    dj1=st.integers(0, 5),
    dj2=st.integers(0, 4),
)
def test_orthonormality(dj1, dj2):
    """Rows of the CG matrix are orthonormal for every (j1, j2) block."""
    j1, j2 = dj1 / 2.0, dj2 / 2.0
    m1s = [m / 2.0 for m in range(-dj1, dj1 + 1, 2)]
    m2s = [m / 2.0 for m in range(-dj2, dj2 + 1, 2)]
    dFs = range(abs(dj1 - dj2), dj1 + dj2 + 1, 2)
    rows = []
    for dF in dFs:
        F = dF / 2.0
        for dmF in range(-dF, dF + 1, 2):
            mF = dmF / 2.0
            rows.append(
                [clebsch_gordan(j1, j2, m1, m2, F, mF) for m1 in m1s for m2 in m2s]
            )
    gram = np.array(rows) @ np.array(rows).T
    assert np.max(np.abs(gram - np.eye(len(rows)))) < 1e-12


# ---------------------------------------------------------------------------
# transition tables
# ---------------------------------------------------------------------------

def test_two_level_elements_exact(two_level):
    (tr,) = transition_table(two_level)
    sx, sy, sz = tr.strength()
    assert sx == (SCALE / 2.0) ** 2
    assert sy == (SCALE / 2.0) ** 2
    assert sz == 0.0
    assert tr.omega_ba == OMEGA_M


def test_two_level_hermiticity(two_level):
    (up,) = two_level.transitions_from("g")
    (down,) = two_level.transitions_from("e")
    assert down.omega_ba == -up.omega_ba
    assert down.mu_x == np.conj(up.mu_x)
    assert down.mu_y == np.conj(up.mu_y)


@pytest.fixture
def rb87():
    return Rb87Hyperfine(2.0 * math.pi * 6.8e9, 2.0 * OMEGA_M)


def test_rb87_selection_rules(rb87):
    for tr in transition_table(rb87):
        f_from, mf_from = map(int, tr.from_state.split(","))
        f_to, mf_to = map(int, tr.to_state.split(","))
        dm = mf_to - mf_from
        assert dm in (-1, 0, 1)
        if dm == 0:
            assert abs(tr.mu_z) > 0.0 and tr.mu_x == 0.0 and tr.mu_y == 0.0
        else:
            assert tr.mu_z == 0.0 and abs(tr.mu_x) > 0.0


def test_rb87_trappable_state_has_downward_zeeman_channel(rb87):
    # |1,-1> is a weak-field seeker: it sits at the top of the F = 1
    # Zeeman ladder, so the neighbouring |1,0> lies below
    table = {tr.to_state: tr for tr in transition_table(rb87)}
    assert table["1,0"].omega_ba < 0.0
    assert table["2,-2"].omega_ba > 0.0


def rb87_operator_matrices_oracle():
    """Dipole operator matrices in the coupled basis, built independently."""
    sx = np.zeros((8, 8), dtype=complex)
    sy = np.zeros((8, 8), dtype=complex)
    sz = np.zeros((8, 8), dtype=complex)
    for j, (mi, ms) in enumerate(PRODUCT_BASIS):
        for i, (mi2, ms2) in enumerate(PRODUCT_BASIS):
            if mi2 == mi and ms2 == -ms:
                sx[i, j] = 0.5
                sy[i, j] = 1j * ms
            if mi2 == mi and ms2 == ms:
                sz[i, j] = ms
    u = np.zeros((8, 8))
    for col, (F, mF) in enumerate(COUPLED_STATES):
        u[:, col] = [clebsch_gordan(1.5, 0.5, mi, ms, F, mF) for mi, ms in PRODUCT_BASIS]
    mx = SCALE * u.T @ sx @ u
    my = SCALE * u.T @ sy @ u
    mz = SCALE * u.T @ sz @ u
    return mx, my, mz


def test_rb87_elements_match_matrix_oracle(rb87):
    mx, my, mz = rb87_operator_matrices_oracle()
    a = COUPLED_STATES.index((1, -1))
    for tr in transition_table(rb87):
        b = COUPLED_STATES.index(tuple(map(int, tr.to_state.split(","))))
        assert abs(tr.mu_x) ** 2 == pytest.approx(abs(mx[a, b]) ** 2, abs=1e-60)
        assert abs(tr.mu_y) ** 2 == pytest.approx(abs(my[a, b]) ** 2, abs=1e-60)
        assert abs(tr.mu_z) ** 2 == pytest.approx(abs(mz[a, b]) ** 2, abs=1e-60)


def test_rb87_hermiticity(rb87):
    fwd = {tr.to_state: tr for tr in rb87.transitions_from("1,-1")}
    rev = {tr.to_state: tr for tr in rb87.transitions_from("1,0")}
    up = fwd["1,0"]
    down = rev["1,-1"]
    assert down.omega_ba == -up.omega_ba
    assert down.mu_x == np.conj(up.mu_x)
    assert down.mu_y == np.conj(up.mu_y)
    assert down.mu_z == np.conj(up.mu_z)


def test_rb87_sum_rule(rb87):
    # sum_b |mu|^2 over the full manifold (including the zero-frequency
    # diagonal) equals (g_S mu_B)^2 S(S+1)
    mx, my, mz = rb87_operator_matrices_oracle()
    a = COUPLED_STATES.index((1, -1))
    total = sum(
        abs(mx[a, b]) ** 2 + abs(my[a, b]) ** 2 + abs(mz[a, b]) ** 2 for b in range(8)
    )
    assert total == pytest.approx(SCALE**2 * 0.75, rel=1e-12)
    # table entries cover everything except omega_ba = 0 terms
    table_sum = sum(sum(tr.strength()) for tr in transition_table(rb87))
    diag = abs(mz[a, a]) ** 2
    assert table_sum + diag == pytest.approx(total, rel=1e-12)


# ---------------------------------------------------------------------------
# polarizability
# ---------------------------------------------------------------------------

def test_static_polarizability_two_level(two_level):
    beta = state_polarizability(transition_table(two_level), SpectralPoint.imaginary(1e-3))
    ref = 2.0 * MU_X2 / (HBAR * OMEGA_M)
    assert beta.beta_xx == pytest.approx(ref, rel=1e-6)
    assert beta.beta_zz == 0.0


def test_polarizability_monotone_positive(two_level):
    transitions = transition_table(two_level)
    xis = np.geomspace(1e6, 1e13, 29)
    vals = [state_polarizability(transitions, SpectralPoint.imaginary(x)).beta_xx for x in xis]
    assert all(v > 0.0 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_polarizability_high_frequency_decay(two_level):
    transitions = transition_table(two_level)
    b1 = state_polarizability(transitions, SpectralPoint.imaginary(100.0 * OMEGA_M)).beta_xx
    b2 = state_polarizability(transitions, SpectralPoint.imaginary(200.0 * OMEGA_M)).beta_xx
    assert b1 / b2 == pytest.approx(4.0, rel=1e-3)


def test_excited_state_flips_sign(two_level):
    s = SpectralPoint.imaginary(1e8)
    g = state_polarizability(two_level.transitions_from("g"), s)
    e = state_polarizability(two_level.transitions_from("e"), s)
    assert e.beta_xx == pytest.approx(-g.beta_xx, rel=1e-14)


def test_real_axis_pole_window(two_level):
    transitions = transition_table(two_level)
    with pytest.raises(PoleProximityError):
        state_polarizability(transitions, SpectralPoint.real(OMEGA_M * (1.0 + 1e-8)))
    # outside the window the principal-value form evaluates fine
    beta = state_polarizability(transitions, SpectralPoint.real(2.0 * OMEGA_M))
    assert beta.beta_xx < 0.0


def test_thermal_factor_values(two_level):
    s = SpectralPoint.imaginary(1e9)
    g = thermal_polarizability(two_level, 0.0, s)
    t2 = HBAR * OMEGA_M / (2.0 * KB)  # hbar Omega / kB T = 2
    bt = thermal_polarizability(two_level, t2, s)
    assert bt.beta_xx / g.beta_xx == pytest.approx(math.tanh(1.0), rel=1e-12)


@given(st.floats(1e-6, 1e4))
def test_thermal_factor_bounds(T):
    x = HBAR * OMEGA_M / (2.0 * KB * T)
    f = math.tanh(x)
    assert 0.0 < f <= 1.0


def test_keesom_limit(two_level):
    # beta_an(i xi_n) * kB T * xi_n^2 -> |mu_x|^2 Omega_m^2 at high T
    for T in (50.0, 500.0):
        xi_n = 2.0 * math.pi * KB * T / HBAR  # n = 1
        beta = thermal_polarizability(two_level, T, SpectralPoint.imaginary(xi_n))
        assert beta.beta_xx * KB * T * xi_n**2 == pytest.approx(
            MU_X2 * OMEGA_M**2, rel=2e-2
        )


def test_rb87_thermal_vanishes_at_high_T(rb87):
    s = SpectralPoint.imaginary(1e9)
    hot = HBAR * rb87.omega_hf / (KB * 1e-3)  # hbar Omega_hf / kB T = 1e-3
    b_hot = thermal_polarizability(rb87, hot, s)
    b_cold = thermal_polarizability(rb87, 0.0, s)
    for attr in ("beta_xx", "beta_yy", "beta_zz"):
        assert abs(getattr(b_hot, attr)) < 1e-2 * abs(b_cold.beta_xx)


def test_rb87_ground_state_is_top_of_inverted_ladder(rb87):
    assert rb87.ground_state == "1,1"


def test_weak_field_advisory():
    with pytest.warns(UserWarning):
        Rb87Hyperfine(2.0 * math.pi * 6.8e9, 2.0 * math.pi * 2.0e9)


# ---------------------------------------------------------------------------
# nanosphere
# ---------------------------------------------------------------------------

def test_nanosphere_low_frequency_vanishes(drude):
    R = 5e-10
    vals = [
        abs(nanosphere_polarizability(R, drude, SpectralPoint.real(w)))
        for w in (1e6, 1e5, 1e4)
    ]
    assert vals[1] < 0.2 * vals[0]
    assert vals[2] < 0.2 * vals[1]


def test_nanosphere_diamagnetic_real_axis(drude):
    R = 5e-10
    for w in (1e10, 1e13, 0.3 * OMEGA_P):
        beta = nanosphere_polarizability(R, drude, SpectralPoint.real(w))
        assert beta.real < 0.0


def test_nanosphere_negative_on_imaginary_axis(drude):
    R = 5e-10
    beta = nanosphere_polarizability(R, drude, SpectralPoint.imaginary(1e12))
    eps = 1.0 + OMEGA_P**2 / (1e12 * (1e12 + GAMMA))
    ref = -2.0 * math.pi / (15.0 * CODATA.mu0) * (R * 1e12 / CODATA.c) ** 2 * (eps - 1.0) * R**3
    assert beta == pytest.approx(ref, rel=1e-12)
    assert beta < 0.0


def test_nanosphere_radius_advisory(drude):
    with pytest.warns(UserWarning):
        nanosphere_polarizability(1e-5, drude, SpectralPoint.imaginary(1e10))
