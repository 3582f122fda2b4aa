"""Free energies of interaction, entropy, and closed-form asymptotic laws.

The equilibrium free energy is the primed Matsubara sum
F = -kB T sum' beta_ij(i xi_n) H_ji(L, i xi_n), with the n = 0 term at half
weight and xi_n = 2 pi n kB T / hbar.  The sum is truncated once
N g_N / (tau Sigma) < u (tau = max(1, L/Lambda_T)) and the dropped tail is
restored by the Euler-Maclaurin remainder integral, so the truncation error
is far below u itself.  State-resolved free energies add the resonant
real-frequency term with exact Bose-Einstein occupation.

Entropy is the numerical temperature derivative with Richardson refinement;
paired evaluations share identical truncation settings and never switch to
the zero-temperature integral path, which would erase the temperature
dependence being differentiated.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Callable, Optional, Tuple

import numpy as np

from .atom import (
    AtomSpec,
    Orientation,
    Rb87Hyperfine,
    TwoLevelAtom,
    _beta_imag_arrays,
    _thermal_beta_imag_arrays,
)
from .constants import CODATA, thermal_wavelength
from .errors import ConvergenceError, DomainError, TruncationError
from .greens import adaptive_panels, greens_imag_batch, magnetic_green_imag, magnetic_green_real
from .materials import MaterialModel, Plasma, TwoFluidSuperconductor

__all__ = [
    "NumericsSettings",
    "Scenario",
    "FreeEnergyResult",
    "EntropyResult",
    "AsymptoteValue",
    "free_energy_equilibrium",
    "free_energy_zero_temperature",
    "free_energy_state",
    "free_energy_state_high_temperature",
    "entropy",
    "entropy_defect",
    "free_energy_asymptote",
    "ASYMPTOTE_KINDS",
]

_hbar = CODATA.hbar
_kB = CODATA.kB
_c = CODATA.c
_mu0 = CODATA.mu0


@dataclass(frozen=True)
class NumericsSettings:
    """Numerical policy shared by all operations of one computation.

    ``truncation_u`` is the Matsubara truncation target (the remainder
    integral is always added on top).  ``low_temperature_delegation``
    switches the equilibrium sum to the zero-temperature integral once the
    Matsubara spacing resolves all spectral structure by a factor
    ``delegation_ratio``; entropy evaluations disable it internally.
    """

    truncation_u: float = 1e-6
    quad_rtol: float = 1e-8
    max_matsubara_terms: int = 1_000_000
    max_quad_nodes: int = 1_000_000
    low_temperature_delegation: bool = True
    delegation_ratio: float = 1e-2
    entropy_rtol: float = 1e-2

    def __post_init__(self):
        if not (1e-12 <= self.truncation_u < 1.0):
            raise DomainError("truncation_u out of range")


DEFAULT_NUMERICS = NumericsSettings()


@dataclass(frozen=True)
class Scenario:
    """What is being computed: atom, surface model, preparation, geometry."""

    atom: AtomSpec
    material: MaterialModel
    mode: str = "equilibrium"  # "equilibrium" | "state"
    state: Optional[str] = None
    geometry: Optional[Orientation] = None

    def __post_init__(self):
        if self.mode not in ("equilibrium", "state"):
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.resolved_geometry is Orientation.ISOTROPIC and not isinstance(
            self.atom, TwoLevelAtom
        ):
            raise DomainError("isotropic geometry is only defined for the two-level atom")

    @property
    def resolved_geometry(self) -> Orientation:
        if self.geometry is not None:
            return self.geometry
        if isinstance(self.atom, TwoLevelAtom):
            return self.atom.orientation
        return Orientation.ANISOTROPIC

    @property
    def resolved_state(self) -> str:
        if self.state is not None:
            return self.state
        if isinstance(self.atom, Rb87Hyperfine):
            f, mf = self.atom.prepared_state
            return f"{f},{mf}"
        return self.atom.ground_state


@dataclass(frozen=True)
class FreeEnergyResult:
    """Free energy with its resonant/non-resonant split and diagnostics."""

    value: float
    nonresonant: float
    resonant: float
    n_terms: int
    remainder: float
    truncation_u: float
    method: str  # "matsubara" | "integral"


@dataclass(frozen=True)
class EntropyResult:
    """Entropy estimate with step-halving diagnostics.

    ``sides`` holds the two one-sided derivatives when the evaluation sits
    at the superconducting transition, where S jumps.
    """

    value: float
    estimates: Tuple[float, ...]
    converged: bool
    sides: Optional[dict] = None

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class AsymptoteValue:
    value: float
    validity: str


# ---------------------------------------------------------------------------
# contraction and polarizability plumbing
# ---------------------------------------------------------------------------

def _contract(geometry: Orientation, bxx, byy, bzz, hxx, hzz):
    """beta_ij H_ji for diagonal tensors; isotropic uses the sublevel average."""
    if geometry is Orientation.ISOTROPIC:
        return (bxx + byy + bzz) * (2.0 * hxx + hzz) / 3.0
    return (bxx + byy) * hxx + bzz * hzz


def _beta_fn(scenario: Scenario, T: float) -> Callable:
    if scenario.mode == "equilibrium":
        atom = scenario.atom

        def fn(xi):
            return _thermal_beta_imag_arrays(atom, T, xi)

        return fn

    transitions = scenario.atom.transitions_from(scenario.resolved_state)

    def fn(xi):
        return _beta_imag_arrays(transitions, xi)

    return fn


def _g_values(L, xi, scenario, T, beta_fn):
    hxx, hzz = greens_imag_batch(L, xi, scenario.material, T)
    bxx, byy, bzz = beta_fn(np.asarray(xi, dtype=float))
    return _contract(scenario.resolved_geometry, bxx, byy, bzz, hxx, hzz)


def _structure_scale(L: float, scenario: Scenario, T: float) -> float:
    """Smallest frequency scale the Matsubara spacing must resolve.

    Below xi_1 << this scale the primed sum is a converged trapezoid rule
    for the zero-temperature integral and every thermal factor (tanh
    occupation, Boltzmann weights) has reached its T -> 0 limit
    exponentially well, so delegation to the integral is safe.
    """
    scales = [_c / L]
    for tr in scenario.atom.transitions_from(scenario.resolved_state):
        scales.append(abs(tr.omega_ba))
    knee = _skin_knee(scenario.material, L, T)
    if knee is not None:
        scales.append(knee)
    return min(scales)


def _skin_knee(material, L: float, T: float):
    """Frequency where the skin depth matches L, for dissipative responses.

    Uses the effective scattering rate at temperature T so that models
    whose dissipation vanishes (plasma, superconductor or perfect crystal
    at T = 0) share the numeric policy of the plasma model exactly.
    """
    from .materials import effective_gamma

    gamma = effective_gamma(material, T)
    if gamma is None:
        return None
    return 2.0 * gamma * (_c / (material.omega_p * L)) ** 2


# ---------------------------------------------------------------------------
# Matsubara summation with truncation criterion and remainder integral
# ---------------------------------------------------------------------------

def _matsubara_sum(L, T, scenario, beta_fn, numerics, include_zero=True):
    """Primed Matsubara sum plus remainder integral.

    Returns (sum_including_remainder_parts, n_terms, remainder_term) where
    the first element is  sum'_{n<=N} g_n  and ``remainder_term`` is the
    integral of g over n in (N, inf).
    """
    xi1 = 2.0 * math.pi * _kB * T / _hbar
    tau = max(1.0, L / thermal_wavelength(T))
    u = numerics.truncation_u
    cap = numerics.max_matsubara_terms

    total = 0.0
    if include_zero:
        g0 = float(_g_values(L, np.array([0.0]), scenario, T, beta_fn)[0])
        total += 0.5 * g0

    n_start = 1
    block = 64
    n_used = 0
    g_last = None
    while True:
        n_end = min(n_start + block - 1, cap)
        ns = np.arange(n_start, n_end + 1, dtype=float)
        g = _g_values(L, ns * xi1, scenario, T, beta_fn)
        total += float(np.sum(g))
        n_used = n_end
        g_last = float(g[-1])
        if g_last == 0.0:
            # Green's cutoff underflowed: the sum is exactly complete
            return total, n_used, 0.0
        ratio = abs(n_used * g_last / tau) / max(abs(total), 1e-300)
        if ratio < u:
            break
        if n_used >= cap:
            raise TruncationError(
                f"Matsubara sum did not meet u={u} within {cap} terms "
                f"(ratio {ratio:.2e}); raise truncation_u or the term cap",
                n_terms=n_used,
                ratio=ratio,
            )
        n_start = n_end + 1
        block = min(2 * block, 16384)

    remainder = _remainder_integral(L, T, scenario, beta_fn, n_used * xi1, xi1, numerics)
    return total, n_used, remainder


def _remainder_integral(L, T, scenario, beta_fn, xi_N, xi1, numerics):
    """integral_N^inf g(i xi_n) dn, evaluated in xi on a log grid."""
    omega_char = scenario.atom.max_transition_frequency
    xi_hi = max(10.0 * xi_N, 40.0 * _c / (2.0 * L), 100.0 * omega_char)

    def f(lnxi):
        xi = np.exp(lnxi)
        return _g_values(L, xi, scenario, T, beta_fn) * xi

    lo, hi = math.log(xi_N), math.log(xi_hi)
    edges = np.linspace(lo, hi, 9)
    val, _, _ = adaptive_panels(
        f, edges, rtol=min(1e-6, numerics.truncation_u / 10.0), max_nodes=numerics.max_quad_nodes
    )
    # algebraic 1/xi^2 tail beyond xi_hi (exact for the Lorentzian decay,
    # negligible once the exponential cutoff is active)
    g_hi = float(_g_values(L, np.array([xi_hi]), scenario, T, beta_fn)[0])
    return (val + g_hi * xi_hi) / xi1


# ---------------------------------------------------------------------------
# free energies
# ---------------------------------------------------------------------------

def free_energy_equilibrium(
    L: float,
    T: float,
    scenario: Scenario,
    numerics: NumericsSettings = DEFAULT_NUMERICS,
) -> FreeEnergyResult:
    """Equilibrium Casimir-Polder free energy at (L, T), in joules.

    T = 0, or any temperature fine enough that the Matsubara spacing
    resolves all spectral structure (when delegation is enabled), routes to
    the zero-temperature frequency integral.
    """
    if L <= 0.0:
        raise DomainError("distance must be positive")
    if T < 0.0:
        raise DomainError("temperature must be non-negative")
    if scenario.mode != "equilibrium":
        raise DomainError("free_energy_equilibrium requires an equilibrium scenario")

    if T == 0.0:
        return free_energy_zero_temperature(L, scenario, numerics)

    xi1 = 2.0 * math.pi * _kB * T / _hbar
    if numerics.low_temperature_delegation:
        if xi1 < numerics.delegation_ratio * _structure_scale(L, scenario, T):
            return free_energy_zero_temperature(L, scenario, numerics)

    beta_fn = _beta_fn(scenario, T)
    total, n_terms, remainder = _matsubara_sum(L, T, scenario, beta_fn, numerics)
    value = -_kB * T * (total + remainder)
    return FreeEnergyResult(
        value=value,
        nonresonant=value,
        resonant=0.0,
        n_terms=n_terms,
        remainder=-_kB * T * remainder,
        truncation_u=numerics.truncation_u,
        method="matsubara",
    )


def _zero_t_edges(L, scenario):
    """Breakpoints in s = 2 xi L / c covering atomic and material structure.

    The material knee uses the effective T = 0 dissipation, so that models
    which become dissipationless at zero temperature integrate on exactly
    the plasma-model panel set (exact code-path identity).
    """
    s_max = 60.0
    pts = {0.5, 2.0, 8.0, 20.0, 40.0}
    freqs = [abs(tr.omega_ba) for tr in scenario.atom.transitions_from(scenario.resolved_state)]
    knee = _skin_knee(scenario.material, L, T=0.0)
    if knee is not None:
        pts.add(2.0 * knee * L / _c)
    for om in freqs:
        pts.add(2.0 * om * L / _c)
    edges = {0.0, s_max}
    for p in pts:
        for f in (0.1, 0.3, 1.0, 3.0, 10.0):
            q = p * f
            if 1e-12 < q < s_max:
                edges.add(q)
    return np.array(sorted(edges))


def free_energy_zero_temperature(
    L: float,
    scenario: Scenario,
    numerics: NumericsSettings = DEFAULT_NUMERICS,
) -> FreeEnergyResult:
    """T -> 0 free energy: -(hbar/2 pi) integral of the contraction over xi."""
    if L <= 0.0:
        raise DomainError("distance must be positive")
    # equilibrium at T = 0 is the ground state; state beta is T-independent
    beta_fn = _beta_fn(scenario, 0.0)

    def f(s):
        xi = s * _c / (2.0 * L)
        return _g_values(L, xi, scenario, 0.0, beta_fn)

    edges = _zero_t_edges(L, scenario)
    val, _, _ = adaptive_panels(
        f, edges, rtol=numerics.quad_rtol, max_nodes=numerics.max_quad_nodes
    )
    value = -(_hbar / (2.0 * math.pi)) * (_c / (2.0 * L)) * val
    return FreeEnergyResult(
        value=value,
        nonresonant=value,
        resonant=0.0,
        n_terms=0,
        remainder=0.0,
        truncation_u=numerics.truncation_u,
        method="integral",
    )


def _bose(omega: float, T: float) -> float:
    """Bose-Einstein occupation, continued to negative frequencies."""
    if T == 0.0:
        return 0.0 if omega > 0.0 else -1.0
    x = _hbar * omega / (_kB * T)
    if x > 700.0:
        return 0.0
    if x < -700.0:
        return -1.0
    return 1.0 / math.expm1(x)


def _resonant_sum(L, T, scenario, numerics, occupation):
    """sum_b occ(omega_ba) * mu_i mu_i* Re H_ii(L, |omega_ba|)."""
    transitions = scenario.atom.transitions_from(scenario.resolved_state)
    cache = {}
    total = 0.0
    iso = scenario.resolved_geometry is Orientation.ISOTROPIC
    for tr in transitions:
        w = abs(tr.omega_ba)
        if w not in cache:
            g = magnetic_green_real(
                L, w, scenario.material, T, rtol=numerics.quad_rtol,
                max_nodes=numerics.max_quad_nodes,
            )
            cache[w] = (g.H_xx.real, g.H_zz.real)
        re_hxx, re_hzz = cache[w]
        sx, sy, sz = tr.strength()
        if iso:
            contraction = (sx + sy + sz) * (2.0 * re_hxx + re_hzz) / 3.0
        else:
            contraction = (sx + sy) * re_hxx + sz * re_hzz
        total += occupation(tr.omega_ba) * contraction
    return total


def free_energy_state(
    L: float,
    T: float,
    scenario: Scenario,
    numerics: NumericsSettings = DEFAULT_NUMERICS,
) -> FreeEnergyResult:
    """Free energy for an atom prepared in a fixed state near a surface at T.

    Non-resonant part: Matsubara sum with the temperature-independent state
    polarizability.  Resonant part: Bose-weighted response at the (real)
    transition frequencies; at T = 0 only downward transitions survive with
    occupation -1.
    """
    if L <= 0.0:
        raise DomainError("distance must be positive")
    if T < 0.0:
        raise DomainError("temperature must be non-negative")
    if scenario.mode != "state":
        raise DomainError("free_energy_state requires a state-resolved scenario")

    beta_fn = _beta_fn(scenario, T)
    if T == 0.0:
        nonres_result = free_energy_zero_temperature(L, scenario, numerics)
        nonres = nonres_result.value
        n_terms, remainder = 0, 0.0
        method = "integral"
    else:
        total, n_terms, rem = _matsubara_sum(L, T, scenario, beta_fn, numerics)
        nonres = -_kB * T * (total + rem)
        remainder = -_kB * T * rem
        method = "matsubara"

    resonant = _resonant_sum(L, T, scenario, numerics, lambda w: _bose(w, T))
    return FreeEnergyResult(
        value=nonres + resonant,
        nonresonant=nonres,
        resonant=resonant,
        n_terms=n_terms,
        remainder=remainder,
        truncation_u=numerics.truncation_u,
        method=method,
    )


def free_energy_state_high_temperature(
    L: float,
    T: float,
    scenario: Scenario,
    numerics: NumericsSettings = DEFAULT_NUMERICS,
) -> FreeEnergyResult:
    """Classical-occupation reduction of the state-resolved free energy.

    Cross-check for `free_energy_state` at kB T >> hbar |omega_ba|: the
    occupation is linearised and the n = 0 Matsubara term cancels against
    the static part of the resonant response, leaving the printed high-T
    forms (two-level and multilevel alike).
    """
    if T <= 0.0:
        raise DomainError("high-temperature form needs T > 0")
    if scenario.mode != "state":
        raise DomainError("requires a state-resolved scenario")
    omega_max = scenario.atom.max_transition_frequency
    if _kB * T < 5.0 * _hbar * omega_max:
        warnings.warn(
            "high-temperature reduction used at kB T < 5 hbar omega_max",
            stacklevel=2,
        )

    beta_fn = _beta_fn(scenario, T)
    total, n_terms, rem = _matsubara_sum(
        L, T, scenario, beta_fn, numerics, include_zero=False
    )
    nonres = -_kB * T * (total + rem)

    # classical occupation kB T / (hbar omega) against the static response
    h_static = magnetic_green_imag(
        L, 0.0, scenario.material, T, rtol=numerics.quad_rtol,
        max_nodes=numerics.max_quad_nodes,
    )
    transitions = scenario.atom.transitions_from(scenario.resolved_state)
    iso = scenario.resolved_geometry is Orientation.ISOTROPIC
    resonant = _resonant_sum(
        L, T, scenario, numerics, lambda w: _kB * T / (_hbar * w)
    )
    static_part = 0.0
    for tr in transitions:
        sx, sy, sz = tr.strength()
        if iso:
            contraction = (sx + sy + sz) * (2.0 * h_static.H_xx + h_static.H_zz) / 3.0
        else:
            contraction = (sx + sy) * h_static.H_xx + sz * h_static.H_zz
        static_part += _kB * T / (_hbar * tr.omega_ba) * contraction
    resonant -= static_part

    return FreeEnergyResult(
        value=nonres + resonant,
        nonresonant=nonres,
        resonant=resonant,
        n_terms=n_terms,
        remainder=-_kB * T * rem,
        truncation_u=numerics.truncation_u,
        method="matsubara",
    )


# ---------------------------------------------------------------------------
# entropy
# ---------------------------------------------------------------------------

def _entropy_numerics(numerics: NumericsSettings) -> NumericsSettings:
    # differencing across the integral/sum switch would be meaningless
    return replace(numerics, low_temperature_delegation=False)


def entropy(
    L: float,
    T: float,
    scenario: Scenario,
    step: float = 1e-3,
    numerics: NumericsSettings = DEFAULT_NUMERICS,
) -> EntropyResult:
    """Atom-surface entropy S = -dF/dT by Richardson-refined differences.

    All stencil evaluations share one truncation policy.  Within five
    relative steps of a superconducting transition the two one-sided
    derivatives are computed instead (S jumps at Tc) and the value for the
    requested side is returned, both being reported in ``sides``.
    """
    if T <= 0.0:
        raise DomainError("entropy needs T > 0")
    if scenario.mode != "equilibrium":
        raise DomainError("entropy is defined for the equilibrium scenario")
    num = _entropy_numerics(numerics)
    h = step * T

    def F(tt: float) -> float:
        return free_energy_equilibrium(L, tt, scenario, num).value

    material = scenario.material
    if isinstance(material, TwoFluidSuperconductor) and abs(T - material.Tc) <= 5.0 * h:
        tc = material.Tc
        sides = {}
        for side, sgn in (("below", -1.0), ("above", +1.0)):
            vals = {}

            def one_sided(hh):
                pts = [tc, tc + sgn * hh, tc + sgn * 2.0 * hh]
                f = [vals.setdefault(p, F(p)) for p in pts]
                # second-order one-sided derivative at Tc
                d = sgn * (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * hh)
                return -d

            s_h = one_sided(h)
            s_h2 = one_sided(h / 2.0)
            sides[side] = float((4.0 * s_h2 - s_h) / 3.0)
        value = sides["below"] if T < tc else sides["above"]
        return EntropyResult(
            value=value,
            estimates=(sides["below"], sides["above"]),
            converged=True,
            sides=sides,
        )

    def central(hh: float) -> float:
        return (F(T + hh) - F(T - hh)) / (2.0 * hh)

    d_h = float(central(h))
    d_h2 = float(central(h / 2.0))
    richardson = (4.0 * d_h2 - d_h) / 3.0
    s_value = -richardson
    spread = abs(d_h2 - d_h)
    scale = max(abs(d_h), abs(d_h2), 1e-300)
    converged = spread <= 10.0 * numerics.entropy_rtol * scale
    if not converged and spread > 0.5 * scale:
        raise ConvergenceError(
            f"entropy finite difference did not settle at T={T}: "
            f"D(h)={d_h:.3e}, D(h/2)={d_h2:.3e}"
        )
    return EntropyResult(
        value=s_value,
        estimates=(-d_h, -d_h2, s_value),
        converged=converged,
    )


def entropy_defect(
    L: float,
    atom: TwoLevelAtom,
    omega_p: float,
    closed_form: bool = False,
    numerics: NumericsSettings = DEFAULT_NUMERICS,
) -> float:
    """Residual T -> 0 entropy of the perfect-crystal model, in J/K.

    Exact form: -kB beta(0) H_xx(L, 0) with the plasma static response at
    the same plasma frequency.  The closed form applies for L >> lambda_p
    and decays as 1/L^3.
    """
    if L <= 0.0:
        raise DomainError("distance must be positive")
    mu_x2 = atom.mu_x2
    if closed_form:
        return _kB * _mu0 * mu_x2 / (16.0 * math.pi * _hbar * atom.omega_m * L**3)
    beta0 = 2.0 * mu_x2 / (_hbar * atom.omega_m)
    g = magnetic_green_imag(
        L, 0.0, Plasma(omega_p), 0.0, rtol=numerics.quad_rtol,
        max_nodes=numerics.max_quad_nodes,
    )
    return -_kB * beta0 * g.H_xx


# ---------------------------------------------------------------------------
# closed-form free-energy asymptotes
# ---------------------------------------------------------------------------

ASYMPTOTE_KINDS = (
    "sub_skin_depth_drude",
    "sub_skin_depth_plasma",
    "non_retarded",
    "retarded",
    "plasma_thermal",
    "drude_thermal",
    "drude_non_retarded_thermal",
    "state_plasma_non_retarded",
    "state_plasma_retarded",
)


def free_energy_asymptote(
    kind: str,
    L: float,
    mu_x2: Optional[float] = None,
    omega_m: Optional[float] = None,
    T: Optional[float] = None,
    lambda_p: Optional[float] = None,
    delta_m: Optional[float] = None,
) -> AsymptoteValue:
    """Closed-form asymptotic free energy for the anisotropic two-level atom.

    Used as an oracle against the numeric operations; the validity window
    is returned as metadata and is the caller's responsibility.
    """
    if L <= 0.0:
        raise DomainError("distance must be positive")
    if mu_x2 is None:
        mu_x2 = (CODATA.gS * CODATA.muB / 2.0) ** 2
    pre = _mu0 * mu_x2

    if kind == "non_retarded":
        return AsymptoteValue(pre / (32.0 * math.pi * L**3), "delta, lambda_p << L << lambda_m; T = 0")
    if kind == "retarded":
        lambda_m = 2.0 * math.pi * _c / omega_m
        return AsymptoteValue(
            pre * lambda_m / (16.0 * math.pi**3 * L**4), "L >> lambda_m; T = 0 (plasma = Drude)"
        )
    if kind == "sub_skin_depth_plasma":
        # the pi follows from the frequency-independent sub-skin response
        # integrated against the polarizability lobe; see the Green's
        # tensor asymptote at the same scale
        return AsymptoteValue(
            math.pi * pre / (16.0 * lambda_p**2 * L), "L << c/omega_p; T = 0 (plasma)"
        )
    if kind == "sub_skin_depth_drude":
        if L >= delta_m:
            raise DomainError("sub-skin-depth form needs L < delta_m")
        return AsymptoteValue(
            pre / (8.0 * math.pi**2 * delta_m**2 * L) * math.log(delta_m / L),
            "L << delta_m; T = 0 (Drude)",
        )
    if kind == "plasma_thermal":
        x = _hbar * omega_m / (2.0 * _kB * T)
        return AsymptoteValue(
            pre / (32.0 * math.pi * L**3) * math.tanh(x) / x,
            "L >> Lambda_T, lambda_p (plasma); reduces to the non-retarded "
            "value for kB T >> hbar omega_m",
        )
    if kind == "drude_thermal":
        lambda_m = 2.0 * math.pi * _c / omega_m
        lam_t = thermal_wavelength(T)
        return AsymptoteValue(
            math.pi * pre / (lambda_m**2 * L) * math.exp(-L / lam_t),
            "L >> Lambda_T (Drude); n = 1 Matsubara term",
        )
    if kind == "drude_non_retarded_thermal":
        return AsymptoteValue(
            pre / (384.0 * math.pi * L**3) * (_hbar * omega_m / (_kB * T)) ** 2,
            "delta(xi_1) << L << Lambda_T, kB T >> hbar omega_m (Drude)",
        )
    if kind == "state_plasma_non_retarded":
        return AsymptoteValue(
            pre / (32.0 * math.pi * L**3),
            "ground state, plasma, lambda_p << L << lambda_m, kB T >> hbar omega_m",
        )
    if kind == "state_plasma_retarded":
        lambda_m = 2.0 * math.pi * _c / omega_m
        phase = 4.0 * math.pi * L / lambda_m
        osc = math.cos(phase) - math.sin(phase) / phase
        return AsymptoteValue(
            (_kB * T / (_hbar * omega_m)) * math.pi * pre / (lambda_m**2 * L) * osc,
            "ground state, plasma, L >~ lambda_m, kB T >> hbar omega_m",
        )
    raise DomainError(f"unknown asymptote kind {kind!r}; known: {ASYMPTOTE_KINDS}")
