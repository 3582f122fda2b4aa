"""Transition tables and magnetic polarizability tensors.

Covers the two-level spin-1/2 atom (Zeeman pair in a magnetic trap), the
Rb-87 5s hyperfine manifold with weak-field Zeeman splitting, thermal
(Boltzmann-weighted) polarizabilities, and the metallic nanosphere used for
comparison.  Dipole operators keep only the electron-spin part, the nuclear
contribution being suppressed by the nuclear-to-electron mass ratio.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

import numpy as np

from .constants import CODATA
from .errors import DomainError, PoleProximityError
from .materials import Axis, MaterialModel, SpectralPoint, _eps_imag, _eps_real, effective_gamma

__all__ = [
    "Orientation",
    "TransitionDipole",
    "TwoLevelAtom",
    "Rb87Hyperfine",
    "AtomSpec",
    "PolarizabilityTensor",
    "clebsch_gordan",
    "transition_table",
    "state_polarizability",
    "thermal_polarizability",
    "nanosphere_polarizability",
]

_hbar = CODATA.hbar
_kB = CODATA.kB
_c = CODATA.c


class Orientation(Enum):
    ANISOTROPIC = "anisotropic"  # transition dipole parallel to the surface
    ISOTROPIC = "isotropic"  # sublevel-averaged optical-trap case


@dataclass(frozen=True)
class TransitionDipole:
    """One virtual transition a -> b with signed frequency and dipole elements.

    omega_ba < 0 marks a transition to a lower-lying state.  Matrix elements
    are in J/T.
    """

    from_state: str
    to_state: str
    omega_ba: float
    mu_x: complex
    mu_y: complex
    mu_z: complex

    def strength(self) -> Tuple[float, float, float]:
        return (abs(self.mu_x) ** 2, abs(self.mu_y) ** 2, abs(self.mu_z) ** 2)


@dataclass(frozen=True)
class PolarizabilityTensor:
    """Diagonal magnetic polarizability entries in J/T^2."""

    beta_xx: complex
    beta_yy: complex
    beta_zz: complex


# ---------------------------------------------------------------------------
# Clebsch-Gordan coefficients
# ---------------------------------------------------------------------------

def _twice(x, name: str) -> int:
    d = 2.0 * float(x)
    r = round(d)
    if abs(d - r) > 1e-9:
        raise DomainError(f"{name} = {x} is not a half-integer")
    return int(r)


def clebsch_gordan(j1, j2, m1, m2, F, mF) -> float:
    """Condon-Shortley coefficient <j1 m1; j2 m2 | F mF> via the Racah sum.

    Selection-rule violations (mF != m1 + m2, triangle rule) return 0;
    malformed quantum numbers raise `DomainError`.
    """
    d_j1, d_j2 = _twice(j1, "j1"), _twice(j2, "j2")
    d_m1, d_m2 = _twice(m1, "m1"), _twice(m2, "m2")
    d_F, d_mF = _twice(F, "F"), _twice(mF, "mF")

    for dj, dm, nj, nm in (
        (d_j1, d_m1, "j1", "m1"),
        (d_j2, d_m2, "j2", "m2"),
        (d_F, d_mF, "F", "mF"),
    ):
        if dj < 0:
            raise DomainError(f"{nj} must be non-negative")
        if abs(dm) > dj:
            raise DomainError(f"|{nm}| exceeds {nj}")
        if (dj - dm) % 2 != 0:
            raise DomainError(f"{nm} and {nj} differ by a non-integer")

    if d_m1 + d_m2 != d_mF:
        return 0.0
    if d_F < abs(d_j1 - d_j2) or d_F > d_j1 + d_j2:
        return 0.0

    def fact(d: int) -> int:
        # argument arrives doubled; must be an even non-negative integer
        assert d % 2 == 0
        return math.factorial(d // 2)

    norm = Fraction(
        (d_F + 1)
        * fact(d_j1 + d_j2 - d_F)
        * fact(d_j1 - d_j2 + d_F)
        * fact(-d_j1 + d_j2 + d_F),
        fact(d_j1 + d_j2 + d_F + 2),
    ) * Fraction(
        fact(d_F + d_mF)
        * fact(d_F - d_mF)
        * fact(d_j1 - d_m1)
        * fact(d_j1 + d_m1)
        * fact(d_j2 - d_m2)
        * fact(d_j2 + d_m2),
        1,
    )

    k_min = max(0, (d_j2 - d_F - d_m1) // 2, (d_j1 + d_m2 - d_F) // 2)
    k_max = min(
        (d_j1 + d_j2 - d_F) // 2,
        (d_j1 - d_m1) // 2,
        (d_j2 + d_m2) // 2,
    )
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        dk = 2 * k
        denom = (
            math.factorial(k)
            * fact(d_j1 + d_j2 - d_F - dk)
            * fact(d_j1 - d_m1 - dk)
            * fact(d_j2 + d_m2 - dk)
            * fact(d_F - d_j2 + d_m1 + dk)
            * fact(d_F - d_j1 - d_m2 + dk)
        )
        total += Fraction(-1 if k % 2 else 1, denom)

    if total == 0:
        return 0.0
    sign = 1.0 if total > 0 else -1.0
    value2 = norm * total * total
    return sign * math.sqrt(value2.numerator / value2.denominator)


# ---------------------------------------------------------------------------
# atom specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoLevelAtom:
    """Spin-1/2 Zeeman pair with splitting omega_m (rad/s)."""

    omega_m: float
    orientation: Orientation = Orientation.ANISOTROPIC

    label = "two_level"

    def __post_init__(self):
        if self.omega_m <= 0.0:
            raise DomainError("omega_m must be positive")

    @property
    def mu_x2(self) -> float:
        """Squared transverse dipole element (g_S mu_B / 2)^2."""
        return (CODATA.gS * CODATA.muB / 2.0) ** 2

    def states(self):
        return (("g", 0.0), ("e", _hbar * self.omega_m))

    @property
    def ground_state(self) -> str:
        return "g"

    @property
    def max_transition_frequency(self) -> float:
        return self.omega_m

    def transitions_from(self, state: str) -> Tuple[TransitionDipole, ...]:
        m = CODATA.gS * CODATA.muB / 2.0
        if state == "g":
            # S_x|g> = |e>/2, S_y|g> = -(i/2)|e>; z-element vanishes between
            # distinct states and the diagonal one carries omega_ba = 0
            return (TransitionDipole("g", "e", self.omega_m, m, 1j * m, 0.0),)
        if state == "e":
            return (TransitionDipole("e", "g", -self.omega_m, m, -1j * m, 0.0),)
        raise DomainError(f"unknown two-level state {state!r}")


def _rb87_state_label(F: int, mF: int) -> str:
    return f"{F},{mF}"


@dataclass(frozen=True)
class Rb87Hyperfine:
    """Rb-87 5s manifold: I = 3/2, J = S = 1/2, F in {1, 2}.

    Weak-field Zeeman ladder with g_F = -1/2 (F = 1) and +1/2 (F = 2):
    E(1, mF) = -mF hbar Omega_L / 2 and E(2, mF) = hbar Omega_hf
    + mF hbar Omega_L / 2, so neighbouring sublevels in either manifold are
    split by Omega_L / 2 and |1,-1> is a trappable weak-field seeker.
    """

    omega_hf: float
    omega_larmor: float
    prepared_state: Tuple[int, int] = (1, -1)

    label = "rb87"

    _I = 1.5
    _S = 0.5

    def __post_init__(self):
        if self.omega_hf <= 0.0 or self.omega_larmor <= 0.0:
            raise DomainError("omega_hf and omega_larmor must be positive")
        F, mF = self.prepared_state
        if F not in (1, 2) or abs(mF) > F:
            raise DomainError(f"invalid Rb-87 hyperfine state {self.prepared_state}")
        if self.omega_larmor / self.omega_hf > 0.2:
            warnings.warn(
                "Larmor splitting exceeds 20% of the hyperfine splitting; "
                "the linear weak-field Zeeman ladder becomes questionable",
                stacklevel=2,
            )

    def energy(self, F: int, mF: int) -> float:
        if F == 1:
            return -mF * _hbar * self.omega_larmor / 2.0
        return _hbar * self.omega_hf + mF * _hbar * self.omega_larmor / 2.0

    def states(self):
        out = []
        for F in (1, 2):
            for mF in range(-F, F + 1):
                out.append((_rb87_state_label(F, mF), self.energy(F, mF)))
        return tuple(out)

    @property
    def ground_state(self) -> str:
        labels_energies = self.states()
        return min(labels_energies, key=lambda le: le[1])[0]

    @property
    def max_transition_frequency(self) -> float:
        return self.omega_hf + 2.0 * self.omega_larmor

    def transitions_from(self, state: str) -> Tuple[TransitionDipole, ...]:
        return _rb87_transitions(self, state)


def _parse_rb87_label(state: str) -> Tuple[int, int]:
    try:
        f_str, mf_str = state.split(",")
        return int(f_str), int(mf_str)
    except Exception as exc:
        raise DomainError(f"malformed Rb-87 state label {state!r}") from exc


@lru_cache(maxsize=None)
def _rb87_cg_table(_dummy: int = 0):
    """CG amplitudes <mI mS|F mF> for I = 3/2 x S = 1/2, keyed by (F, mF)."""
    table = {}
    mI_vals = [-1.5, -0.5, 0.5, 1.5]
    mS_vals = [-0.5, 0.5]
    for F in (1, 2):
        for mF in range(-F, F + 1):
            amp = {}
            for mI in mI_vals:
                for mS in mS_vals:
                    ccoef = clebsch_gordan(1.5, 0.5, mI, mS, F, mF)
                    if ccoef != 0.0:
                        amp[(mI, mS)] = ccoef
            table[(F, mF)] = amp
    return table


@lru_cache(maxsize=None)
def _rb87_transitions(atom: Rb87Hyperfine, state: str) -> Tuple[TransitionDipole, ...]:
    F, mF = _parse_rb87_label(state)
    if F not in (1, 2) or abs(mF) > F:
        raise DomainError(f"invalid Rb-87 state {state!r}")
    cg = _rb87_cg_table()
    amp_a = cg[(F, mF)]
    scale = CODATA.gS * CODATA.muB
    e_a = atom.energy(F, mF)

    out = []
    for Fp in (1, 2):
        for mFp in range(-Fp, Fp + 1):
            omega_ba = (atom.energy(Fp, mFp) - e_a) / _hbar
            if omega_ba == 0.0:
                continue  # degenerate transitions carry no polarizability
            amp_b = cg[(Fp, mFp)]
            sx = sy = sz = 0.0
            for (mI, mS), ca in amp_a.items():
                cb_flip = amp_b.get((mI, -mS))
                if cb_flip is not None:
                    sx += 0.5 * ca * cb_flip
                    sy += mS * ca * cb_flip
                cb_same = amp_b.get((mI, mS))
                if cb_same is not None:
                    sz += mS * ca * cb_same
            mu_x = scale * sx
            mu_y = -1j * scale * sy
            mu_z = scale * sz
            if mu_x == 0.0 and mu_y == 0.0 and mu_z == 0.0:
                continue
            out.append(
                TransitionDipole(state, _rb87_state_label(Fp, mFp), omega_ba, mu_x, mu_y, mu_z)
            )
    return tuple(out)


AtomSpec = Union[TwoLevelAtom, Rb87Hyperfine]


def transition_table(atom: AtomSpec, state: Optional[str] = None) -> Tuple[TransitionDipole, ...]:
    """Virtual transitions emitted from the given state (default: prepared/ground).

    Two-level atoms return the single Zeeman pair member; Rb-87 returns all
    allowed hyperfine/Zeeman transitions with their Clebsch-Gordan weights.
    """
    if state is None:
        state = (
            _rb87_state_label(*atom.prepared_state)
            if isinstance(atom, Rb87Hyperfine)
            else atom.ground_state
        )
    return atom.transitions_from(state)


# ---------------------------------------------------------------------------
# polarizability
# ---------------------------------------------------------------------------

def _beta_imag_arrays(transitions, xi):
    """Diagonal polarizability entries over an array of imaginary frequencies."""
    xi = np.asarray(xi, dtype=float)
    bxx = np.zeros_like(xi)
    byy = np.zeros_like(xi)
    bzz = np.zeros_like(xi)
    for tr in transitions:
        sx, sy, sz = tr.strength()
        lorentz = 2.0 * tr.omega_ba / (_hbar * (tr.omega_ba**2 + xi**2))
        bxx += sx * lorentz
        byy += sy * lorentz
        bzz += sz * lorentz
    return bxx, byy, bzz


def state_polarizability(
    transitions, s: SpectralPoint, pole_window: float = 1e-6
) -> PolarizabilityTensor:
    """State-specific polarizability tensor from a transition list.

    On the imaginary axis the entries are real.  Real-axis evaluations
    raise `PoleProximityError` within a relative ``pole_window`` of any
    transition frequency; elsewhere the principal-value form applies.
    """
    if not transitions:
        raise DomainError("transition list must be non-empty")
    if s.axis is Axis.IMAGINARY:
        bxx, byy, bzz = _beta_imag_arrays(transitions, s.value)
        return PolarizabilityTensor(float(bxx), float(byy), float(bzz))

    omega = s.value
    bxx = byy = bzz = 0.0
    for tr in transitions:
        if abs(omega - abs(tr.omega_ba)) < pole_window * abs(tr.omega_ba):
            raise PoleProximityError(
                f"evaluation at {omega} rad/s is within {pole_window} of "
                f"transition |{tr.omega_ba}|"
            )
        sx, sy, sz = tr.strength()
        lorentz = 2.0 * tr.omega_ba / (_hbar * (tr.omega_ba**2 - omega**2))
        bxx += sx * lorentz
        byy += sy * lorentz
        bzz += sz * lorentz
    return PolarizabilityTensor(bxx, byy, bzz)


def _two_level_thermal_factor(omega_m: float, T: float) -> float:
    if T == 0.0:
        return 1.0
    return math.tanh(_hbar * omega_m / (2.0 * _kB * T))


def _boltzmann_weights(atom: Rb87Hyperfine, T: float):
    labels_energies = atom.states()
    if T == 0.0:
        ground = atom.ground_state
        return [(label, 1.0 if label == ground else 0.0) for label, _ in labels_energies]
    energies = np.array([e for _, e in labels_energies])
    w = np.exp(-(energies - energies.min()) / (_kB * T))
    w /= w.sum()
    return [(label, float(wi)) for (label, _), wi in zip(labels_energies, w)]


def thermal_polarizability(atom: AtomSpec, T: float, s: SpectralPoint) -> PolarizabilityTensor:
    """Boltzmann-weighted polarizability of the atom at temperature T.

    The two-level case reduces to the hyperbolic-tangent factor times the
    ground-state tensor; T = 0 returns the ground-state tensor itself.
    """
    if T < 0.0:
        raise DomainError("temperature must be non-negative")
    if isinstance(atom, TwoLevelAtom):
        fac = _two_level_thermal_factor(atom.omega_m, T)
        g = state_polarizability(atom.transitions_from("g"), s)
        return PolarizabilityTensor(fac * g.beta_xx, fac * g.beta_yy, fac * g.beta_zz)

    bxx = byy = bzz = 0.0
    for label, w in _boltzmann_weights(atom, T):
        if w == 0.0:
            continue
        b = state_polarizability(atom.transitions_from(label), s)
        bxx += w * b.beta_xx
        byy += w * b.beta_yy
        bzz += w * b.beta_zz
    return PolarizabilityTensor(bxx, byy, bzz)


def _thermal_beta_imag_arrays(atom: AtomSpec, T: float, xi):
    """Vectorised thermal polarizability entries on the imaginary axis."""
    xi = np.asarray(xi, dtype=float)
    if isinstance(atom, TwoLevelAtom):
        fac = _two_level_thermal_factor(atom.omega_m, T)
        bxx, byy, bzz = _beta_imag_arrays(atom.transitions_from("g"), xi)
        return fac * bxx, fac * byy, fac * bzz
    bxx = np.zeros_like(xi)
    byy = np.zeros_like(xi)
    bzz = np.zeros_like(xi)
    for label, w in _boltzmann_weights(atom, T):
        if w == 0.0:
            continue
        x, y, z = _beta_imag_arrays(atom.transitions_from(label), xi)
        bxx += w * x
        byy += w * y
        bzz += w * z
    return bxx, byy, bzz


def nanosphere_polarizability(
    R: float, model: MaterialModel, s: SpectralPoint, T: float = 0.0
) -> complex:
    """Magnetic polarizability of a small metallic sphere (J/T^2).

    Valid for radii below the field penetration depth and the reduced
    wavelength; a warning is emitted outside that range.  Diamagnetic:
    vanishes at low frequency and is negative on the imaginary axis.
    """
    if R <= 0.0:
        raise DomainError("radius must be positive")
    lam_red = _c / s.value
    gamma = effective_gamma(model, T)
    if gamma is not None:
        omega_p = model.omega_p
        delta = (_c / omega_p) * math.sqrt(2.0 * gamma / s.value)
        if R > delta:
            warnings.warn("sphere radius exceeds the skin depth", stacklevel=2)
    if R > lam_red:
        warnings.warn("sphere radius exceeds the reduced wavelength", stacklevel=2)

    pref = 2.0 * math.pi / (15.0 * CODATA.mu0) * (R * s.value / _c) ** 2 * R**3
    if s.axis is Axis.IMAGINARY:
        return -pref * (float(_eps_imag(model, s.value, T)) - 1.0)
    return pref * (complex(_eps_real(model, s.value, T)) - 1.0)
