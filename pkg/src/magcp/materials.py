"""Dielectric response models and planar Fresnel reflection coefficients.

Four bulk models are implemented: a Drude metal, the dissipationless plasma
model, a two-fluid superconductor interpolating between the two with the
Gorter-Casimir order parameter, and a "perfect crystal" whose scattering
rate follows a power law in temperature.  A perfect conductor is kept as a
distinct variant for limit checks; its reflection coefficients are returned
directly instead of evaluating a (divergent) permittivity.

Everything here is a pure function of its arguments and accepts numpy
arrays for the frequency/wavevector inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from .constants import CODATA
from .errors import DomainError

__all__ = [
    "Drude",
    "Plasma",
    "TwoFluidSuperconductor",
    "PerfectCrystal",
    "PerfectConductor",
    "MaterialModel",
    "Axis",
    "SpectralPoint",
    "ReflectionPair",
    "ReflectionRegime",
    "permittivity",
    "order_parameter",
    "gamma_of_T",
    "effective_gamma",
    "fresnel",
    "static_reflection",
    "fresnel_asymptote",
]

_c = CODATA.c


# ---------------------------------------------------------------------------
# models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Drude:
    """Metal with constant scattering rate gamma (impurity dominated)."""

    omega_p: float  # plasma frequency, rad/s
    gamma: float  # dissipation rate, rad/s

    label = "drude"

    def __post_init__(self):
        if self.omega_p <= 0.0:
            raise DomainError("omega_p must be positive")
        if self.gamma <= 0.0:
            raise DomainError("gamma must be positive (use Plasma for gamma = 0)")


@dataclass(frozen=True)
class Plasma:
    """Dissipationless free-electron response (gamma = 0)."""

    omega_p: float

    label = "plasma"

    def __post_init__(self):
        if self.omega_p <= 0.0:
            raise DomainError("omega_p must be positive")


@dataclass(frozen=True)
class TwoFluidSuperconductor:
    """Two-fluid superconductor: plasma and Drude responses mixed by eta(T)."""

    omega_p: float
    gamma: float
    Tc: float  # critical temperature, K

    label = "two_fluid"

    def __post_init__(self):
        if self.omega_p <= 0.0:
            raise DomainError("omega_p must be positive")
        if self.gamma <= 0.0:
            raise DomainError("gamma must be positive")
        if self.Tc <= 0.0:
            raise DomainError("Tc must be positive")


@dataclass(frozen=True)
class PerfectCrystal:
    """Clean metal: gamma(T) = gamma_ref (T/T_ref)^n below T_ref, constant above."""

    omega_p: float
    gamma_ref: float
    T_ref: float
    exponent: float  # n > 1

    label = "perfect_crystal"

    def __post_init__(self):
        if self.omega_p <= 0.0:
            raise DomainError("omega_p must be positive")
        if self.gamma_ref <= 0.0:
            raise DomainError("gamma_ref must be positive")
        if self.T_ref <= 0.0:
            raise DomainError("T_ref must be positive")
        if self.exponent <= 1.0:
            raise DomainError("exponent must exceed 1")


@dataclass(frozen=True)
class PerfectConductor:
    """Formal limit |epsilon| -> infinity; used as an oracle in tests."""

    label = "perfect_conductor"


MaterialModel = Union[Drude, Plasma, TwoFluidSuperconductor, PerfectCrystal, PerfectConductor]


# ---------------------------------------------------------------------------
# spectral points
# ---------------------------------------------------------------------------

class Axis(Enum):
    IMAGINARY = "imaginary"
    REAL = "real"


@dataclass(frozen=True)
class SpectralPoint:
    """A frequency on the positive imaginary axis (xi) or positive real axis.

    The static limit is handled by dedicated operations, never by evaluating
    at value = 0.
    """

    axis: Axis
    value: float  # rad/s, > 0

    def __post_init__(self):
        if self.value <= 0.0:
            raise DomainError("spectral point must have positive frequency")

    @classmethod
    def imaginary(cls, xi: float) -> "SpectralPoint":
        return cls(Axis.IMAGINARY, xi)

    @classmethod
    def real(cls, omega: float) -> "SpectralPoint":
        return cls(Axis.REAL, omega)


@dataclass(frozen=True)
class ReflectionPair:
    """TE and TM reflection coefficients at one (frequency, wavevector)."""

    r_TE: complex
    r_TM: complex


class ReflectionRegime(Enum):
    SUB_SKIN_DEPTH = "sub_skin_depth"
    NON_RETARDED = "non_retarded"
    RETARDED = "retarded"


# ---------------------------------------------------------------------------
# temperature factors
# ---------------------------------------------------------------------------

def order_parameter(T: float, Tc: float) -> float:
    """Superconducting fraction eta(T) = [1 - (T/Tc)^4] theta(Tc - T).

    The step resolves to the normal state at T = Tc exactly.
    """
    if Tc <= 0.0:
        raise DomainError("Tc must be positive")
    if T < 0.0:
        raise DomainError("temperature must be non-negative")
    if T >= Tc:
        return 0.0
    return 1.0 - (T / Tc) ** 4


def gamma_of_T(model: PerfectCrystal, T: float) -> float:
    """Power-law scattering rate of the perfect crystal, saturating above T_ref."""
    if T < 0.0:
        raise DomainError("temperature must be non-negative")
    if T >= model.T_ref:
        return model.gamma_ref
    return model.gamma_ref * (T / model.T_ref) ** model.exponent


def effective_gamma(model: MaterialModel, T: float = 0.0):
    """Scattering rate entering the skin depth; None when dissipationless."""
    if isinstance(model, Drude):
        return model.gamma
    if isinstance(model, Plasma):
        return None
    if isinstance(model, TwoFluidSuperconductor):
        # normal fraction carries the dissipation; gone only at T = 0
        return model.gamma if T > 0.0 else None
    if isinstance(model, PerfectCrystal):
        g = gamma_of_T(model, T)
        return g if g > 0.0 else None
    if isinstance(model, PerfectConductor):
        return None
    raise TypeError(f"unknown material model {model!r}")


def _superfluid_weight(model: MaterialModel, T: float) -> float:
    """Weight of the dissipationless (1/xi^2) channel in the static limit."""
    if isinstance(model, Plasma):
        return 1.0
    if isinstance(model, Drude):
        return 0.0
    if isinstance(model, TwoFluidSuperconductor):
        return order_parameter(T, model.Tc)
    if isinstance(model, PerfectCrystal):
        return 1.0 if gamma_of_T(model, T) == 0.0 else 0.0
    raise TypeError(f"unknown material model {model!r}")


# ---------------------------------------------------------------------------
# permittivity
# ---------------------------------------------------------------------------

def _eps_imag(model: MaterialModel, xi, T: float):
    """Dielectric function at imaginary frequency xi > 0 (real valued)."""
    xi = np.asarray(xi, dtype=float)
    if isinstance(model, Drude):
        return 1.0 + model.omega_p**2 / (xi * (xi + model.gamma))
    if isinstance(model, Plasma):
        return 1.0 + model.omega_p**2 / xi**2
    if isinstance(model, TwoFluidSuperconductor):
        eta = order_parameter(T, model.Tc)
        if eta == 1.0:
            return _eps_imag(Plasma(model.omega_p), xi, T)
        if eta == 0.0:
            return _eps_imag(Drude(model.omega_p, model.gamma), xi, T)
        return eta * _eps_imag(Plasma(model.omega_p), xi, T) + (1.0 - eta) * _eps_imag(
            Drude(model.omega_p, model.gamma), xi, T
        )
    if isinstance(model, PerfectCrystal):
        g = gamma_of_T(model, T)
        if g == 0.0:
            return _eps_imag(Plasma(model.omega_p), xi, T)
        return _eps_imag(Drude(model.omega_p, g), xi, T)
    raise TypeError(f"permittivity undefined for {model!r}")


def _eps_real(model: MaterialModel, omega, T: float):
    """Dielectric function at real frequency omega > 0 (complex valued)."""
    omega = np.asarray(omega, dtype=float)
    if isinstance(model, Drude):
        return 1.0 - model.omega_p**2 / (omega * (omega + 1j * model.gamma))
    if isinstance(model, Plasma):
        return (1.0 - model.omega_p**2 / omega**2) + 0.0j
    if isinstance(model, TwoFluidSuperconductor):
        eta = order_parameter(T, model.Tc)
        if eta == 1.0:
            return _eps_real(Plasma(model.omega_p), omega, T)
        if eta == 0.0:
            return _eps_real(Drude(model.omega_p, model.gamma), omega, T)
        return eta * _eps_real(Plasma(model.omega_p), omega, T) + (1.0 - eta) * _eps_real(
            Drude(model.omega_p, model.gamma), omega, T
        )
    if isinstance(model, PerfectCrystal):
        g = gamma_of_T(model, T)
        if g == 0.0:
            return _eps_real(Plasma(model.omega_p), omega, T)
        return _eps_real(Drude(model.omega_p, g), omega, T)
    raise TypeError(f"permittivity undefined for {model!r}")


def permittivity(model: MaterialModel, s: SpectralPoint, T: float = 0.0):
    """Dielectric function of the model at the given spectral point.

    Real and > 1 on the imaginary axis; complex on the real axis.  The
    perfect conductor has no finite permittivity: the formal limit is
    reported as infinity and the reflection operations bypass it.
    """
    if T < 0.0:
        raise DomainError("temperature must be non-negative")
    if isinstance(model, PerfectConductor):
        return complex(math.inf, 0.0)
    if s.axis is Axis.IMAGINARY:
        return float(_eps_imag(model, s.value, T))
    return complex(_eps_real(model, s.value, T))


# ---------------------------------------------------------------------------
# Fresnel coefficients
# ---------------------------------------------------------------------------

def _enforce_branch(z):
    """Root convention Im kappa <= 0, and Re kappa >= 0 on the real line."""
    z = np.asarray(z, dtype=complex)
    flip = (z.imag > 0.0) | ((z.imag == 0.0) & (z.real < 0.0))
    return np.where(flip, -z, z)


def _reflection_imag(model: MaterialModel, xi, k, T: float):
    """Vectorised TE/TM coefficients at imaginary frequency (real valued).

    xi and k broadcast against each other; xi > 0.
    """
    xi = np.asarray(xi, dtype=float)
    k = np.asarray(k, dtype=float)
    if isinstance(model, PerfectConductor):
        shape = np.broadcast_shapes(xi.shape, k.shape)
        return -np.ones(shape), np.ones(shape)
    eps = _eps_imag(model, xi, T)
    a2 = (xi / _c) ** 2
    kappa = np.sqrt(k**2 + a2)
    kappa_m = np.sqrt(k**2 + eps * a2)
    r_te = (kappa - kappa_m) / (kappa + kappa_m)
    r_tm = (eps * kappa - kappa_m) / (eps * kappa + kappa_m)
    return r_te, r_tm


def _reflection_real(model: MaterialModel, omega, k, T: float):
    """Vectorised TE/TM coefficients at real frequency (complex valued)."""
    omega = np.asarray(omega, dtype=float)
    k = np.asarray(k, dtype=float)
    if isinstance(model, PerfectConductor):
        shape = np.broadcast_shapes(omega.shape, k.shape)
        return -np.ones(shape, dtype=complex), np.ones(shape, dtype=complex)
    eps = _eps_real(model, omega, T)
    w2 = (omega / _c) ** 2
    kappa = _enforce_branch(np.sqrt((k**2 - w2).astype(complex)))
    kappa_m = _enforce_branch(np.sqrt(k**2 - eps * w2))
    r_te = (kappa - kappa_m) / (kappa + kappa_m)
    r_tm = (eps * kappa - kappa_m) / (eps * kappa + kappa_m)
    return r_te, r_tm


def fresnel(model: MaterialModel, s: SpectralPoint, k: float, T: float = 0.0) -> ReflectionPair:
    """Exact Fresnel reflection pair at one spectral point and wavevector.

    Propagation constants follow the root convention Im kappa <= 0,
    Re kappa >= 0; on the imaginary axis both coefficients are real.
    """
    if k < 0.0:
        raise DomainError("in-plane wavevector must be non-negative")
    if s.axis is Axis.IMAGINARY:
        r_te, r_tm = _reflection_imag(model, s.value, k, T)
        return ReflectionPair(float(r_te), float(r_tm))
    r_te, r_tm = _reflection_real(model, s.value, k, T)
    return ReflectionPair(complex(r_te), complex(r_tm))


def _static_te(model: MaterialModel, k, T: float):
    """TE coefficient in the xi -> 0 limit (closed form, vectorised).

    Any nonzero scattering rate quenches the static TE response (the
    normal-conductor decoupling); a superfluid fraction keeps it finite.
    """
    k = np.asarray(k, dtype=float)
    if isinstance(model, PerfectConductor):
        return -np.ones_like(k)
    w = _superfluid_weight(model, T)
    if w == 0.0:
        return np.zeros_like(k)
    skp = np.sqrt(k**2 + w * (model.omega_p / _c) ** 2)
    return (k - skp) / (k + skp)


def static_reflection(model: MaterialModel, k: float, T: float = 0.0) -> ReflectionPair:
    """Closed-form xi -> 0 reflection pair used by the n = 0 Matsubara term."""
    if k < 0.0:
        raise DomainError("in-plane wavevector must be non-negative")
    return ReflectionPair(float(_static_te(model, k, T)), 1.0)


# ---------------------------------------------------------------------------
# asymptotic forms (test oracles)
# ---------------------------------------------------------------------------

def fresnel_asymptote(
    regime: ReflectionRegime, epsilon, s: SpectralPoint, k: float
) -> ReflectionPair:
    """Closed-form reflection approximations for |epsilon| >> 1.

    Oracles for the exact coefficients in the three wavevector regimes.  The
    caller is responsible for the regime's validity (wavevector ordering and
    large |epsilon|).
    """
    eps = complex(epsilon)
    if s.axis is Axis.IMAGINARY:
        xi = s.value
        if regime is ReflectionRegime.SUB_SKIN_DEPTH:
            r_te = -(eps - 1.0) * xi**2 / (4.0 * _c**2 * k**2)
            r_tm = (eps - 1.0) / (eps + 1.0) * (1.0 - eps / (eps + 1.0) * xi**2 / (_c**2 * k**2))
        elif regime is ReflectionRegime.NON_RETARDED:
            r_te = -1.0 + 2.0 * _c * k / (xi * np.sqrt(eps))
            r_tm = 1.0 - 2.0 * xi / (_c * k * np.sqrt(eps))
        else:
            r_te = -1.0 + 2.0 / np.sqrt(eps)
            r_tm = 1.0 - 2.0 / np.sqrt(eps)
        # real permittivity (the imaginary-axis case) gives real coefficients
        r_te, r_tm = complex(r_te), complex(r_tm)
        if r_te.imag == 0.0 and r_tm.imag == 0.0:
            return ReflectionPair(r_te.real, r_tm.real)
        return ReflectionPair(r_te, r_tm)

    omega = s.value
    if regime is ReflectionRegime.SUB_SKIN_DEPTH:
        r_te = (eps - 1.0) * omega**2 / (4.0 * _c**2 * k**2)
        r_tm = (eps - 1.0) / (eps + 1.0) * (1.0 + eps / (eps + 1.0) * omega**2 / (_c**2 * k**2))
    elif regime is ReflectionRegime.NON_RETARDED:
        r_te = -1.0 + 2j * _c * k / (omega * np.sqrt(eps))
        r_tm = 1.0 + 2j * omega / (_c * k * np.sqrt(eps))
    else:
        r_te = -1.0 + 2.0 / np.sqrt(eps)
        r_tm = 1.0 - 2.0 / np.sqrt(eps)
    return ReflectionPair(complex(r_te), complex(r_tm))
