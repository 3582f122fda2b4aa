"""Physical constants and the derived length scales of the problem.

All quantities are strict SI.  Angular frequencies are rad/s throughout the
package; quantities quoted as cycles per second (Hz) are converted at the
configuration boundary, never here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from scipy.constants import physical_constants as _pc
from scipy.constants import c as _c
from scipy.constants import hbar as _hbar
from scipy.constants import k as _kB
from scipy.constants import mu_0 as _mu0

from .errors import DomainError

__all__ = [
    "PhysicalConstants",
    "CODATA",
    "LengthScales",
    "thermal_wavelength",
    "length_scales",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA values used throughout; immutable by construction."""

    mu0: float  # vacuum permeability, N/A^2
    hbar: float  # reduced Planck constant, J s
    kB: float  # Boltzmann constant, J/K
    c: float  # speed of light, m/s
    muB: float  # Bohr magneton, J/T
    gS: float  # electron-spin Lande factor, dimensionless
    alpha_fs: float  # fine-structure constant, dimensionless

    def __post_init__(self):
        for name in ("mu0", "hbar", "kB", "c", "muB", "gS", "alpha_fs"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"constant {name} must be positive")


CODATA = PhysicalConstants(
    mu0=_mu0,
    hbar=_hbar,
    kB=_kB,
    c=_c,
    muB=_pc["Bohr magneton"][0],
    gS=abs(_pc["electron g factor"][0]),
    alpha_fs=_pc["fine-structure constant"][0],
)


@dataclass(frozen=True)
class LengthScales:
    """Length scales delimiting the distance regimes at one frequency.

    ``skin_depth`` is ``None`` for dissipationless responses (plasma model,
    superconductor at T = 0) where no field penetration scale exists.
    ``resonance_wavelength`` is the photon wavelength at the frequency the
    caller evaluated; pass the transition frequency to obtain the resonance
    wavelength proper.
    """

    skin_depth: Optional[float]  # delta_omega, m
    photon_wavelength: float  # lambda_omega, m
    plasma_wavelength: float  # lambda_p, m
    resonance_wavelength: float  # lambda at the evaluated frequency, m


def thermal_wavelength(T: float) -> float:
    """Thermal photon wavelength hbar*c / (4 pi kB T) in metres.

    Numerically about 0.18 mm K / T.
    """
    if T <= 0.0:
        raise DomainError(f"temperature must be positive, got {T}")
    return CODATA.hbar * CODATA.c / (4.0 * math.pi * CODATA.kB * T)


def length_scales(model, omega: float, T: float = 0.0) -> LengthScales:
    """Skin depth, photon and plasma wavelengths at angular frequency omega.

    Parameters
    ----------
    model : MaterialModel
        Surface response model; supplies the plasma frequency and the
        dissipation rate (possibly temperature dependent).
    omega : float
        Angular frequency, rad/s, > 0.
    T : float
        Temperature in K; only enters through a temperature-dependent
        scattering rate.
    """
    # local import: materials depends on errors only, no cycle at runtime
    from .materials import effective_gamma

    if omega <= 0.0:
        raise DomainError(f"frequency must be positive, got {omega}")
    omega_p = getattr(model, "omega_p", None)
    if omega_p is None or omega_p <= 0.0:
        raise DomainError("model does not define a positive plasma frequency")

    lambda_p = 2.0 * math.pi * CODATA.c / omega_p
    lambda_omega = 2.0 * math.pi * CODATA.c / omega

    gamma = effective_gamma(model, T)
    if gamma is None or gamma == 0.0:
        delta: Optional[float] = None
    else:
        delta = lambda_p / (2.0 * math.pi) * math.sqrt(2.0 * gamma / omega)

    return LengthScales(
        skin_depth=delta,
        photon_wavelength=lambda_omega,
        plasma_wavelength=lambda_p,
        resonance_wavelength=lambda_omega,
    )
