"""Scan presets reproducing the parameter sets of the published figures.

Captions pin the material and atom parameters, the temperature lists, and
the normalization constants; grid ranges and densities are chosen to cover
the plotted windows.  All presets share the reference surface
(omega_p/2pi = 1.42e15 Hz, lambda_p ~ 210 nm) and the 480 MHz Zeeman
transition unless a caption overrides them.
"""

from __future__ import annotations

import math

from .atom import Orientation, Rb87Hyperfine, TwoLevelAtom
from .errors import UnknownPresetError
from .interaction import NumericsSettings, Scenario
from .materials import Drude, PerfectCrystal, Plasma, TwoFluidSuperconductor
from .scan import LabeledScenario, Outputs, ScanConfig, Sweep

__all__ = ["figure_preset", "PRESET_NAMES"]

_TWO_PI = 2.0 * math.pi


def _hz(f: float) -> float:
    """Cycles-per-second to angular frequency; the config-file convention."""
    return _TWO_PI * f


OMEGA_P = _hz(1.42e15)
GAMMA = _hz(1.42e13)  # 0.01 omega_p
GAMMA_SC = _hz(7.1e11)  # 5e-4 omega_p, BCS-comparison figure
OMEGA_M = _hz(4.8e8)
OMEGA_HF = _hz(6.8e9)
# neighbouring Zeeman sublevels split by the same 480 MHz as the two-level atom
OMEGA_LARMOR = _hz(9.6e8)

NORM_PLASMA_1UM = 9.79e-37  # plasma, T = 0, L = 1 um
NORM_GROUND_DRUDE_1UM = 2.56e-38  # ground-state two-level, Drude, T = 0, L = 1 um
NORM_SC_LOWT_1UM = 1.09e-39  # two-fluid/BCS comparison normalization (caption value)

_ATOM = TwoLevelAtom(OMEGA_M)
_ATOM_ISO = TwoLevelAtom(OMEGA_M, Orientation.ISOTROPIC)
_RB87 = Rb87Hyperfine(OMEGA_HF, OMEGA_LARMOR)


def _distance_sweep(points_per_decade=8, lo=1e-7, hi=1.0):
    decades = math.log10(hi / lo)
    return Sweep("distance", lo, hi, int(round(points_per_decade * decades)) + 1, log=True)


def _fig1(model, label):
    return ScanConfig(
        scenarios=(LabeledScenario(label, Scenario(_ATOM, model)),),
        sweep=_distance_sweep(),
        fixed=(0.0, 0.01, 0.1, 1.0, 300.0),
        outputs=Outputs(breakdown=True, asymptotes=True),
        normalization=NORM_PLASMA_1UM,
        numerics=NumericsSettings(truncation_u=1e-4),
    )


def _fig2():
    tc = 1.0
    return ScanConfig(
        scenarios=(
            LabeledScenario(
                "two_fluid", Scenario(_ATOM, TwoFluidSuperconductor(OMEGA_P, GAMMA, tc))
            ),
        ),
        sweep=_distance_sweep(),
        fixed=(0.0, 0.7, 0.9, 0.99, 0.9999, 1.0),  # in units of Tc = 1 K
        outputs=Outputs(breakdown=True),
        normalization=NORM_PLASMA_1UM,
        numerics=NumericsSettings(truncation_u=1e-4),
    )


def _fig3():
    return ScanConfig(
        scenarios=(
            LabeledScenario(
                "two_fluid_bcs_params",
                Scenario(_ATOM, TwoFluidSuperconductor(OMEGA_P, GAMMA_SC, 12.0)),
            ),
        ),
        sweep=Sweep("temperature", 0.25, 24.0, 96, log=False),
        fixed=(1e-6,),
        outputs=Outputs(breakdown=True),
        normalization=NORM_SC_LOWT_1UM,
    )


def _fig4():
    scenarios = (
        LabeledScenario("plasma", Scenario(_ATOM, Plasma(OMEGA_P))),
        LabeledScenario("drude", Scenario(_ATOM, Drude(OMEGA_P, GAMMA))),
        LabeledScenario(
            "perfect_crystal",
            Scenario(_ATOM, PerfectCrystal(OMEGA_P, GAMMA, 300.0, 2.0)),
        ),
        LabeledScenario(
            "two_fluid", Scenario(_ATOM, TwoFluidSuperconductor(OMEGA_P, GAMMA, 1.0))
        ),
    )
    return ScanConfig(
        scenarios=scenarios,
        sweep=Sweep("temperature", 0.003, 30.0, 41, log=True),
        fixed=(1e-6,),
        outputs=Outputs(entropy=True),
        numerics=NumericsSettings(truncation_u=1e-4),
    )


def _fig5():
    return ScanConfig(
        scenarios=(
            LabeledScenario("anisotropic", Scenario(_ATOM, Plasma(OMEGA_P))),
            LabeledScenario("isotropic", Scenario(_ATOM_ISO, Plasma(OMEGA_P))),
        ),
        sweep=Sweep("temperature", 0.002, 2.0, 31, log=True),
        fixed=(1e-3,),
        outputs=Outputs(entropy=True),
        numerics=NumericsSettings(quad_rtol=1e-10),
    )


def _fig6(model=None, label="drude_ground_state"):
    return ScanConfig(
        scenarios=(
            LabeledScenario(
                label, Scenario(_ATOM, model or Drude(OMEGA_P, GAMMA), mode="state", state="g")
            ),
        ),
        sweep=_distance_sweep(),
        fixed=(0.1, 1.0, 10.0, 300.0),
        outputs=Outputs(breakdown=True),
        numerics=NumericsSettings(truncation_u=1e-4),
    )


def _fig7():
    return ScanConfig(
        scenarios=(
            LabeledScenario(
                "drude_ground_state",
                Scenario(_ATOM, Drude(OMEGA_P, GAMMA), mode="state", state="g"),
            ),
        ),
        sweep=Sweep("temperature", 0.001, 300.0, 56, log=True),
        fixed=(1e-6,),
        outputs=Outputs(breakdown=True),
        normalization=NORM_GROUND_DRUDE_1UM,
        numerics=NumericsSettings(truncation_u=1e-4),
    )


def _fig9(model=None, label="rb87_drude"):
    return ScanConfig(
        scenarios=(
            LabeledScenario(label, Scenario(_RB87, model or Drude(OMEGA_P, GAMMA), mode="state")),
        ),
        sweep=Sweep("temperature", 0.001, 300.0, 56, log=True),
        fixed=(1e-6,),
        outputs=Outputs(breakdown=True),
        numerics=NumericsSettings(truncation_u=1e-4),
    )


_PRESETS = {
    "fig1_top": lambda: _fig1(Drude(OMEGA_P, GAMMA), "drude"),
    "fig1_bottom": lambda: _fig1(Plasma(OMEGA_P), "plasma"),
    "fig2": _fig2,
    "fig3_twofluid": _fig3,
    "fig4": _fig4,
    "fig5": _fig5,
    "fig6": _fig6,
    "fig7": _fig7,
    "fig8": lambda: _fig6(Plasma(OMEGA_P), "plasma_ground_state"),
    "fig9": _fig9,
    "fig10": lambda: _fig9(Plasma(OMEGA_P), "rb87_plasma"),
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def figure_preset(name: str) -> ScanConfig:
    """Scan configuration with the caption parameters of the named figure."""
    try:
        builder = _PRESETS[name]
    except KeyError:
        raise UnknownPresetError(
            f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}"
        ) from None
    return builder()
