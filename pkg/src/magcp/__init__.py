"""Magnetic Casimir-Polder free energy and entropy near planar surfaces."""

from .constants import CODATA, LengthScales, PhysicalConstants, length_scales, thermal_wavelength
from .materials import (
    Axis,
    Drude,
    MaterialModel,
    PerfectConductor,
    PerfectCrystal,
    Plasma,
    ReflectionPair,
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
from .greens import (
    GreensComponents,
    GreensRegime,
    electric_green,
    green_asymptote,
    greens_imag_batch,
    magnetic_green_imag,
    magnetic_green_real,
)
from .atom import (
    Orientation,
    PolarizabilityTensor,
    Rb87Hyperfine,
    TransitionDipole,
    TwoLevelAtom,
    clebsch_gordan,
    nanosphere_polarizability,
    state_polarizability,
    thermal_polarizability,
    transition_table,
)
from .interaction import (
    ASYMPTOTE_KINDS,
    AsymptoteValue,
    EntropyResult,
    FreeEnergyResult,
    NumericsSettings,
    Scenario,
    entropy,
    entropy_defect,
    free_energy_asymptote,
    free_energy_equilibrium,
    free_energy_state,
    free_energy_state_high_temperature,
    free_energy_zero_temperature,
)
from .presets import PRESET_NAMES, figure_preset
from .scan import (
    LabeledScenario,
    Outputs,
    ScanConfig,
    ScanRecord,
    Sweep,
    emit,
    parse_config,
    run_scan,
    serialize_config,
)

__version__ = "0.1.0"
