"""Scan configuration, grid evaluation, and deterministic tabular output.

A scan sweeps distance or temperature over one or more labelled scenarios
(model/atom/preparation combinations) at a list of fixed values of the
other coordinate.  Configurations round-trip through an INI-style text
format in which every physical quantity carries an explicit unit suffix
("L_min = 0.1 um", "Omega_m = 480 MHz"); frequencies are given in cycles
(Hz) and converted to angular frequencies internally.

Output is CSV or JSON with fixed 10-significant-digit scientific notation,
byte-identical across runs and worker counts.
"""

from __future__ import annotations

import configparser
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .atom import Orientation, Rb87Hyperfine, TwoLevelAtom
from .errors import ConfigError
from .interaction import (
    NumericsSettings,
    Scenario,
    entropy,
    free_energy_asymptote,
    free_energy_equilibrium,
    free_energy_state,
    free_energy_zero_temperature,
)
from .materials import (
    Drude,
    PerfectConductor,
    PerfectCrystal,
    Plasma,
    TwoFluidSuperconductor,
)

__all__ = [
    "Sweep",
    "Outputs",
    "LabeledScenario",
    "ScanConfig",
    "ScanRecord",
    "run_scan",
    "emit",
    "serialize_config",
    "parse_config",
]

_TWO_PI = 2.0 * math.pi

# asymptote columns attached when outputs.asymptotes is set
_ASYMPTOTE_COLUMNS = ("non_retarded", "retarded", "plasma_thermal", "drude_thermal",
                      "drude_non_retarded_thermal")


@dataclass(frozen=True)
class Sweep:
    kind: str  # "distance" | "temperature"
    minimum: float
    maximum: float
    points: int
    log: bool = True

    def __post_init__(self):
        if self.kind not in ("distance", "temperature"):
            raise ConfigError(f"unknown sweep kind {self.kind!r}")
        if not (self.minimum < self.maximum):
            raise ConfigError("sweep needs minimum < maximum")
        if self.points < 2:
            raise ConfigError("sweep needs at least 2 points")
        if self.minimum <= 0.0 and (self.log or self.kind == "distance"):
            raise ConfigError("sweep minimum must be positive")

    def grid(self) -> np.ndarray:
        if self.log:
            return np.geomspace(self.minimum, self.maximum, self.points)
        return np.linspace(self.minimum, self.maximum, self.points)


@dataclass(frozen=True)
class Outputs:
    free_energy: bool = True
    entropy: bool = False
    breakdown: bool = False
    asymptotes: bool = False


@dataclass(frozen=True)
class LabeledScenario:
    label: str
    scenario: Scenario


@dataclass(frozen=True)
class ScanConfig:
    scenarios: Tuple[LabeledScenario, ...]
    sweep: Sweep
    fixed: Tuple[float, ...]  # values of the non-swept coordinate
    outputs: Outputs = Outputs()
    numerics: NumericsSettings = NumericsSettings()
    normalization: Optional[float] = None
    workers: int = 1
    entropy_step: float = 1e-3

    def __post_init__(self):
        if not self.scenarios:
            raise ConfigError("scan needs at least one scenario")
        if not self.fixed:
            raise ConfigError("scan needs at least one fixed-coordinate value")
        if any(v < 0.0 for v in self.fixed):
            raise ConfigError("fixed coordinate values must be non-negative")
        if self.sweep.kind == "temperature" and any(v <= 0.0 for v in self.fixed):
            raise ConfigError("fixed distances must be positive")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")


@dataclass(frozen=True)
class ScanRecord:
    """One evaluated grid point; ``status`` is 'ok' or an error marker."""

    scenario: str
    L: float
    T: float
    F: Optional[float] = None
    S: Optional[float] = None
    F_nonresonant: Optional[float] = None
    F_resonant: Optional[float] = None
    F_normalized: Optional[float] = None
    n_terms: Optional[int] = None
    remainder: Optional[float] = None
    truncation_u: Optional[float] = None
    asymptotes: Tuple[Tuple[str, float], ...] = ()
    asymptote_validity: str = ""
    status: str = "ok"
    error: str = ""


def _evaluate_point(args):
    cfg, label, scenario, L, T = args
    try:
        if scenario.mode == "state":
            res = free_energy_state(L, T, scenario, cfg.numerics)
        elif T == 0.0:
            res = free_energy_zero_temperature(L, scenario, cfg.numerics)
        else:
            res = free_energy_equilibrium(L, T, scenario, cfg.numerics)
        s_val = None
        if cfg.outputs.entropy and T > 0.0 and scenario.mode == "equilibrium":
            s_val = entropy(L, T, scenario, step=cfg.entropy_step, numerics=cfg.numerics).value
        asym: Tuple[Tuple[str, float], ...] = ()
        asym_validity = ""
        if cfg.outputs.asymptotes:
            asym, asym_validity = _asymptote_columns(scenario, L, T)
        norm = None
        if cfg.normalization is not None:
            norm = res.value / cfg.normalization
        return ScanRecord(
            scenario=label,
            L=L,
            T=T,
            F=res.value,
            S=s_val,
            F_nonresonant=res.nonresonant if cfg.outputs.breakdown else None,
            F_resonant=res.resonant if cfg.outputs.breakdown else None,
            F_normalized=norm,
            n_terms=res.n_terms if cfg.outputs.breakdown else None,
            remainder=res.remainder if cfg.outputs.breakdown else None,
            truncation_u=res.truncation_u if cfg.outputs.breakdown else None,
            asymptotes=asym,
            asymptote_validity=asym_validity,
        )
    except Exception as exc:  # per-point isolation: scans survive bad points
        return ScanRecord(
            scenario=label, L=L, T=T, status="error", error=f"{type(exc).__name__}: {exc}"
        )


def _asymptote_columns(scenario: Scenario, L: float, T: float):
    """Applicable closed-form values with their validity-window labels."""
    atom = scenario.atom
    if not isinstance(atom, TwoLevelAtom):
        return (), ""
    out = []
    labels = []
    material = scenario.material
    for kind in _ASYMPTOTE_COLUMNS:
        try:
            if kind in ("non_retarded", "retarded"):
                asym = free_energy_asymptote(kind, L, omega_m=atom.omega_m)
            elif T > 0.0 and kind == "plasma_thermal" and isinstance(material, Plasma):
                asym = free_energy_asymptote(kind, L, omega_m=atom.omega_m, T=T)
            elif T > 0.0 and kind.startswith("drude") and isinstance(material, Drude):
                asym = free_energy_asymptote(kind, L, omega_m=atom.omega_m, T=T)
            else:
                continue
            out.append((kind, asym.value))
            labels.append(f"{kind}: {asym.validity}")
        except Exception:
            continue
    return tuple(out), " | ".join(labels)


def run_scan(cfg: ScanConfig):
    """Evaluate all grid points; failures are recorded per point, not raised.

    The task list and output ordering are independent of the worker count,
    so results are bit-identical for any degree of parallelism.
    """
    tasks = []
    grid = cfg.sweep.grid()
    for labeled in cfg.scenarios:
        for fixed in cfg.fixed:
            for x in grid:
                if cfg.sweep.kind == "distance":
                    L, T = float(x), float(fixed)
                else:
                    L, T = float(fixed), float(x)
                tasks.append((cfg, labeled.label, labeled.scenario, L, T))

    if cfg.workers == 1:
        records = [_evaluate_point(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(_evaluate_point, tasks, chunksize=1))
    return records


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return f"{x:.9e}"  # 10 significant digits


def _columns(records):
    cols = ["L_m", "T_K", "F_J", "S_J_per_K", "F_nonresonant_J", "F_resonant_J",
            "F_normalized", "n_terms", "remainder_J", "truncation_u",
            "scenario", "status", "error"]
    asym_kinds = sorted({k for r in records for k, _ in r.asymptotes})
    cols += [f"asymptote_{k}_J" for k in asym_kinds]
    if any(r.asymptote_validity for r in records):
        cols.append("asymptote_validity")
    return cols, asym_kinds


def _record_row(r: ScanRecord, asym_kinds, include_validity=False):
    asym = dict(r.asymptotes)
    row = [
        _fmt(r.L), _fmt(r.T), _fmt(r.F), _fmt(r.S), _fmt(r.F_nonresonant),
        _fmt(r.F_resonant), _fmt(r.F_normalized), _fmt(r.n_terms),
        _fmt(r.remainder), _fmt(r.truncation_u), r.scenario, r.status, r.error,
    ]
    row += [_fmt(asym.get(k)) for k in asym_kinds]
    if include_validity:
        row.append('"' + r.asymptote_validity.replace('"', "'") + '"'
                   if r.asymptote_validity else "")
    return row


def emit(records: Sequence[ScanRecord], fmt: str, destination) -> None:
    """Write records as CSV or JSON; byte-identical for identical inputs.

    ``destination`` is a path or a text file object.  An empty record list
    is an error and creates no file.
    """
    if not records:
        raise ConfigError("no records to emit")
    if fmt not in ("csv", "json"):
        raise ConfigError(f"unknown output format {fmt!r}")

    cols, asym_kinds = _columns(records)
    include_validity = cols[-1] == "asymptote_validity"
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(",".join(cols) + "\n")
        for r in records:
            buf.write(",".join(_record_row(r, asym_kinds, include_validity)) + "\n")
        payload = buf.getvalue()
    else:
        objs = []
        for r in records:
            row = _record_row(r, asym_kinds, include_validity)
            objs.append(dict(zip(cols, row)))
        payload = json.dumps(objs, indent=1) + "\n"

    if hasattr(destination, "write"):
        destination.write(payload)
    else:
        with open(destination, "w", newline="") as fh:
            fh.write(payload)


# ---------------------------------------------------------------------------
# config file format
# ---------------------------------------------------------------------------

_LENGTH_UNITS = {"m": 1.0, "mm": 1e-3, "um": 1e-6, "nm": 1e-9}
_FREQ_UNITS = {"Hz": 1.0, "kHz": 1e3, "MHz": 1e6, "GHz": 1e9, "THz": 1e12}
_TEMP_UNITS = {"K": 1.0, "mK": 1e-3, "uK": 1e-6}
_ENERGY_UNITS = {"J": 1.0}


def _parse_quantity(text: Optional[str], units: dict, what: str) -> float:
    if text is None:
        raise ConfigError(f"{what}: missing value")
    parts = text.strip().split()
    if len(parts) != 2 or parts[1] not in units:
        raise ConfigError(
            f"{what}: expected '<value> <unit>' with unit in {sorted(units)}, got {text!r}"
        )
    try:
        return float(parts[0]) * units[parts[1]]
    except ValueError as exc:
        raise ConfigError(f"{what}: bad numeric value in {text!r}") from exc


def _parse_freq_angular(text: str, what: str) -> float:
    """Frequencies are entered in cycles (Hz etc.) and converted to rad/s."""
    return _TWO_PI * _parse_quantity(text, _FREQ_UNITS, what)


def _fmt_quantity(value: float, unit: str, scale: float) -> str:
    return f"{value / scale:.10g} {unit}"


def _material_from_section(sec) -> object:
    kind = sec.get("material", "").strip()
    if kind == "perfect_conductor":
        return PerfectConductor()
    omega_p = _parse_freq_angular(sec.get("omega_p"), "scenario.omega_p")
    if kind == "plasma":
        return Plasma(omega_p)
    if kind == "drude":
        return Drude(omega_p, _parse_freq_angular(sec.get("gamma"), "scenario.gamma"))
    if kind == "two_fluid":
        return TwoFluidSuperconductor(
            omega_p,
            _parse_freq_angular(sec.get("gamma"), "scenario.gamma"),
            _parse_quantity(sec.get("Tc"), _TEMP_UNITS, "scenario.Tc"),
        )
    if kind == "perfect_crystal":
        return PerfectCrystal(
            omega_p,
            _parse_freq_angular(sec.get("gamma_ref"), "scenario.gamma_ref"),
            _parse_quantity(sec.get("T_ref"), _TEMP_UNITS, "scenario.T_ref"),
            float(sec.get("exponent")),
        )
    raise ConfigError(f"unknown material {kind!r}")


def _material_to_section(material, sec: dict) -> None:
    sec["material"] = material.label
    if isinstance(material, PerfectConductor):
        return
    sec["omega_p"] = _fmt_quantity(material.omega_p / _TWO_PI, "Hz", 1.0)
    if isinstance(material, Drude):
        sec["gamma"] = _fmt_quantity(material.gamma / _TWO_PI, "Hz", 1.0)
    elif isinstance(material, TwoFluidSuperconductor):
        sec["gamma"] = _fmt_quantity(material.gamma / _TWO_PI, "Hz", 1.0)
        sec["Tc"] = _fmt_quantity(material.Tc, "K", 1.0)
    elif isinstance(material, PerfectCrystal):
        sec["gamma_ref"] = _fmt_quantity(material.gamma_ref / _TWO_PI, "Hz", 1.0)
        sec["T_ref"] = _fmt_quantity(material.T_ref, "K", 1.0)
        sec["exponent"] = f"{material.exponent:.10g}"


def _atom_from_section(sec) -> object:
    kind = sec.get("atom", "two_level").strip()
    if kind == "two_level":
        orientation = Orientation(sec.get("orientation", "anisotropic"))
        return TwoLevelAtom(_parse_freq_angular(sec.get("Omega_m"), "scenario.Omega_m"),
                            orientation)
    if kind == "rb87":
        f_str, mf_str = sec.get("prepared_state", "1,-1").split(",")
        return Rb87Hyperfine(
            _parse_freq_angular(sec.get("Omega_hf"), "scenario.Omega_hf"),
            _parse_freq_angular(sec.get("Omega_L"), "scenario.Omega_L"),
            (int(f_str), int(mf_str)),
        )
    raise ConfigError(f"unknown atom {kind!r}")


def _atom_to_section(atom, sec: dict) -> None:
    sec["atom"] = atom.label
    if isinstance(atom, TwoLevelAtom):
        sec["Omega_m"] = _fmt_quantity(atom.omega_m / _TWO_PI, "Hz", 1.0)
        sec["orientation"] = atom.orientation.value
    else:
        sec["Omega_hf"] = _fmt_quantity(atom.omega_hf / _TWO_PI, "Hz", 1.0)
        sec["Omega_L"] = _fmt_quantity(atom.omega_larmor / _TWO_PI, "Hz", 1.0)
        sec["prepared_state"] = f"{atom.prepared_state[0]},{atom.prepared_state[1]}"


def parse_config(text: str) -> ScanConfig:
    """Parse the declarative scan format (see `serialize_config`)."""
    parser = configparser.ConfigParser()
    parser.optionxform = str  # unit-suffixed keys are case sensitive
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from exc

    scenario_sections = [s for s in parser.sections() if s == "scenario" or s.startswith("scenario.")]
    if not scenario_sections:
        raise ConfigError("config needs a [scenario] section")
    scenarios = []
    for name in scenario_sections:
        sec = parser[name]
        label = name.split(".", 1)[1] if "." in name else sec.get("label", "scan")
        atom = _atom_from_section(sec)
        material = _material_from_section(sec)
        mode = sec.get("mode", "equilibrium").strip()
        state = sec.get("state", "").strip() or None
        scenarios.append(
            LabeledScenario(label, Scenario(atom, material, mode=mode, state=state))
        )

    if "sweep" not in parser:
        raise ConfigError("config needs a [sweep] section")
    sw = parser["sweep"]
    kind = sw.get("kind", "distance").strip()
    unit_table = _LENGTH_UNITS if kind == "distance" else _TEMP_UNITS
    sweep = Sweep(
        kind=kind,
        minimum=_parse_quantity(sw.get("min"), unit_table, "sweep.min"),
        maximum=_parse_quantity(sw.get("max"), unit_table, "sweep.max"),
        points=int(sw.get("points", "2")),
        log=sw.getboolean("log", fallback=True),
    )

    if "fixed" not in parser:
        raise ConfigError("config needs a [fixed] section")
    fx = parser["fixed"]
    fixed_unit = _TEMP_UNITS if kind == "distance" else _LENGTH_UNITS
    key = "T" if kind == "distance" else "L"
    raw = fx.get(key)
    if raw is None:
        raise ConfigError(f"[fixed] needs key {key}")
    fixed = tuple(
        _parse_quantity(part.strip(), fixed_unit, f"fixed.{key}")
        for part in raw.split(",")
    )

    outputs = Outputs()
    if "outputs" in parser:
        out = parser["outputs"]
        outputs = Outputs(
            free_energy=out.getboolean("free_energy", fallback=True),
            entropy=out.getboolean("entropy", fallback=False),
            breakdown=out.getboolean("breakdown", fallback=False),
            asymptotes=out.getboolean("asymptotes", fallback=False),
        )
    normalization = None
    workers = 1
    numerics = NumericsSettings()
    entropy_step = 1e-3
    if "outputs" in parser and parser["outputs"].get("normalization"):
        normalization = _parse_quantity(
            parser["outputs"].get("normalization"), _ENERGY_UNITS, "outputs.normalization"
        )
    if "numerics" in parser:
        num = parser["numerics"]
        numerics = NumericsSettings(
            truncation_u=float(num.get("truncation_u", "1e-6")),
            quad_rtol=float(num.get("quad_rtol", "1e-8")),
            max_matsubara_terms=int(num.get("node_cap", "1000000")),
            max_quad_nodes=int(num.get("quad_node_cap", "1000000")),
        )
        workers = int(num.get("workers", "1"))
        entropy_step = float(num.get("entropy_step", "1e-3"))

    return ScanConfig(
        scenarios=tuple(scenarios),
        sweep=sweep,
        fixed=fixed,
        outputs=outputs,
        numerics=numerics,
        normalization=normalization,
        workers=workers,
        entropy_step=entropy_step,
    )


def serialize_config(cfg: ScanConfig) -> str:
    """Render a config back to the INI text format (round-trips parse_config)."""
    parser = configparser.ConfigParser()
    parser.optionxform = str
    multi = len(cfg.scenarios) > 1
    for labeled in cfg.scenarios:
        name = f"scenario.{labeled.label}" if multi else "scenario"
        sec: dict = {}
        if not multi:
            sec["label"] = labeled.label
        _atom_to_section(labeled.scenario.atom, sec)
        _material_to_section(labeled.scenario.material, sec)
        sec["mode"] = labeled.scenario.mode
        if labeled.scenario.state is not None:
            sec["state"] = labeled.scenario.state
        parser[name] = sec

    # lengths serialise in metres so values round-trip bit-exactly
    if cfg.sweep.kind == "distance":
        unit, scale = "m", 1.0
        fixed_unit, fixed_scale, fixed_key = "K", 1.0, "T"
    else:
        unit, scale = "K", 1.0
        fixed_unit, fixed_scale, fixed_key = "m", 1.0, "L"
    parser["sweep"] = {
        "kind": cfg.sweep.kind,
        "min": _fmt_quantity(cfg.sweep.minimum, unit, scale),
        "max": _fmt_quantity(cfg.sweep.maximum, unit, scale),
        "points": str(cfg.sweep.points),
        "log": str(cfg.sweep.log).lower(),
    }
    parser["fixed"] = {
        fixed_key: ", ".join(_fmt_quantity(v, fixed_unit, fixed_scale) for v in cfg.fixed)
    }
    outputs = {
        "free_energy": str(cfg.outputs.free_energy).lower(),
        "entropy": str(cfg.outputs.entropy).lower(),
        "breakdown": str(cfg.outputs.breakdown).lower(),
        "asymptotes": str(cfg.outputs.asymptotes).lower(),
    }
    if cfg.normalization is not None:
        outputs["normalization"] = _fmt_quantity(cfg.normalization, "J", 1.0)
    parser["outputs"] = outputs
    parser["numerics"] = {
        "truncation_u": f"{cfg.numerics.truncation_u:.10g}",
        "quad_rtol": f"{cfg.numerics.quad_rtol:.10g}",
        "node_cap": str(cfg.numerics.max_matsubara_terms),
        "quad_node_cap": str(cfg.numerics.max_quad_nodes),
        "workers": str(cfg.workers),
        "entropy_step": f"{cfg.entropy_step:.10g}",
    }
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()
