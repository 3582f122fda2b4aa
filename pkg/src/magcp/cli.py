"""Command-line interface: scans, figure presets, entropy, asymptotes.

Exit codes: 0 all points ok, 2 configuration invalid, 3 some grid points
failed (per-point errors are recorded in the output table).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import replace

from .atom import TwoLevelAtom, clebsch_gordan
from .constants import CODATA, thermal_wavelength
from .errors import ConfigError, DomainError, UnknownPresetError
from .greens import magnetic_green_imag, magnetic_green_real
from .interaction import (
    ASYMPTOTE_KINDS,
    entropy,
    free_energy_asymptote,
    free_energy_zero_temperature,
)
from .materials import Drude, PerfectConductor, Plasma
from .presets import PRESET_NAMES, figure_preset
from .scan import ScanConfig, emit, parse_config, run_scan, serialize_config

_EXIT_OK = 0
_EXIT_CONFIG = 2
_EXIT_PARTIAL = 3


def _add_common(parser):
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default="-", help="output path, '-' for stdout")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--tolerance", type=float, default=None,
                        help="relative quadrature tolerance")
    parser.add_argument("--truncation-u", type=float, default=None,
                        help="Matsubara truncation target u")


def _apply_overrides(cfg: ScanConfig, args) -> ScanConfig:
    numerics = cfg.numerics
    if args.tolerance is not None:
        numerics = replace(numerics, quad_rtol=args.tolerance)
    if args.truncation_u is not None:
        numerics = replace(numerics, truncation_u=args.truncation_u)
    cfg = replace(cfg, numerics=numerics)
    if args.workers is not None:
        cfg = replace(cfg, workers=args.workers)
    return cfg


def _emit_records(records, args) -> int:
    if args.out == "-":
        emit(records, args.format, sys.stdout)
    else:
        emit(records, args.format, args.out)
    if any(r.status != "ok" for r in records):
        n_bad = sum(1 for r in records if r.status != "ok")
        print(f"warning: {n_bad}/{len(records)} grid points failed", file=sys.stderr)
        return _EXIT_PARTIAL
    return _EXIT_OK


def _cmd_scan(args) -> int:
    with open(args.config) as fh:
        cfg = parse_config(fh.read())
    cfg = _apply_overrides(cfg, args)
    return _emit_records(run_scan(cfg), args)


def _cmd_preset(args) -> int:
    cfg = figure_preset(args.name)
    cfg = _apply_overrides(cfg, args)
    if args.show_config:
        sys.stdout.write(serialize_config(cfg))
        return _EXIT_OK
    return _emit_records(run_scan(cfg), args)


def _scenario_from_config(args):
    with open(args.config) as fh:
        cfg = parse_config(fh.read())
    cfg = _apply_overrides(cfg, args)
    return cfg.scenarios[0].scenario, cfg


def _cmd_entropy(args) -> int:
    scenario, cfg = _scenario_from_config(args)
    s = entropy(args.L * 1e-6, args.T, scenario, step=args.step, numerics=cfg.numerics)
    print(f"S({args.L} um, {args.T} K) = {s.value:.9e} J/K")
    if s.sides:
        print(f"  one-sided at Tc: below = {s.sides['below']:.9e}, "
              f"above = {s.sides['above']:.9e} J/K")
    else:
        print(f"  step-halving estimates: {', '.join(f'{v:.6e}' for v in s.estimates)}")
    return _EXIT_OK


def _cmd_asymptote(args) -> int:
    kwargs = dict(L=args.L * 1e-6)
    if args.omega_m_hz is not None:
        kwargs["omega_m"] = 2.0 * math.pi * args.omega_m_hz
    if args.T is not None:
        kwargs["T"] = args.T
    if args.lambda_p_um is not None:
        kwargs["lambda_p"] = args.lambda_p_um * 1e-6
    if args.delta_m_um is not None:
        kwargs["delta_m"] = args.delta_m_um * 1e-6
    val = free_energy_asymptote(args.kind, **kwargs)
    print(f"{args.kind}(L = {args.L} um) = {val.value:.9e} J")
    print(f"  valid: {val.validity}")
    return _EXIT_OK


def _cmd_selftest(args) -> int:
    """Fast internal consistency checks; independent of the test suite."""
    checks = []
    mu0, c = CODATA.mu0, CODATA.c

    lam = thermal_wavelength(1.0)
    checks.append(("thermal wavelength at 1 K ~ 0.18 mm", abs(lam / 1.8e-4 - 1.0) < 0.03))

    pc = PerfectConductor()
    L, xi = 1e-6, 3e14
    g = magnetic_green_imag(L, xi, pc)
    x = 2.0 * xi * L / c
    ref = -mu0 / (32.0 * math.pi * L**3) * (1.0 + x + x**2) * math.exp(-x)
    checks.append(("perfect-conductor kernel, imaginary axis", abs(g.H_xx / ref - 1.0) < 1e-9))

    w0 = 3.0
    omega = w0 * c / (2.0 * L)
    gr = magnetic_green_real(L, omega, pc)
    ref_r = -mu0 / (32.0 * math.pi * L**3) * (1.0 - 1j * w0 - w0**2) * complex(math.cos(w0), math.sin(w0))
    checks.append(("perfect-conductor kernel, real axis", abs(gr.H_xx / ref_r - 1.0) < 1e-9))

    omega_p = 2.0 * math.pi * 1.42e15
    gd = magnetic_green_imag(1e-6, 0.0, Drude(omega_p, 0.01 * omega_p))
    checks.append(("normal-metal static decoupling H(L, 0) = 0", gd.H_xx == 0.0))

    gp = magnetic_green_imag(100.0 * 2.0 * math.pi * c / omega_p, 0.0, Plasma(omega_p))
    img = -mu0 / (32.0 * math.pi * (100.0 * 2.0 * math.pi * c / omega_p) ** 3)
    checks.append(("plasma static image limit at 100 lambda_p", abs(gp.H_xx / img - 1.0) < 0.02))

    checks.append(("Clebsch-Gordan spin-1/2 pair", abs(clebsch_gordan(0.5, 0.5, 0.5, -0.5, 1, 0) - 1.0 / math.sqrt(2.0)) < 1e-14))

    atom = TwoLevelAtom(2.0 * math.pi * 4.8e8)
    from .interaction import Scenario
    f = free_energy_zero_temperature(1e-6, Scenario(atom, Plasma(omega_p)))
    checks.append(("plasma reference point at 1 um", abs(f.value / 9.79e-37 - 1.0) < 0.02))

    ok = True
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
        ok &= passed
    return _EXIT_OK if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magcp",
        description="Magnetic Casimir-Polder free energy and entropy near planar surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="run a scan from a config file")
    p_scan.add_argument("--config", required=True)
    _add_common(p_scan)
    p_scan.set_defaults(func=_cmd_scan)

    p_preset = sub.add_parser("preset", help="run a figure preset")
    p_preset.add_argument("name", choices=PRESET_NAMES)
    p_preset.add_argument("--show-config", action="store_true",
                          help="print the resolved config instead of running")
    _add_common(p_preset)
    p_preset.set_defaults(func=_cmd_preset)

    p_ent = sub.add_parser("entropy", help="entropy at one (L, T) point")
    p_ent.add_argument("--config", required=True, help="config supplying the scenario")
    p_ent.add_argument("--L", type=float, required=True, help="distance in um")
    p_ent.add_argument("--T", type=float, required=True, help="temperature in K")
    p_ent.add_argument("--step", type=float, default=1e-3, help="relative step")
    _add_common(p_ent)
    p_ent.set_defaults(func=_cmd_entropy)

    p_asym = sub.add_parser("asymptote", help="closed-form asymptotic values")
    p_asym.add_argument("kind", choices=ASYMPTOTE_KINDS)
    p_asym.add_argument("--L", type=float, required=True, help="distance in um")
    p_asym.add_argument("--T", type=float, default=None, help="temperature in K")
    p_asym.add_argument("--omega-m-hz", type=float, default=None,
                        help="transition frequency Omega_m/2pi in Hz")
    p_asym.add_argument("--lambda-p-um", type=float, default=None)
    p_asym.add_argument("--delta-m-um", type=float, default=None)
    p_asym.set_defaults(func=_cmd_asymptote)

    p_self = sub.add_parser("selftest", help="quick internal consistency checks")
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DomainError, UnknownPresetError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
