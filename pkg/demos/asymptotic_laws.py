"""Closed-form asymptotes against the full numerics, regime by regime.

Sweeps the zero-temperature free energy across six decades of distance
for the plasma model and prints the ratio to the applicable closed form:
1/L in the sub-skin-depth (London) region, the 1/L^3 image-dipole law in
the non-retarded window, and the 1/L^4 Casimir-Polder law beyond the
transition wavelength.
"""

import math

import numpy as np

from magcp import (
    CODATA,
    Plasma,
    Scenario,
    TwoLevelAtom,
    free_energy_asymptote,
    free_energy_zero_temperature,
)
from magcp.presets import OMEGA_M, OMEGA_P

c = CODATA.c
atom = TwoLevelAtom(OMEGA_M)
scenario = Scenario(atom, Plasma(OMEGA_P))
lambda_p = 2.0 * math.pi * c / OMEGA_P
lambda_m = 2.0 * math.pi * c / OMEGA_M

rows = []
for L in np.geomspace(1e-10, 10.0, 22):
    f = free_energy_zero_temperature(float(L), scenario).value
    if L < 0.3 * c / OMEGA_P:
        kind, ref = "sub_skin (1/L)", free_energy_asymptote(
            "sub_skin_depth_plasma", float(L), lambda_p=lambda_p
        ).value
    elif L < 0.03 * lambda_m:
        kind, ref = "non_retarded (1/L^3)", free_energy_asymptote(
            "non_retarded", float(L)
        ).value
    else:
        kind, ref = "retarded (1/L^4)", free_energy_asymptote(
            "retarded", float(L), omega_m=OMEGA_M
        ).value
    rows.append((L, f, kind, f / ref))

print(f"{'L (m)':>12} {'F (J)':>13}  {'regime':<22} {'F/asymptote':>11}")
for L, f, kind, ratio in rows:
    print(f"{L:12.3e} {f:13.4e}  {kind:<22} {ratio:11.4f}")
