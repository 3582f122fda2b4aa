"""Interaction with a superconducting surface across the phase transition.

Below Tc the two-fluid surface behaves like the plasma model at long
range (the Meissner response keeps the static TE reflection finite), so
the thermal plateau survives; heating through Tc switches the response to
the normal-metal form and the plateau collapses.  The free energy is
continuous at Tc but its temperature slope is not: the entropy jumps,
which shows up as a spike in the finite-difference derivative.

Writes fig2.csv (distance scans at several T/Tc) and
fig3_twofluid.csv (fixed distance, temperature scan through Tc).
"""

from magcp import emit, figure_preset, run_scan

for name in ("fig2", "fig3_twofluid"):
    cfg = figure_preset(name)
    records = run_scan(cfg)
    emit(records, "csv", f"{name}.csv")
    bad = sum(1 for r in records if r.status != "ok")
    print(f"{name}: {len(records)} points ({bad} failed) -> {name}.csv")
