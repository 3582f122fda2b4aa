"""Shared reference parameters for the test suite.

The canonical surface and atom: omega_p/2pi = 1.42e15 Hz (lambda_p ~ 210 nm),
gamma = 0.01 omega_p, and a 480 MHz Zeeman transition (T_m ~ 23 mK,
lambda_m ~ 63 cm).
"""

import math

import pytest

from magcp import CODATA, Drude, Plasma, TwoLevelAtom

OMEGA_P = 2.0 * math.pi * 1.42e15
GAMMA = 0.01 * OMEGA_P
OMEGA_M = 2.0 * math.pi * 4.8e8
LAMBDA_P = 2.0 * math.pi * CODATA.c / OMEGA_P
LAMBDA_M = 2.0 * math.pi * CODATA.c / OMEGA_M
T_M = CODATA.hbar * OMEGA_M / CODATA.kB
MU_X2 = (CODATA.gS * CODATA.muB / 2.0) ** 2


@pytest.fixture
def drude():
    return Drude(OMEGA_P, GAMMA)


@pytest.fixture
def plasma():
    return Plasma(OMEGA_P)


@pytest.fixture
def two_level():
    return TwoLevelAtom(OMEGA_M)
