"""Gamma-factor error terms: g(T) and the paired-argument bound E(T, d)."""

import math

from .params import GAMMA_HEIGHT_MIN
from .specfn import ZetaDomainError, log_gamma_im

D_MAX = 4.5
_KAPPA = (8.0 + 6.0 * math.pi) / 45.0


def g_of_T(T):
    """Gamma-factor remainder, (2/pi) Im log Gamma(1/4 + iT/2) - (T/pi) log(T/2e) + 1/4.

    Bounded by 1/(25 T) for T >= 5/7.
    """
    T = float(T)
    if T < GAMMA_HEIGHT_MIN:
        raise ZetaDomainError("g(T) needs T >= 5/7")
    lg = log_gamma_im(complex(0.25, 0.5 * T))
    return 2.0 / math.pi * lg - T / math.pi * math.log(T / (2.0 * math.e)) + 0.25


def E_of(T, d):
    """Closed-form majorant of the paired gamma-argument variation at offset d."""
    T, d = float(T), float(d)
    if T < GAMMA_HEIGHT_MIN:
        raise ZetaDomainError("E(T, d) needs T >= 5/7")
    if not 0.0 <= d < D_MAX:
        raise ZetaDomainError("E(T, d) needs 0 <= d < 9/2")
    a, b, m = 2.0 * d + 17.0, -2.0 * d + 17.0, 17.0
    four_t2 = 4.0 * T * T

    rational = (2.0 * T / 3.0) / (a * a + four_t2) + (2.0 * T / 3.0) / (b * b + four_t2) \
        - (4.0 * T / 3.0) / (m * m + four_t2)
    logs = T / 2.0 * math.log1p(m * m / four_t2) - T / 4.0 * math.log1p(a * a / four_t2) \
        - T / 4.0 * math.log1p(b * b / four_t2)
    cubes = _KAPPA / (a * a + four_t2) ** 1.5 + _KAPPA / (b * b + four_t2) ** 1.5 \
        + 2.0 * _KAPPA / (m * m + four_t2) ** 1.5
    arcs = 0.0
    for k in range(4):
        arcs += 2.0 * math.atan((1 + 4 * k) / (2.0 * T)) \
            - math.atan((2.0 * d + 1 + 4 * k) / (2.0 * T)) \
            - math.atan((-2.0 * d + 1 + 4 * k) / (2.0 * T))
    weighted = (2.0 * d + 15.0) / 4.0 * math.atan(a / (2.0 * T)) \
        + (-2.0 * d + 15.0) / 4.0 * math.atan(b / (2.0 * T)) \
        - 7.5 * math.atan(m / (2.0 * T))
    return rational + logs + cubes + arcs + weighted


def E_linear_bound(T, d):
    """Linear-in-d majorant of E(T, d)/pi valid for d in [1/4, 5/8]."""
    return (640.0 * d - 112.0) / (1536.0 * (3.0 * T - 1.0)) + 2.0 ** -10
