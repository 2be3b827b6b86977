"""Explicit upper bounds for |zeta(s)| in six vertical strips, and related checks."""

import math
from dataclasses import dataclass

import numpy as np

from .fcr import Piece, nearest_int, pieces_at
from .specfn import log_abs_gamma, zeta_array, zeta_complex, zeta_real

Region = Piece

_LOG_2PI = math.log(2.0 * math.pi)
FN_GUARD = 1e30


def _region_bound(region, s, hyp, eta):
    sigma = s.real
    absq = lambda q: abs(q + s)  # noqa: E731
    if region is Region.SigmaAbove1PlusEta:
        return zeta_real(sigma)
    if region is Region.OneTo1PlusEta:
        q = absq(hyp.Q0)
        left = hyp.c1 * q * math.log(q) ** hyp.c2
        right = zeta_real(1 + eta) * q
        return left ** ((1 + eta - sigma) / eta) * right ** ((sigma - 1) / eta) / abs(s - 1)
    if region is Region.HalfToOne:
        q = absq(hyp.Q2)
        half = hyp.k1 * q ** (hyp.k2 + 1) * math.log(q) ** hyp.k3
        one = hyp.c1 * q * math.log(q) ** hyp.c2
        return half ** (2 - 2 * sigma) * one ** (2 * sigma - 1) / abs(s - 1)
    if region is Region.ZeroToHalf:
        q = absq(hyp.Q5)
        zero = hyp.c1 / math.sqrt(2 * math.pi) * q ** 0.5 * math.log(q) ** hyp.c2
        half = hyp.k1 * q ** hyp.k2 * math.log(q) ** hyp.k3
        return zero ** (1 - 2 * sigma) * half ** (2 * sigma)
    if region is Region.MinusEtaToZero:
        q = absq(hyp.Q4)
        left = (2 * math.pi) ** -(0.5 + eta) * zeta_real(1 + eta) * q ** (0.5 + eta)
        zero = hyp.c1 / math.sqrt(2 * math.pi) * q ** 0.5 * math.log(q) ** hyp.c2
        return left ** (-sigma / eta) * zero ** ((sigma + eta) / eta)
    # sigma <= -eta: functional equation plus the shifted gamma-ratio product, in logs
    n = nearest_int(sigma)
    log_b = (math.log(zeta_real(1 - sigma)) - (0.5 - sigma) * _LOG_2PI
             + (0.5 + n - sigma) * math.log(abs(1 + s - n))
             + sum(math.log(abs(s + j - 1)) for j in range(1, -n + 1)))
    return math.exp(log_b)


def zeta_upper_bound(s, hyp, eta):
    """Proven upper bound on |zeta(s)| from the strip containing Re s.

    On a shared boundary abscissa the smaller of the two bounds is returned.
    """
    s = complex(s)
    return min(_region_bound(r, s, hyp, eta) for r in pieces_at(s.real, eta))


def gamma_ratio_sides(s):
    """(|Gamma(1/2 - s/2) / Gamma(s/2)|, (|1 + s|/2)^(1/2 - sigma))."""
    s = complex(s)
    lhs = math.exp(log_abs_gamma(0.5 - s / 2) - log_abs_gamma(s / 2))
    rhs = (abs(1 + s) / 2) ** (0.5 - s.real)
    return lhs, rhs


def gamma_ratio_bound_holds(s):
    """Whether the gamma-quotient estimate holds at s (for -1/2 <= Re s <= 1/2)."""
    lhs, rhs = gamma_ratio_sides(s)
    return lhs <= rhs * (1 + 1e-12)


# --------------------------------------------------------------------------
# shift constants
# --------------------------------------------------------------------------


@dataclass
class QCheck:
    name: str
    max_ratio: float
    worst_t: float

    @property
    def passed(self):
        return self.max_ratio <= 1.0


@dataclass
class QReport:
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def default_q_grid(t_max=5000.0):
    """Grid on [0, t_max]: step 0.01 below 50, 0.1 above."""
    low = np.arange(0.0, 50.0, 0.01)
    high = np.arange(50.0, t_max + 1e-9, 0.1)
    return np.concatenate([low, high])


def verify_Q(hyp, sample_grid, eta=None):
    """Largest left/right ratio of each shift-constant inequality over a grid of t >= 0.

    The inequality tied to the strip -eta <= sigma <= 0 is only checked when
    ``eta`` is given.
    """
    t = np.asarray(sample_grid, dtype=float)
    out = []

    def record(name, lhs, rhs):
        # a zero right side (log 1 with Q4 = 1) shows up as an infinite ratio
        with np.errstate(divide="ignore"):
            ratio = lhs / rhs
        k = int(np.argmax(ratio))
        out.append(QCheck(name, float(ratio[k]), float(t[k])))

    def q_terms(q, sigma):
        mod = np.abs(q + sigma + 1j * t)
        return mod, np.log(mod)

    # |(s-1) zeta(s)| on Re s = 1; the t = 0 limit is the residue 1
    s1 = 1.0 + 1j * t
    lhs = np.ones_like(t)
    nz = t != 0
    lhs[nz] = np.abs((s1[nz] - 1) * zeta_array(s1[nz]))
    mod, lg = q_terms(hyp.Q0, 1.0)
    record("Q0: |(s-1)zeta(s)| on sigma=1", lhs, hyp.c1 * mod * lg ** hyp.c2)

    zh = np.abs(zeta_array(0.5 + 1j * t))
    mod, lg = q_terms(hyp.Q1, 0.5)
    record("Q1: |(s-1)zeta(s)| on sigma=1/2", np.abs(-0.5 + 1j * t) * zh,
           hyp.k1 * mod ** (hyp.k2 + 1) * lg ** hyp.k3)
    mod, lg = q_terms(hyp.Q3, 0.5)
    record("Q3: |zeta(s)| on sigma=1/2", zh, hyp.k1 * mod ** hyp.k2 * lg ** hyp.k3)

    z0 = np.abs(zeta_array(0.0 + 1j * t))
    mod, lg = q_terms(hyp.Q4, 0.0)
    record("Q4: |zeta(s)| on sigma=0", z0,
           hyp.c1 / math.sqrt(2 * math.pi) * mod ** 0.5 * lg ** hyp.c2)

    if eta is not None:
        ze = np.abs(zeta_array(-eta + 1j * t))
        mod = np.abs(hyp.Q4 - eta + 1j * t)
        record("Q4: |zeta(s)| on sigma=-eta", ze,
               (mod / (2 * math.pi)) ** (0.5 + eta) * zeta_real(1 + eta))
    return QReport(out)


# --------------------------------------------------------------------------
# test function
# --------------------------------------------------------------------------


class FNOverflowError(OverflowError):
    pass


def f_N(s, T, N):
    """Symmetrised test function 1/2 [((s+iT-1) zeta(s+iT))^N + ((s-iT-1) zeta(s-iT))^N]."""
    s = complex(s)
    if not 1 <= N <= 8:
        raise ValueError("N must be in 1..8")
    up, down = s + 1j * T, s - 1j * T
    a = (up - 1) * zeta_complex(up)
    b = (down - 1) * zeta_complex(down)
    if max(abs(a), abs(b)) ** N > FN_GUARD:
        raise FNOverflowError("|base|^N exceeds %g" % FN_GUARD)
    return 0.5 * (a ** N + b ** N)
