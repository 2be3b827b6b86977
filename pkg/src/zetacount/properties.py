"""Randomised inequality suites behind the ``check-properties`` command.

Each suite draws its own samples from a seeded generator and reports the
first counterexample it meets, so a failing run can be replayed exactly.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import fcr
from .gammabounds import E_linear_bound, E_of, g_of_T
from .params import GAMMA_HEIGHT_MIN, ContourParams, ZetaLineHypotheses
from .specfn import functional_equation_rhs, zeta_array
from .zetabounds import FNOverflowError, Region, f_N, gamma_ratio_sides, zeta_upper_bound

#: Row-2 contour, the default for suites that need a circle.
DEFAULT_PARAMS = ContourParams(1.025253504, 1.182375395, 0.009944751381)

ENVELOPE_HEIGHTS = (50.0, 100.0, 500.0)
ENVELOPE_POWERS = (1, 2, 4)


@dataclass
class SuiteResult:
    name: str
    samples: int
    failures: int
    witness: str = ""

    @property
    def passed(self):
        return self.failures == 0

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = "%s %-22s samples=%d failures=%d" % (status, self.name, self.samples, self.failures)
        return text + ("  witness: " + self.witness if self.witness else "")


class _Tally:
    def __init__(self, name):
        self.name, self.n, self.bad, self.witness = name, 0, 0, ""

    def check(self, ok, describe):
        self.n += 1
        if not ok:
            self.bad += 1
            if not self.witness:
                self.witness = describe()

    def result(self):
        return SuiteResult(self.name, self.n, self.bad, self.witness)


def _region_sigma_range(region, eta):
    return {
        Region.SigmaAbove1PlusEta: (1 + eta, 3.0),
        Region.OneTo1PlusEta: (1.0, 1 + eta),
        Region.HalfToOne: (0.5, 1.0),
        Region.ZeroToHalf: (0.0, 0.5),
        Region.MinusEtaToZero: (-eta, 0.0),
        Region.BelowMinusEta: (-3.0, -eta),
    }[region]


def region_bounds(samples, rng, hyp, params):
    """|zeta(s)| <= zeta_upper_bound(s), ``samples`` points per strip.

    Heights are uniform on 3 <= |t| <= 500 except for a fifth of the draws on
    |t| < 3, where the shift constants are tightest.
    """
    tally = _Tally("region bounds")
    for region in Region:
        lo, hi = _region_sigma_range(region, params.eta)
        sigma = rng.uniform(lo, hi, samples)
        low = rng.random(samples) < 0.2
        t = np.where(low, rng.uniform(0.0, 3.0, samples), rng.uniform(3.0, 500.0, samples))
        t = t * rng.choice([-1.0, 1.0], samples)
        # the pole is not a sample point
        t[(t == 0) & (sigma == 1.0)] = 1e-6
        s = sigma + 1j * t
        z = np.abs(zeta_array(s))
        for point, val in zip(s, z):
            bound = zeta_upper_bound(point, hyp, params.eta)
            tally.check(val <= bound and math.isfinite(bound),
                        lambda: "region %d s=%r |zeta|=%.12g bound=%.12g"
                        % (region.value, complex(point), val, bound))
    return tally.result()


def g_bound(samples, rng):
    """|g(T)| <= 1/(25 T) on log-uniform T in [5/7, 1e6]."""
    tally = _Tally("g(T)")
    for T in np.exp(rng.uniform(math.log(GAMMA_HEIGHT_MIN), math.log(1e6), samples)):
        g = g_of_T(T)
        tally.check(abs(g) <= 1.0 / (25.0 * T), lambda: "T=%r g=%.6g" % (T, g))
    return tally.result()


def e_bounds(samples, rng):
    """0 < E(T, d1) <= E(T, d2) for d1 <= d2, and E/pi under the linear majorant."""
    tally = _Tally("E(T, d)")
    T = np.exp(rng.uniform(math.log(GAMMA_HEIGHT_MIN), math.log(1e6), samples))
    d = np.sort(rng.uniform(0.0, 4.49, (samples, 2)), axis=1)
    lin = rng.uniform(0.25, 0.625, samples)
    for Tk, (d1, d2), dl in zip(T, d, lin):
        e1, e2 = E_of(Tk, d1), E_of(Tk, d2)
        # monotonicity is only resolvable above the absolute rounding noise of E_of
        tally.check(0 < e1 <= e2 + 1e-13 * max(1.0, Tk),
                    lambda: "T=%r d1=%r d2=%r E=(%.6g, %.6g)" % (Tk, d1, d2, e1, e2))
        el = E_of(Tk, dl) / math.pi
        bound = E_linear_bound(Tk, dl)
        tally.check(el <= bound, lambda: "T=%r d=%r E/pi=%.6g linear=%.6g" % (Tk, dl, el, bound))
    return tally.result()


def l_majorants(samples, rng, hyp, params):
    """L_j <= L*_j / T and M_j <= L*_j / (2 T log T) for T >= T0."""
    tally = _Tally("L, M vs L*")
    js = (-1, 0, 1, -2, hyp.Q0, hyp.Q2, hyp.Q4, hyp.Q5)
    T0 = params.T0
    for k in range(samples):
        theta = rng.uniform(0.0, math.pi)
        T = T0 if k == 0 else T0 * math.exp(rng.uniform(0.0, math.log(1e4)))
        j = js[k % len(js)]
        L = fcr.L_j(theta, j, T, params)
        M = fcr.M_j(theta, j, T, params)
        Ls = fcr.L_star_j(theta, j, T0, params)
        # equality holds at theta in {0, pi} with T = T0; allow for rounding there
        tally.check(L <= Ls / T * (1 + 1e-15) and M <= Ls / (2 * T * math.log(T)) * (1 + 1e-15),
                    lambda: "theta=%r j=%r T=%r L=%.6g M=%.6g L*=%.6g" % (theta, j, T, L, M, Ls))
    return tally.result()


def gamma_ratio(samples, rng):
    """|Gamma(1/2 - s/2) / Gamma(s/2)| <= (|1+s|/2)^(1/2 - sigma) for -1/2 <= sigma <= 1/2."""
    tally = _Tally("gamma ratio")
    sigma = rng.uniform(-0.5, 0.5, samples)
    t = rng.uniform(-100.0, 100.0, samples)
    for s in sigma + 1j * t:
        lhs, rhs = gamma_ratio_sides(s)
        tally.check(lhs <= rhs * (1 + 1e-12),
                    lambda: "s=%r lhs=%.12g rhs=%.12g" % (complex(s), lhs, rhs))
    return tally.result()


def envelope(samples, rng, hyp, params, left_strip="zeta"):
    """(1/N) log|f_N(c + r e^{i theta})| <= F(theta, T), cycling T and N."""
    tally = _Tally("envelope vs f_N")
    combos = [(T, N) for T in ENVELOPE_HEIGHTS for N in ENVELOPE_POWERS]
    for k in range(samples):
        T, N = combos[k % len(combos)]
        theta = rng.uniform(0.0, math.pi)
        s = params.c + params.r * complex(math.cos(theta), math.sin(theta))
        try:
            lhs = math.log(abs(f_N(s, T, N)) or 1e-300) / N
        except FNOverflowError:
            lhs = math.inf
        F = fcr.F_pointwise(theta, T, params, hyp, left_strip)
        tally.check(lhs <= F, lambda: "theta=%r T=%r N=%d lhs=%.9g F=%.9g" % (theta, T, N, lhs, F))
    return tally.result()


def functional_equation(samples, rng):
    """Relative residual of the functional equation below 1e-8 in the critical strip."""
    tally = _Tally("functional equation")
    sigma = rng.uniform(0.0, 1.0, samples)
    t = rng.uniform(2.0, 100.0, samples) * rng.choice([-1.0, 1.0], samples)
    s = sigma + 1j * t
    z = zeta_array(s)
    for point, lhs in zip(s, z):
        rhs = functional_equation_rhs(point)
        res = abs(lhs - rhs) / max(abs(lhs), abs(rhs))
        tally.check(res <= 1e-8, lambda: "s=%r residual=%.3g" % (complex(point), res))
    return tally.result()


SUITES = ("region", "g", "E", "L", "gamma", "envelope", "fe")


def run_all(samples=500, seed=0, hyp=None, params=None, only=SUITES, left_strip="zeta"):
    """Run the named suites with ``samples`` draws each; one SuiteResult per suite.

    The envelope suite checks the ``left_strip`` variant of F; with
    ``"printed"`` it finds counterexamples on the -eta <= sigma <= 0 strip.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    hyp = ZetaLineHypotheses() if hyp is None else hyp
    params = DEFAULT_PARAMS if params is None else params
    out = []
    for i, name in enumerate(SUITES):
        if name not in only:
            continue
        # one stream per suite, so suites can be run separately and still agree
        rng = np.random.default_rng([seed, i])
        if name == "region":
            out.append(region_bounds(samples, rng, hyp, params))
        elif name == "g":
            out.append(g_bound(samples, rng))
        elif name == "E":
            out.append(e_bounds(samples, rng))
        elif name == "L":
            out.append(l_majorants(samples, rng, hyp, params))
        elif name == "gamma":
            out.append(gamma_ratio(samples, rng))
        elif name == "envelope":
            out.append(envelope(samples, rng, hyp, params, left_strip))
        else:
            out.append(functional_equation(samples, rng))
    return out
