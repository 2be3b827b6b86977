"""Acceptance suite: one PASS/FAIL line per headline criterion.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed even
under capture) or directly with ``python tests/test_acceptance.py``.
"""

import math
import sys
import time

import numpy as np
import pytest

from zetacount import properties
from zetacount.assembly import TABLE2, assemble_constants, c_tilde_1, c_tilde_2
from zetacount.optimizer import DEFAULT_STARTS, Objective, optimize
from zetacount.params import ContourParams, ZetaLineHypotheses
from zetacount.zeros import bundled_zeros, count_zeros, hardy_zeros, main_term, s_of_T

SEED = 20240611


def report(capsys, label, ok, detail):
    line = "%s  %-34s %s" % ("PASS" if ok else "FAIL", label, detail)
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def _heights(n=200):
    rng = np.random.default_rng(SEED)
    return rng.uniform(math.e, 1000.0, n)


def test_table_rows_reproduced(capsys):
    worst, slowest = 0.0, 0.0
    for (c, r, eta), ref in TABLE2:
        t = time.perf_counter()
        bc = assemble_constants(ContourParams(c, r, eta, T0=30_610_046_000, J1=64, J2=39))
        slowest = max(slowest, time.perf_counter() - t)
        worst = max(worst, max(abs(a - b) for a, b in zip((bc.C1, bc.C2, bc.C3, bc.C3prime), ref)))
    ok = worst <= 1e-4 and slowest < 10.0
    assert report(capsys, "table rows (3 x C1,C2,C3,C3')", ok,
                  "max |dev| = %.2e (tol 1e-4), slowest row %.2f s (limit 10 s)" % (worst, slowest))


def test_closed_form_constants_independent(capsys):
    base = ZetaLineHypotheses()
    p = ContourParams(*TABLE2[1][0])
    ref = (c_tilde_1(p, base), c_tilde_2(p, base))
    variants = [
        (p, ZetaLineHypotheses(c1=1.3)),
        (p, ZetaLineHypotheses(k1=0.4)),
        (p, ZetaLineHypotheses(Q0=2.0, Q1=3.0, Q2=3.0, Q3=6.0, Q4=1.1, Q5=6.0)),
        (p.with_(T0=1e5), base),
        (p.with_(T0=1e25), ZetaLineHypotheses(c1=0.9, k1=2.0, Q4=4.0, Q5=4.0)),
    ]
    same = all((c_tilde_1(q, h), c_tilde_2(q, h)) == ref for q, h in variants)
    assert report(capsys, "C1~, C2~ bit-identical", same,
                  "%d perturbations of c1, k1, Q's, T0" % len(variants))


def test_optimizer_reaches_smallest_c1(capsys):
    t = time.perf_counter()
    res = optimize(Objective("min_c1"), DEFAULT_STARTS, 2000, seed=0)
    elapsed = time.perf_counter() - t
    ok = res.value <= 0.10379 and elapsed < 300
    p = res.params
    assert report(capsys, "optimizer min C1", ok,
                  "C1 = %.7f (<= 0.10379) at c=%.10g r=%.8g eta=%.3g, %.1f s"
                  % (res.value, p.c, p.r, p.eta, elapsed))


def test_counts_against_corollary_and_hardy(capsys):
    zl = bundled_zeros()
    bad = []
    for T in _heights():
        dev = abs(count_zeros(T, zl) - main_term(T))
        bound = 0.1038 * math.log(T) + 0.2573 * math.log(math.log(T)) + 9.3675
        if dev > bound:
            bad.append(T)
    computed = hardy_zeros(1000.0)
    same_counts = all(sum(g <= T for g in computed) == count_zeros(T, zl)
                      for T in list(_heights()) + [100.0, 1000.0])
    n100, n1000 = sum(g <= 100 for g in computed), len(computed)
    ok = not bad and same_counts and (n100, n1000) == (29, 649)
    assert report(capsys, "N(T) corollary + Hardy Z counts", ok,
                  "200 heights, %d violations; Hardy N(100)=%d N(1000)=%d, agrees with fixture: %s"
                  % (len(bad), n100, n1000, same_counts))


def test_S_bounds(capsys):
    zl = bundled_zeros()
    right = 2.5167 + 1 / (50 * math.e) + 1
    worst_s, worst_dev = 0.0, 0.0
    for T in _heights():
        worst_s = max(worst_s, abs(s_of_T(T, zl)))
        worst_dev = max(worst_dev, abs(count_zeros(T, zl) - main_term(T) + 0.125))
    ok = worst_s <= 2.5167 and worst_dev <= right
    assert report(capsys, "S(T) bounds", ok,
                  "max |S| = %.4f (<= 2.5167), max |N - main + 1/8| = %.4f (<= %.4f)"
                  % (worst_s, worst_dev, right))


SUITE_LABELS = {
    "region": "(a) region bounds, 6 strips",
    "g": "(b) |g(T)| <= 1/(25T)",
    "E": "(c) E monotone + linear bound",
    "L": "(d) L, M vs L*",
    "gamma": "(e) gamma ratio",
    "envelope": "(f) envelope vs f_N",
    "fe": "(g) functional equation",
}


@pytest.mark.parametrize("suite", properties.SUITES)
def test_property_suite(suite, capsys):
    results = []
    for (c, r, eta), _ in TABLE2 if suite == "envelope" else TABLE2[1:2]:
        results += properties.run_all(500, seed=SEED, params=ContourParams(c, r, eta),
                                      only=(suite,))
    n = sum(x.samples for x in results)
    fails = sum(x.failures for x in results)
    detail = "%d samples, %d failures" % (n, fails)
    if suite == "envelope":
        # the envelope is checked with zeta(1 + eta) in the -eta <= sigma <= 0
        # constant; the printed (1 + eta) has counterexamples (see ledger)
        printed = properties.run_all(2000, seed=0, only=("envelope",), left_strip="printed")[0]
        detail += "; left strip uses zeta(1+eta) [printed (1+eta): %d/%d fail]" % (
            printed.failures, printed.samples)
    witness = next((x.witness for x in results if x.witness), "")
    assert report(capsys, SUITE_LABELS[suite], fails == 0 and n >= 500,
                  detail + ("  witness: " + witness if witness else ""))


if __name__ == "__main__":
    checks = [test_table_rows_reproduced, test_closed_form_constants_independent,
              test_optimizer_reaches_smallest_c1, test_counts_against_corollary_and_hardy,
              test_S_bounds]
    ok = True
    for check in checks:
        try:
            check(None)
        except AssertionError:
            ok = False
    for name in properties.SUITES:
        try:
            test_property_suite(name, None)
        except AssertionError:
            ok = False
    sys.exit(0 if ok else 1)
