import math

import pytest
from scipy.integrate import quad

from zetacount import assembly
from zetacount.assembly import (
    TABLE2,
    assemble_constants,
    c_tilde_1,
    c_tilde_2,
    constants_csv,
    constants_markdown,
    corollary_n_bound,
    corollary_s_bound,
    kappa1,
    kappa2,
    kappa3,
    n_bound,
    refine_J,
    s_bound,
)
from zetacount.params import ConstraintError, ContourParams, ZetaLineHypotheses
from zetacount.specfn import ZetaDomainError, zeta_real


@pytest.mark.parametrize("k", [0, 1, 2])
def test_table_rows(rows, k):
    bc = assemble_constants(rows[k])
    got = (bc.C1, bc.C2, bc.C3, bc.C3prime)
    for g, ref in zip(got, TABLE2[k][1]):
        assert g == pytest.approx(ref, abs=2e-6)


def test_scaling_by_log_ratio(row2):
    bc = assemble_constants(row2)
    scale = 2 * math.pi * math.log(row2.r / (row2.c - 0.5))
    assert bc.C1 * scale == pytest.approx(bc.C1_tilde, rel=1e-15)
    assert bc.C2 * scale == pytest.approx(bc.C2_tilde, rel=1e-15)
    assert bc.C3 * scale == pytest.approx(bc.C3_tilde, rel=1e-15)


def test_c3_prime_offset(row2):
    bc = assemble_constants(row2)
    # the arctan corrections are O(1/T0)
    assert bc.C3 - bc.C3prime == pytest.approx(1.0, abs=1e-9)


def test_closed_form_parts_ignore_other_inputs(row2):
    base = ZetaLineHypotheses()
    ref = (c_tilde_1(row2, base), c_tilde_2(row2, base))
    variants = [
        ZetaLineHypotheses(c1=1.7, k1=0.3, Q0=2, Q1=5, Q2=5, Q3=7, Q4=1.5, Q5=7),
        ZetaLineHypotheses(c1=0.2, k1=2.0),
    ]
    for h in variants:
        for p in (row2, row2.with_(T0=1e4), row2.with_(T0=1e20)):
            assert (c_tilde_1(p, h), c_tilde_2(p, h)) == ref


def _integral_1(p):
    return quad(lambda t: math.log(zeta_real(p.c + p.r * math.cos(t))), 0, math.pi / 2,
                limit=400, epsabs=1e-13)[0]


def _integral_2(p):
    t1c = p.theta(1 - p.c)
    return quad(lambda t: math.log(zeta_real(1 - p.c - p.r * math.cos(t))), t1c, math.pi,
                limit=400, epsabs=1e-13)[0]


def test_kappa_sums_majorise_and_converge(rows):
    for p in rows[:2]:
        lzc = math.log(zeta_real(p.c))
        t1c = p.theta(1 - p.c)
        i1, i2 = _integral_1(p), _integral_2(p)
        gaps1, gaps2 = [], []
        for J in (8, 32, 128):
            gaps1.append(kappa1(p, J) + math.pi / (4 * J) * lzc - i1)
            gaps2.append(kappa2(p, J) + (math.pi - t1c) / (2 * J) * lzc - i2)
        assert all(g > 0 for g in gaps1 + gaps2)
        assert gaps1 == sorted(gaps1, reverse=True) and gaps2 == sorted(gaps2, reverse=True)
        assert gaps1[-1] < 0.05 and gaps2[-1] < 0.01


def test_kappa2_domain():
    with pytest.raises(ZetaDomainError):
        kappa2(ContourParams(1.5, 1.5, 0.01))


def test_kappa3_is_order_one_over_T0(row2, hyp):
    k = kappa3(row2, hyp)
    k_big = kappa3(row2.with_(T0=row2.T0 * 1e3), hyp)
    assert 0 < k < 1e-8
    assert k_big < k


def test_constraint_error_names_violation(row2):
    with pytest.raises(ConstraintError) as info:
        assemble_constants(row2.with_(eta=0.6))
    assert "0 < η ≤ 1/2" in info.value.violations


def test_left_strip_only_moves_c3(row2):
    a = assemble_constants(row2)
    b = assemble_constants(row2, left_strip="zeta")
    assert (a.C1, a.C2) == (b.C1, b.C2)
    assert b.C3 > a.C3 and b.C3 - a.C3 < 0.01


def test_corollary_survives_the_zeta_left_strip(rows):
    # the corollary's 9.3675 sits above row 1 under either envelope constant
    assert assemble_constants(rows[0], left_strip="zeta").C3 < assembly.COROLLARY[2]


def test_rounded_up(row2):
    bc = assemble_constants(row2)
    up = bc.rounded_up()
    for raw, r in zip((bc.C1, bc.C2, bc.C3, bc.C3prime), (up.C1, up.C2, up.C3, up.C3prime)):
        assert raw <= r + 1e-12 and r - raw < 1e-6
        assert round(r, 6) == r


def test_refine_j_converges(row2):
    p = refine_J(row2, tol=1e-4)
    assert p.J1 >= 8 and p.J2 >= 8
    assert abs(kappa1(p) - kappa1(p, 2 * p.J1)) < 1e-3


def test_bound_evaluators(row2):
    bc = assemble_constants(row2)
    T = 1e12
    assert n_bound(T, bc) - s_bound(T, bc) == pytest.approx(bc.C3 - bc.C3prime)
    assert corollary_n_bound(math.e) == pytest.approx(0.1038 + 9.3675)
    for f in (lambda t: n_bound(t, bc), corollary_n_bound, corollary_s_bound):
        with pytest.raises(ZetaDomainError):
            f(2.0)


def test_corollary_s_takes_the_smaller_branch():
    small, large = corollary_s_bound(100.0), corollary_s_bound(1e300)
    lt, llt = math.log(100.0), math.log(math.log(100.0))
    assert small == pytest.approx(0.1095 * lt + 0.2042 * llt + 3.0305)
    lt, llt = math.log(1e300), math.log(math.log(1e300))
    assert large == pytest.approx(min(0.1038 * lt + 0.2573 * llt + 8.3675,
                                      0.1095 * lt + 0.2042 * llt + 3.0305))


def test_reports(rows):
    bcs = [assemble_constants(p) for p in rows]
    csv_text = constants_csv(bcs).splitlines()
    assert csv_text[0].split(",") == assembly.CSV_COLUMNS
    assert len(csv_text) == 4 and "0.103787" in csv_text[1]
    md = constants_markdown(bcs).splitlines()
    assert md[0] == "| c | r | eta | C1 | C2 | C3 | C3' |"
    assert "| 9.367419 |" in md[2]
