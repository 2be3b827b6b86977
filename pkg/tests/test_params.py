import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetacount.params import (
    ConfigError,
    ContourParams,
    ZetaLineHypotheses,
    format_config,
    parse_config,
    theta_split,
    validate,
)


def test_derived_fields(row2):
    assert row2.sigma1 == pytest.approx(row2.c + (row2.c - 0.5) ** 2 / row2.r)
    assert row2.delta == pytest.approx(2 * row2.c - row2.sigma1 - 0.5)


def test_derived_fields_are_not_settable():
    with pytest.raises(TypeError):
        ContourParams(1.1, 1.2, 0.01, sigma1=3.0)


def test_table_rows_are_admissible(rows):
    for p in rows:
        assert validate(p).ok, validate(p).violations


@pytest.mark.parametrize("change, name", [
    (dict(eta=0.6), "0 < η ≤ 1/2"),
    (dict(eta=0.0), "0 < η ≤ 1/2"),
    (dict(eta=-0.01), "0 < η ≤ 1/2"),
    (dict(c=0.99), "1-c < -eta"),
    (dict(r=3.0), "-1/2 < c-r"),
    (dict(r=0.6), "1/4 <= delta"),
    (dict(T0=2.0), "T0 >= e"),
])
def test_violations_are_named(row2, change, name):
    report = validate(row2.with_(**change))
    assert not report.ok
    assert name in report.violations


def test_validation_collects_every_violation(row2):
    report = validate(row2.with_(eta=0.6, T0=1.0))
    assert {"0 < η ≤ 1/2", "T0 >= e"} <= set(report.violations)


def test_nonfinite_parameters_rejected(row2):
    assert not validate(row2.with_(r=math.nan)).ok


def test_theta_split_hits_the_line(row2):
    for y in (1 + row2.eta, 1.0, 0.5, 0.0, -row2.eta):
        th = theta_split(row2.c, row2.r, y)
        assert row2.c + row2.r * math.cos(th) == pytest.approx(y, abs=1e-13)


def test_theta_split_saturates():
    assert theta_split(1.0, 1.0, 5.0) == 0.0
    assert theta_split(1.0, 1.0, -5.0) == math.pi
    assert theta_split(1.0, 1.0, 2.0) == 0.0


def test_theta_split_is_decreasing_in_y(row2):
    ys = [1.2, 1.0, 0.5, 0.0, -0.1]
    thetas = [theta_split(row2.c, row2.r, y) for y in ys]
    assert thetas == sorted(thetas)


def test_hypothesis_defaults_are_consistent():
    h = ZetaLineHypotheses()
    assert h.problems() == []
    assert (h.Q0, h.Q1, h.Q2, h.Q3, h.Q4, h.Q5) == (1, 1.18, 1.18, 3.9, 2.3, 3.9)
    assert ZetaLineHypotheses(Q4=0.5, Q5=3.9).problems() == ["Q4 >= 1"]


def test_config_parsing_and_comments():
    text = "# row\nc = 1.025   # centre\nr=1.18\neta = 0.0099\n\nk1 = 0.5\nJ1 = 16\n"
    params, hyp = parse_config(text)
    assert (params.c, params.r, params.eta, params.J1) == (1.025, 1.18, 0.0099, 16)
    assert hyp.k1 == 0.5 and hyp.c1 == 1.0


def test_hypotheses_only_config():
    params, hyp = parse_config("k2 = 0.2\n")
    assert params is None and hyp.k2 == 0.2


@pytest.mark.parametrize("text", ["c = abc\n", "bogus = 1\n", "c 1.0\n", "c = 1.1\nr = 1.2\n"])
def test_config_errors(text):
    with pytest.raises(ConfigError):
        parse_config(text)


@settings(max_examples=100)
@given(st.floats(1.0, 2.0), st.floats(0.5, 3.0), st.floats(1e-8, 0.5),
       st.floats(3.0, 1e12), st.floats(0.1, 2.0))
def test_config_round_trip(c, r, eta, T0, k1):
    p = ContourParams(c, r, eta, T0=T0)
    h = ZetaLineHypotheses(k1=k1)
    assert parse_config(format_config(p, h)) == (p, h)
