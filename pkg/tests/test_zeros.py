import math

import numpy as np
import pytest

from zetacount import zeros
from zetacount.assembly import assemble_constants
from zetacount.zeros import (
    CoverageError,
    ZeroFileError,
    count_zeros,
    hardy_zeros,
    ingest_zero_file,
    main_term,
    parse_zero_text,
    s_of_T,
    validate_bounds,
    validate_s_bounds,
)

# Ordinates of the first zeros, independently known to many digits.
FIRST = [14.134725141734693, 21.022039638771555, 25.010857580145688, 30.424876125859513,
         32.935061587739189]


@pytest.fixture(scope="module")
def hardy_1000():
    return hardy_zeros(1000.0)


def test_fixture_shape(fixture_zeros):
    assert len(fixture_zeros) == 649
    assert fixture_zeros.complete_to == 1000.0
    assert np.allclose(fixture_zeros.ordinates[:5], FIRST, atol=1e-12)


@pytest.mark.parametrize("T, n", [(14.0, 0), (14.2, 1), (20.0, 1), (50.0, 10), (100.0, 29),
                                  (1000.0, 649)])
def test_counts(fixture_zeros, T, n):
    assert count_zeros(T, fixture_zeros) == n


def test_count_at_an_ordinate_includes_it(fixture_zeros):
    g = fixture_zeros.ordinates[9]
    assert count_zeros(g, fixture_zeros) == 10


def test_coverage(fixture_zeros):
    with pytest.raises(CoverageError):
        count_zeros(1000.5, fixture_zeros)


def test_hardy_counter_matches_fixture(hardy_1000, fixture_zeros):
    assert len(hardy_1000) == len(fixture_zeros)
    assert np.max(np.abs(np.array(hardy_1000) - np.array(fixture_zeros.ordinates))) < 1e-8
    assert zeros.count_zeros_hardy(100.0) == 29


def test_hardy_limits():
    assert hardy_zeros(13.9) == ()
    with pytest.raises(CoverageError):
        hardy_zeros(1500.0)


def test_parse_errors_carry_line_numbers(tmp_path):
    with pytest.raises(ZeroFileError, match="line 3"):
        parse_zero_text("14.13\n21.02\nabc\n")
    with pytest.raises(ZeroFileError, match="line 2"):
        parse_zero_text("21.02\n14.13\n")
    with pytest.raises(ZeroFileError, match="line 1"):
        parse_zero_text("-3\n")
    path = tmp_path / "z.txt"
    path.write_text("# two zeros\n14.134725141734693\n\n21.022039638771555\n")
    zl = ingest_zero_file(path)
    assert len(zl) == 2 and zl.complete_to == pytest.approx(21.022039638771555)


def test_complete_to_header():
    zl = parse_zero_text("# complete-to: 24\n14.134725141734693\n21.022039638771555\n")
    assert count_zeros(24.0, zl) == 2
    with pytest.raises(CoverageError):
        count_zeros(24.5, zl)


def test_main_term_and_S(fixture_zeros):
    assert main_term(2 * math.pi * math.e) == pytest.approx(0.0, abs=1e-14)
    # S(T) is small and jumps by one at each ordinate
    g = fixture_zeros.ordinates[40]
    assert s_of_T(g + 1e-9, fixture_zeros) - s_of_T(g - 1e-9, fixture_zeros) == pytest.approx(1, abs=1e-6)
    assert abs(s_of_T(100.0, fixture_zeros)) < 0.01


def test_validation_reports(fixture_zeros, row2):
    rows = validate_bounds(fixture_zeros, None, [20, 50, 100])
    assert all(r.passed and r.kind == "corollary" for r in rows)
    rows = validate_s_bounds(fixture_zeros, [20, 1000])
    assert [r.kind for r in rows] == ["S", "S-table", "S", "S-table"]
    assert all(r.passed for r in rows)
    # the theorem form only applies from T0 on, far beyond the fixture
    bc = assemble_constants(row2)
    assert [r.kind for r in validate_bounds(fixture_zeros, bc, [500])] == ["corollary"]


def test_theorem_form_is_checked_when_T_passes_T0(fixture_zeros, row2):
    bc = assemble_constants(row2.with_(T0=100.0))
    rows = validate_bounds(fixture_zeros, bc, [500.0])
    assert [r.kind for r in rows] == ["corollary", "theorem"]
    assert all(r.passed for r in rows)


def test_report_csv(fixture_zeros):
    text = zeros.report_csv(validate_bounds(fixture_zeros, None, [100]))
    header, row = text.splitlines()
    assert header == "T,N,main_term,deviation,bound,margin,pass,kind"
    assert row.startswith("100,29,") and row.endswith(",true,corollary")
