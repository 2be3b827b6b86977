"""Zero counts N(T), the argument S(T), and empirical checks of the bounds."""

import bisect
import csv
import io
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np
from scipy.optimize import brentq

from . import assembly
from .gammabounds import g_of_T
from .specfn import hardy_z

#: Largest height for the Hardy-Z counter.
HARDY_MAX = 1000.0
#: Published bound on |S(T)| for 0 <= T <= 30 610 046 000.
S_TABLE_BOUND = 2.5167

_COVERAGE_KEY = "complete-to:"


class ZeroFileError(ValueError):
    """Malformed zero-ordinate file."""


class CoverageError(ValueError):
    """Requested height exceeds the range the zero list is complete for."""


@dataclass(frozen=True)
class ZeroList:
    """Ascending ordinates of zeros with 0 < gamma, complete up to ``complete_to``."""

    ordinates: tuple
    source: str = "computed"
    complete_to: float = None

    def __post_init__(self):
        if self.complete_to is None:
            top = self.ordinates[-1] if self.ordinates else 0.0
            object.__setattr__(self, "complete_to", float(top))

    def __len__(self):
        return len(self.ordinates)


def parse_zero_text(text, source="<string>"):
    values = []
    complete_to = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith(_COVERAGE_KEY):
                complete_to = float(body[len(_COVERAGE_KEY):])
            continue
        try:
            x = float(line)
        except ValueError:
            raise ZeroFileError("%s line %d: not a number: %r" % (source, lineno, line)) from None
        if not math.isfinite(x) or x <= 0:
            raise ZeroFileError("%s line %d: ordinate must be positive" % (source, lineno))
        if values and x <= values[-1][0]:
            raise ZeroFileError("%s line %d: ordinates not ascending" % (source, lineno))
        values.append((x, lineno))
    ordinates = tuple(v for v, _ in values)
    return ZeroList(ordinates, source, complete_to)


def ingest_zero_file(path):
    """Read one decimal ordinate per line; '#' lines are comments.

    A comment ``# complete-to: H`` declares the list complete up to height H;
    without it the list is taken as complete up to its last ordinate.
    """
    path = Path(path)
    return parse_zero_text(path.read_text(), str(path))


def bundled_zeros():
    """The shipped fixture: every zero with 0 < gamma <= 1000."""
    ref = resources.files("zetacount") / "data" / "zeros_1000.txt"
    return parse_zero_text(ref.read_text(), "zeros_1000.txt")


def count_zeros(T, zl):
    """N(T): zeros with 0 < gamma <= T."""
    if T > zl.complete_to:
        raise CoverageError("zero list complete to %g, asked for T = %g" % (zl.complete_to, T))
    return bisect.bisect_right(zl.ordinates, T)


# --------------------------------------------------------------------------
# Hardy Z counter
# --------------------------------------------------------------------------


def _refine_grid(t, z, points=16):
    """Resample around every same-sign local minimum of |Z|.

    Two zeros closer than the grid step leave exactly that signature.
    """
    absz = np.abs(z)
    inner = np.arange(1, len(z) - 1)
    is_min = (absz[inner] < absz[inner - 1]) & (absz[inner] < absz[inner + 1])
    same = (np.sign(z[inner - 1]) == np.sign(z[inner])) & (np.sign(z[inner]) == np.sign(z[inner + 1]))
    suspects = inner[is_min & same]
    if suspects.size == 0:
        return t, z
    extra = np.concatenate([np.linspace(t[i - 1], t[i + 1], points + 2)[1:-1] for i in suspects])
    t_all = np.concatenate([t, extra])
    z_all = np.concatenate([z, hardy_z(extra)])
    order = np.argsort(t_all, kind="stable")
    return t_all[order], z_all[order]


def hardy_zeros(T, step=0.05, xtol=1e-9):
    """Ordinates of sign changes of Z(t) on (1, T], each bracketed to ``xtol``.

    Assumes all zeros up to T lie on the critical line and are simple.
    """
    if T > HARDY_MAX:
        raise CoverageError("Hardy-Z counter supports T <= %g" % HARDY_MAX)
    if T < 14.0:
        return ()
    n = int(math.ceil((T - 1.0) / step))
    t = np.linspace(1.0, T, n + 1)
    z = hardy_z(t)
    t, z = _refine_grid(t, z)
    idx = np.flatnonzero(np.sign(z[:-1]) * np.sign(z[1:]) < 0)
    f = lambda x: float(hardy_z(x)[0])  # noqa: E731
    roots = [brentq(f, t[i], t[i + 1], xtol=xtol) for i in idx]
    return tuple(roots)


def count_zeros_hardy(T):
    """N(T) from sign changes of Hardy's Z function, for T <= 1000."""
    return len(hardy_zeros(T))


def computed_zero_list(T=HARDY_MAX):
    return ZeroList(hardy_zeros(T), "computed", float(T))


# --------------------------------------------------------------------------
# S(T) and bound validation
# --------------------------------------------------------------------------


def main_term(T):
    """(T/2pi) log(T/(2 pi e))."""
    return T / (2 * math.pi) * math.log(T / (2 * math.pi * math.e))


def s_of_T(T, zl):
    """S(T) = (1/2)(2N(T) - (T/pi) log(T/2pi e) + 1/4 - g(T) - 2)."""
    n = count_zeros(T, zl)
    return 0.5 * (2 * n - T / math.pi * math.log(T / (2 * math.pi * math.e)) + 0.25
                  - g_of_T(T) - 2)


@dataclass
class HeightCheck:
    T: float
    N: int
    main_term: float
    deviation: float
    bound: float
    margin: float
    passed: bool
    kind: str = "corollary"


REPORT_COLUMNS = ["T", "N", "main_term", "deviation", "bound", "margin", "pass"]


def validate_bounds(zl, bc, heights):
    """Compare true counts against the bounds at each height.

    Every height gets the corollary check |N - main| <= 0.1038 log T + 0.2573
    log log T + 9.3675. When ``bc`` is given and T >= bc.T0 the theorem form
    |N - main + 1/8| <= C1 log T + C2 log log T + C3 is checked as well.
    """
    rows = []
    for T in heights:
        T = float(T)
        n = count_zeros(T, zl)
        m = main_term(T)
        dev = abs(n - m)
        bound = assembly.corollary_n_bound(T)
        rows.append(HeightCheck(T, n, m, dev, bound, bound - dev, dev <= bound))
        if bc is not None and T >= bc.T0:
            dev3 = abs(n - m + 0.125)
            b3 = assembly.n_bound(T, bc)
            rows.append(HeightCheck(T, n, m, dev3, b3, b3 - dev3, dev3 <= b3, "theorem"))
    return rows


def validate_s_bounds(zl, heights):
    """|S(T)| against the corollary bound (smaller of its two branches), kind ``S``,
    and against the table bound 2.5167 valid up to 30 610 046 000, kind ``S-table``.
    """
    rows = []
    for T in heights:
        T = float(T)
        s = abs(s_of_T(T, zl))
        n, m = count_zeros(T, zl), main_term(T)
        bounds = [("S", assembly.corollary_s_bound(T))]
        if T <= assembly.T0_TABLE_HEIGHT:
            bounds.append(("S-table", S_TABLE_BOUND))
        for kind, bound in bounds:
            rows.append(HeightCheck(T, n, m, s, bound, bound - s, s <= bound, kind))
    return rows


def report_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_COLUMNS + ["kind"])
    for r in rows:
        w.writerow(["%.9g" % r.T, r.N, "%.9f" % r.main_term, "%.9f" % r.deviation,
                    "%.9f" % r.bound, "%.9f" % r.margin, "true" if r.passed else "false",
                    r.kind])
    return buf.getvalue()
