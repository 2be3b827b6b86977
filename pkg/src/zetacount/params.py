"""Contour parameters, zeta-line hypotheses, and the angular split points."""

import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

#: Lower height limit inherited from the gamma-factor estimates.
GAMMA_HEIGHT_MIN = 5.0 / 7.0

#: Smallest eta accepted: zeta(1 + eta) loses digits below this in double precision.
ETA_FLOOR = 1e-12

#: Height at which the three published parameter rows were computed.
T0_TABLE = 30_610_046_000.0

_ARCCOS_SLACK = 1e-12


class ConfigError(ValueError):
    """Malformed parameter file."""


class ConstraintError(ValueError):
    """Parameters violate the admissibility chain."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class ContourParams:
    """Disk (center c, radius r) and strip half-width eta.

    sigma1 and delta are derived from (c, r) and cannot be set directly.
    """

    c: float
    r: float
    eta: float
    T0: float = T0_TABLE
    J1: int = 64
    J2: int = 39
    sigma1: float = field(init=False)
    delta: float = field(init=False)

    def __post_init__(self):
        sigma1 = self.c + (self.c - 0.5) ** 2 / self.r
        object.__setattr__(self, "sigma1", sigma1)
        object.__setattr__(self, "delta", 2.0 * self.c - sigma1 - 0.5)

    def theta(self, y):
        return theta_split(self.c, self.r, y)

    def with_(self, **changes):
        return replace(self, **changes)


@dataclass(frozen=True)
class ZetaLineHypotheses:
    """Bounds assumed on the 1-line and the 1/2-line, plus the shift constants.

    |zeta(1+it)| <= c1 (log t)^c2 for t >= t0 and
    |zeta(1/2+it)| <= k1 t^k2 (log t)^k3 for t >= t1.
    Defaults are published values for both lines with the matching shifts.
    """

    c1: float = 1.0
    c2: float = 1.0
    t0: float = 3.0
    k1: float = 0.77
    k2: float = 1.0 / 6.0
    k3: float = 1.0
    t1: float = 3.0
    Q0: float = 1.0
    Q1: float = 1.18
    Q2: float = 1.18
    Q3: float = 3.9
    Q4: float = 2.3
    Q5: float = 3.9

    def problems(self):
        out = []
        if min(self.c1, self.c2, self.k1, self.k3) < 0:
            out.append("c1, c2, k1, k3 >= 0")
        if not 0.0 <= self.k2 <= 0.5:
            out.append("0 <= k2 <= 1/2")
        if self.t0 < math.e or self.t1 < math.e:
            out.append("t0, t1 >= e")
        if self.Q4 < 1.0:
            out.append("Q4 >= 1")
        if self.Q2 != max(self.Q0, self.Q1):
            out.append("Q2 = max(Q0, Q1)")
        if self.Q5 != max(self.Q3, self.Q4):
            out.append("Q5 = max(Q3, Q4)")
        return out


def theta_split(c, r, y):
    """Angle where the circle c + r e^{i theta} meets Re s = y.

    0 when the circle lies left of y, pi when it lies right of y.
    """
    if r <= 0:
        raise ValueError("radius must be positive")
    if c + r <= y:
        return 0.0
    if y <= c - r:
        return math.pi
    x = (y - c) / r
    if abs(x) > 1.0 + _ARCCOS_SLACK:
        raise AssertionError("arccos argument %r outside [-1, 1]" % x)
    return math.acos(min(1.0, max(-1.0, x)))


@dataclass
class ValidationReport:
    violations: list

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(params):
    """Check every admissibility condition; violations come back as data."""
    c, r, eta = params.c, params.r, params.eta
    s1, d = params.sigma1, params.delta
    values = (c, r, eta, params.T0)
    if not all(math.isfinite(v) for v in values):
        return ValidationReport(["all parameters finite"])
    out = []
    chain = [
        ("-1/2 < c-r", -0.5 < c - r),
        ("c-r < 1-c", c - r < 1 - c),
        ("1-c < -eta", 1 - c < -eta),
        ("-eta < 1/4", -eta < 0.25),
        ("1/4 <= delta", 0.25 <= d),
        ("delta < 1/2", d < 0.5),
        ("1/2 < 1+eta", 0.5 < 1 + eta),
        ("1+eta < sigma1", 1 + eta < s1),
        ("sigma1 < c+r", s1 < c + r),
    ]
    out.extend(name for name, holds in chain if not holds)
    if not 0.0 < eta <= 0.5:
        out.append("0 < η ≤ 1/2")
    elif eta < ETA_FLOOR:
        out.append("eta >= 1e-12 (numerical floor)")
    if r > 0 and theta_split(c, r, 1 + eta) > 2.1:
        out.append("theta_{1+eta} <= 2.1")
    if not r > 2 * c - 1:
        out.append("r > 2c-1")
    if params.T0 < math.e:
        out.append("T0 >= e")
    if params.J1 < 1 or params.J2 < 1:
        out.append("J1, J2 >= 1")
    return ValidationReport(out)


# --------------------------------------------------------------------------
# key = value configuration files
# --------------------------------------------------------------------------

_PARAM_KEYS = {"c", "r", "eta", "T0", "J1", "J2"}
_HYP_KEYS = {f.name for f in fields(ZetaLineHypotheses)}


def parse_config(text):
    """Parse ``key = value`` lines into (ContourParams | None, ZetaLineHypotheses).

    Blank lines and ``#`` comments are skipped. Unknown keys are an error.
    """
    pvals, hvals = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("line %d: expected 'key = value'" % lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        try:
            number = int(value) if key in ("J1", "J2") else float(value)
        except ValueError:
            raise ConfigError("line %d: %r is not a number" % (lineno, value)) from None
        if key in _PARAM_KEYS:
            pvals[key] = number
        elif key in _HYP_KEYS:
            hvals[key] = number
        else:
            raise ConfigError("line %d: unknown key %r" % (lineno, key))
    params = None
    if pvals:
        missing = {"c", "r", "eta"} - pvals.keys()
        if missing:
            raise ConfigError("missing keys: %s" % ", ".join(sorted(missing)))
        params = ContourParams(**pvals)
    return params, ZetaLineHypotheses(**hvals)


def load_config(path):
    return parse_config(Path(path).read_text())


def format_config(params, hyp=None):
    """Inverse of :func:`parse_config`; floats written with repr precision."""
    lines = ["c = %r" % params.c, "r = %r" % params.r, "eta = %r" % params.eta,
             "T0 = %r" % params.T0, "J1 = %d" % params.J1, "J2 = %d" % params.J2]
    if hyp is not None:
        lines += ["%s = %r" % (f.name, getattr(hyp, f.name)) for f in fields(hyp)]
    return "\n".join(lines) + "\n"
