"""Assembly of the zero-counting constants C1, C2, C3, C3'.

The bound has the shape

    |N(T) - (T/2pi) log(T/(2 pi e)) + 1/8| <= C1 log T + C2 log log T + C3,   T >= T0,

with C_j = Ctilde_j / (2 pi log(r / (c - 1/2))). Ctilde_1 and Ctilde_2 are
integrals of functions linear in sigma = c + r cos(theta) and are evaluated in
closed form; Ctilde_3 additionally carries zeta sums (kappa_1, kappa_2) and
the 1/T0 remainder kappa_3.
"""

import csv
import io
import math
from dataclasses import dataclass

from .fcr import L_star_j, left_strip_log
from .gammabounds import E_linear_bound
from .params import ConstraintError, ContourParams, ZetaLineHypotheses, validate
from .quad import integral_linear, integrate
from .specfn import ZetaDomainError, zeta_real

_LOG_2PI = math.log(2.0 * math.pi)
_PI = math.pi

#: Height up to which every zero is known to lie on the critical line.
T0_TABLE_HEIGHT = 30_610_046_000.0

#: Constants of the corollary valid for every T >= e.
COROLLARY = (0.1038, 0.2573, 9.3675)
#: Second branch of the S(T) corollary, (C1, C2, C3').
COROLLARY_S_SECOND = (0.1095, 0.2042, 3.0305)
COROLLARY_S_FIRST_C3 = 8.3675

#: Published rows: (c, r, eta) -> (C1, C2, C3, C3') at T0 = 30 610 046 000, J1 = 64, J2 = 39.
TABLE2 = [
    ((1.000011314, 1.064340602, 4.2826451e-6), (0.103787, 0.257297, 9.367419, 8.367419)),
    ((1.025253504, 1.182375395, 0.009944751381), (0.109410, 0.204142, 4.030486, 3.030486)),
    ((1.035766557, 1.229059659, 0.014325507360), (0.111973, 0.189768, 3.746756, 2.746756)),
]

#: Historical bounds (author, year, C1, C2, C3, T0); reference data only.
TABLE1 = [
    ("von Mangoldt", 1905, 0.4320, 1.9167, 13.0788, 28.5580),
    ("Grossmann", 1913, 0.2907, 1.7862, 7.0120, 50.0),
    ("Backlund", 1918, 0.1370, 0.4430, 5.2250, 200.0),
    ("Rosser", 1941, 0.1370, 0.4430, 2.4630, 2.0),
    ("Trudgian", 2014, 0.1120, 0.2780, 3.3850, math.e),
    ("this package (corollary)", None, 0.1038, 0.2573, 9.3675, math.e),
]


@dataclass(frozen=True)
class BoundConstants:
    C1: float
    C2: float
    C3: float
    C3prime: float
    params: ContourParams
    hyp: ZetaLineHypotheses
    C1_tilde: float = float("nan")
    C2_tilde: float = float("nan")
    C3_tilde: float = float("nan")

    @property
    def T0(self):
        return self.params.T0

    def rounded_up(self, digits=6):
        """Copy with C1, C2, C3, C3' rounded up (ceiling) at ``digits`` decimals."""
        scale = 10 ** digits

        def up(x):
            return math.ceil(x * scale - 1e-9) / scale

        return BoundConstants(up(self.C1), up(self.C2), up(self.C3), up(self.C3prime),
                              self.params, self.hyp, self.C1_tilde, self.C2_tilde,
                              self.C3_tilde)


def _thetas(p):
    th = p.theta
    return dict(t1e=th(1 + p.eta), t1=th(1.0), th=th(0.5), t0=th(0.0), tme=th(-p.eta),
                tmh=th(-0.5), t1c=th(1 - p.c))


def _lin(p, a, b, lo, hi):
    return integral_linear(a, b, lo, hi, p.c, p.r)


def kappa1(params, J1=None):
    """Trapezoid-type majorant sum for the log zeta(sigma) integral near theta = 0."""
    J1 = params.J1 if J1 is None else J1
    c, r = params.c, params.r
    inner = math.fsum(math.log(zeta_real(c + r * math.cos(_PI * j / (2 * J1))))
                      for j in range(1, J1))
    return _PI / (4 * J1) * (math.log(zeta_real(c + r)) + 2 * inner)


def kappa2(params, J2=None):
    """Majorant sum for the log zeta(1 - sigma) integral near theta = pi.

    Needs r > 2c - 1 so that every node has 1 - sigma > 1.
    """
    J2 = params.J2 if J2 is None else J2
    c, r = params.c, params.r
    if not r > 2 * c - 1:
        raise ZetaDomainError("kappa2 needs r > 2c - 1")
    t1c = params.theta(1 - c)
    inner = math.fsum(
        math.log(zeta_real(1 - c - r * math.cos(_PI * j / J2 + (1 - j / J2) * t1c)))
        for j in range(1, J2))
    return (_PI - t1c) / (2 * J2) * (math.log(zeta_real(1 - c + r)) + 2 * inner)


def kappa3_brackets(params, hyp):
    """The two L*-integral sums of kappa_3 before clamping and scaling."""
    p, h = params, hyp
    eta, T0 = p.eta, p.T0
    th = _thetas(p)
    sig = lambda t: p.c + p.r * math.cos(t)  # noqa: E731
    Ls = lambda j: (lambda t: L_star_j(t, j, T0, p))  # noqa: E731

    def weighted(weight, j):
        return lambda t: weight(sig(t)) * L_star_j(t, j, T0, p)

    w3 = lambda s: (2 - 2 * s) * (h.k2 + 1) + 2 * s - 1  # noqa: E731
    w4 = lambda s: 1 - 2 * s + 4 * h.k2 * s  # noqa: E731
    w5 = lambda s: -s * (1 + 2 * eta) / (2 * eta) + (s + eta) / (2 * eta)  # noqa: E731
    w6 = lambda s: (1 - 2 * s) / 2  # noqa: E731
    first = [
        integrate(Ls(-1), 0.0, th["t1e"]),
        integrate(Ls(h.Q0), th["t1e"], th["t1"]),
        integrate(weighted(w3, h.Q2), th["t1"], th["th"]),
        integrate(Ls(-1), th["th"], th["t0"]),
        0.5 * integrate(weighted(w4, h.Q5), th["th"], th["t0"]),
        integrate(Ls(-1), th["t0"], th["tme"]),
        integrate(weighted(w5, h.Q4), th["t0"], th["tme"]),
        integrate(Ls(-1), th["tme"], _PI),
        integrate(weighted(w6, 1.0), th["tme"], th["tmh"]),
    ]
    v2 = lambda s: h.c2 / eta * (1 + eta - s)  # noqa: E731
    v3 = lambda s: h.k3 * (2 - 2 * s) + h.c2 * (2 * s - 1)  # noqa: E731
    v4 = lambda s: h.c2 * (1 - 2 * s) + 2 * h.k3 * s  # noqa: E731
    v5 = lambda s: (s + eta) / eta * h.c2  # noqa: E731
    second = [
        integrate(weighted(v2, h.Q0), th["t1e"], th["t1"]),
        integrate(weighted(v3, h.Q2), th["t1"], th["th"]),
        integrate(weighted(v4, h.Q5), th["th"], th["t0"]),
        integrate(weighted(v5, h.Q4), th["t0"], th["tme"]),
    ]
    return math.fsum(first), math.fsum(second)


def kappa3(params, hyp):
    """Remainder collecting all L* terms, of order 1/T0."""
    first, second = kappa3_brackets(params, hyp)
    T0 = params.T0
    return max(0.0, first) / (2 * T0) + max(0.0, second) / (2 * T0 * math.log(T0))


def c_tilde_1(params, hyp):
    p, k2, eta = params, hyp.k2, params.eta
    th = _thetas(p)
    # each integrand written as a + b*sigma
    return math.fsum([
        _lin(p, 2 * (k2 + 1) - 2, -2 * (k2 + 1) + 2, th["t1"], th["th"]),
        0.5 * _lin(p, 1.0, -2.0 + 4 * k2, th["th"], th["t0"]),
        _lin(p, 0.5, -(1 + 2 * eta) / (2 * eta) + 1 / (2 * eta), th["t0"], th["tme"]),
        _lin(p, 0.5, -1.0, th["tme"], _PI),
    ])


def c_tilde_2(params, hyp):
    p, c2, k3, eta = params, hyp.c2, hyp.k3, params.eta
    th = _thetas(p)
    return math.fsum([
        c2 / eta * _lin(p, 1 + eta, -1.0, th["t1e"], th["t1"]),
        _lin(p, 2 * k3 - c2, -2 * k3 + 2 * c2, th["t1"], th["th"]),
        _lin(p, c2, -2 * c2 + 2 * k3, th["th"], th["t0"]),
        c2 / eta * _lin(p, eta, 1.0, th["t0"], th["tme"]),
    ])


def c_tilde_3(params, hyp, left_strip="printed"):
    p, h, eta, T0 = params, hyp, params.eta, params.T0
    th = _thetas(p)
    log_ratio = math.log(p.r / (p.c - 0.5))
    lz1e = math.log(zeta_real(1 + eta))
    lzc = math.log(zeta_real(p.c))
    lc1, lk1 = math.log(h.c1), math.log(h.k1)
    log_c1_sqrt2pi = lc1 - 0.5 * _LOG_2PI
    log_left = left_strip_log(eta, h.c1, left_strip)
    terms = [
        _PI * log_ratio * (E_linear_bound(T0, p.delta) + 2.5 + 1 / (25 * T0)
                           + 2 / _PI * math.log(zeta_real(p.sigma1))),
        _PI * math.log(zeta_real(p.c) / zeta_real(2 * p.c)),
        lc1 / eta * _lin(p, 1 + eta, -1.0, th["t1e"], th["t1"]),
        lz1e / eta * _lin(p, -1.0, 1.0, th["t1e"], th["t1"]),
        _lin(p, 2 * lk1 - lc1, -2 * lk1 + 2 * lc1, th["t1"], th["th"]),
        log_c1_sqrt2pi * _lin(p, 1.0, -2.0, th["th"], th["t0"]),
        2 * lk1 * _lin(p, 0.0, 1.0, th["th"], th["t0"]),
        _lin(p, log_c1_sqrt2pi, -log_left / eta, th["t0"], th["tme"]),
        -_LOG_2PI * _lin(p, 0.5, -1.0, th["tme"], _PI),
        (lz1e + lzc) / 2 * (th["t1e"] - _PI / 2) + _PI / (4 * p.J1) * lzc + kappa1(p),
        (lz1e + lzc) / 2 * (th["t1c"] - th["tme"]) + (_PI - th["t1c"]) / (2 * p.J2) * lzc
        + kappa2(p),
        kappa3(p, h),
    ]
    return math.fsum(terms)


def c3_prime(C3, params):
    T0 = params.T0
    return (C3 - 1 + math.atan((params.sigma1 - 1) / T0) / _PI
            + math.atan(1 / (2 * T0)) / _PI)


def assemble_constants(params, hyp=None, left_strip="printed"):
    """Compute (C1, C2, C3, C3') for admissible parameters.

    ``left_strip`` picks the constant of the -eta <= sigma <= 0 envelope piece
    (see :func:`zetacount.fcr.left_strip_log`); it only moves C3 and C3'.

    Raises :class:`ConstraintError` naming every violated condition otherwise.
    """
    hyp = ZetaLineHypotheses() if hyp is None else hyp
    report = validate(params)
    if not report.ok:
        raise ConstraintError(report.violations)
    scale = 2 * _PI * math.log(params.r / (params.c - 0.5))
    t1, t2, t3 = c_tilde_1(params, hyp), c_tilde_2(params, hyp), c_tilde_3(params, hyp, left_strip)
    C3 = t3 / scale
    return BoundConstants(t1 / scale, t2 / scale, C3, c3_prime(C3, params), params, hyp,
                          t1, t2, t3)


def refine_J(params, hyp=None, tol=1e-6, start=(8, 8), limit=4096):
    """Double J1 and J2 independently until the kappa change drops below ``tol``."""
    J1, J2 = start
    k = kappa1(params, J1)
    while J1 < limit:
        k_next = kappa1(params, 2 * J1)
        J1 *= 2
        if abs(k_next - k) < tol:
            break
        k = k_next
    k = kappa2(params, J2)
    while J2 < limit:
        k_next = kappa2(params, 2 * J2)
        J2 *= 2
        if abs(k_next - k) < tol:
            break
        k = k_next
    return params.with_(J1=J1, J2=J2)


# --------------------------------------------------------------------------
# bound evaluators
# --------------------------------------------------------------------------


def _check_height(T):
    if T < math.e:
        raise ZetaDomainError("bounds are stated for T >= e")


def n_bound(T, bc):
    """C1 log T + C2 log log T + C3."""
    _check_height(T)
    return bc.C1 * math.log(T) + bc.C2 * math.log(math.log(T)) + bc.C3


def s_bound(T, bc):
    """C1 log T + C2 log log T + C3'."""
    _check_height(T)
    return bc.C1 * math.log(T) + bc.C2 * math.log(math.log(T)) + bc.C3prime


def corollary_n_bound(T):
    """Bound on |N(T) - (T/2pi) log(T/2pi e)| valid for every T >= e."""
    _check_height(T)
    a, b, c = COROLLARY
    return a * math.log(T) + b * math.log(math.log(T)) + c


def corollary_s_bound(T):
    """Bound on |S(T)| valid for every T >= e: the smaller of two branches."""
    _check_height(T)
    lt, llt = math.log(T), math.log(math.log(T))
    first = COROLLARY[0] * lt + COROLLARY[1] * llt + COROLLARY_S_FIRST_C3
    a, b, c = COROLLARY_S_SECOND
    return min(first, a * lt + b * llt + c)


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------

CSV_COLUMNS = ["c", "r", "eta", "sigma1", "delta", "T0", "J1", "J2",
               "C1", "C2", "C3", "C3prime"]


def constants_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for bc in rows:
        p = bc.params
        writer.writerow([repr(p.c), repr(p.r), repr(p.eta), "%.12g" % p.sigma1,
                         "%.12g" % p.delta, "%.12g" % p.T0, p.J1, p.J2,
                         "%.6f" % bc.C1, "%.6f" % bc.C2, "%.6f" % bc.C3, "%.6f" % bc.C3prime])
    return buf.getvalue()


def constants_markdown(rows):
    lines = ["| c | r | eta | C1 | C2 | C3 | C3' |", "|---|---|---|---|---|---|---|"]
    for bc in rows:
        p = bc.params
        lines.append("| %s | %s | %s | %.6f | %.6f | %.6f | %.6f |"
                     % (p.c, p.r, p.eta, bc.C1, bc.C2, bc.C3, bc.C3prime))
    return "\n".join(lines) + "\n"
