"""Special functions: zeta on and off the real axis, log-gamma, Riemann-Siegel theta.

Everything here is double precision. Zeta is computed by Euler-Maclaurin
summation with a bounded remainder; log-gamma by the Stirling series after
shifting the argument to the right.
"""

import math
from fractions import Fraction

import numpy as np

#: Largest |Im s| accepted by :func:`zeta_complex`.
MAX_HEIGHT = 10_000.0

#: Number of Bernoulli correction terms in the Euler-Maclaurin tail.
EM_TERMS = 12

_LOG_2PI = math.log(2.0 * math.pi)


class ZetaDomainError(ValueError):
    """Raised when a special function is called outside its domain."""


def _bernoulli_even(count):
    # B_0..B_{2*count} by the standard recurrence; exact rationals.
    b = [Fraction(1)]
    for m in range(1, 2 * count + 1):
        b.append(-sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return [b[2 * k] for k in range(count + 1)]


_B2K = _bernoulli_even(EM_TERMS + 1)
# B_{2k} / (2k)!  for k = 1 .. EM_TERMS + 1
_EM_COEF = [float(_B2K[k] / math.factorial(2 * k)) for k in range(1, EM_TERMS + 2)]

# Stirling series coefficients B_{2k} / (2k (2k-1)) for log-gamma.
_STIRLING = [float(_B2K[k] / (2 * k * (2 * k - 1))) for k in range(1, 11)]
_STIRLING_MIN_ABS = 15.0


# --------------------------------------------------------------------------
# Riemann zeta
# --------------------------------------------------------------------------


def _em_real(sigma, n_terms, m_terms=EM_TERMS):
    """Euler-Maclaurin value and remainder bound for real sigma > 1."""
    head = math.fsum(k ** -sigma for k in range(1, n_terms))
    n = float(n_terms)
    parts = [head, n ** (1.0 - sigma) / (sigma - 1.0), 0.5 * n ** -sigma]
    rising = sigma  # sigma (sigma+1) ... (sigma+2k-2)
    power = n ** (-sigma - 1.0)
    for k in range(1, m_terms + 1):
        parts.append(_EM_COEF[k - 1] * rising * power)
        rising *= (sigma + 2 * k - 1) * (sigma + 2 * k)
        power /= n * n
    # first omitted term; for real s the remainder is bounded by it
    err = abs(_EM_COEF[m_terms] * rising * power)
    return math.fsum(parts), err


def zeta_real(sigma):
    """Riemann zeta at a real argument sigma > 1.

    >>> round(zeta_real(2.0), 12)
    1.644934066848
    """
    sigma = float(sigma)
    if not sigma > 1.0:
        raise ZetaDomainError("zeta_real needs sigma > 1, got %r" % sigma)
    if sigma > 60.0:
        # tail after 2^-sigma is below 1e-18
        return 1.0 + 2.0 ** -sigma + 3.0 ** -sigma
    value, _ = _em_real(sigma, 20)
    return value


def _em_complex(s, n_terms, m_terms=EM_TERMS):
    """Vectorised Euler-Maclaurin sum over an array ``s`` with one truncation N.

    Returns ``(value, error_estimate)`` arrays. The estimate is the first
    omitted term times ``|s + 2M + 1| / (Re s + 2M + 1)``, which bounds the
    remainder whenever ``Re s > -(2M + 1)``.
    """
    s = np.asarray(s, dtype=complex)
    n = float(n_terms)
    logs = np.log(np.arange(1, n_terms, dtype=float))
    value = np.zeros(s.shape, dtype=complex)
    flat_s = s.ravel()
    flat_v = value.ravel()
    # chunk to bound memory: rows are points, columns are n
    chunk = max(1, 2_000_000 // max(1, n_terms))
    for lo in range(0, flat_s.size, chunk):
        blk = flat_s[lo:lo + chunk]
        # n^-s = n^-sigma (cos(t log n) - i sin(t log n)); real trig is cheaper than complex exp
        phase = np.outer(blk.imag, logs)
        mag = np.exp(-np.outer(blk.real, logs))
        flat_v[lo:lo + chunk] = (mag * np.cos(phase)).sum(axis=1) \
            - 1j * (mag * np.sin(phase)).sum(axis=1)
    value = flat_v.reshape(s.shape)
    n_pow = np.exp(-s * math.log(n))  # N^-s
    value = value + n * n_pow / (s - 1.0) + 0.5 * n_pow
    rising = s.copy()
    power = n_pow / n
    for k in range(1, m_terms + 1):
        value = value + _EM_COEF[k - 1] * rising * power
        rising = rising * (s + 2 * k - 1) * (s + 2 * k)
        power = power / (n * n)
    tail = np.abs(_EM_COEF[m_terms] * rising * power)
    err = tail * np.abs(s + 2 * m_terms + 1) / (s.real + 2 * m_terms + 1)
    return value, err


def _start_terms(s):
    return max(20, int(math.ceil(0.5 * abs(s))) + 10)


def _zeta_em_array(s, rel_tol=1e-10, max_terms=200_000):
    """Zeta by Euler-Maclaurin on an array, N adapted per point.

    The truncation N starts near |s|/2 and is doubled for any point whose
    remainder bound exceeds ``rel_tol * (1 + |zeta|)``.
    """
    s = np.asarray(s, dtype=complex)
    out = np.empty(s.shape, dtype=complex)
    errs = np.empty(s.shape, dtype=float)
    flat = s.ravel()
    start = np.array([_start_terms(z) for z in flat], dtype=np.int64)
    # bucket by starting N, rounded up to 1/8-octave steps, to share work
    buckets = {}
    for idx, n0 in enumerate(start):
        step = 2 ** max(0, int(math.log2(n0)) - 3)
        key = int(-(-n0 // step) * step)
        buckets.setdefault(key, []).append(idx)
    out_f = out.ravel()
    err_f = errs.ravel()
    for n_terms, idx in sorted(buckets.items()):
        idx = np.array(idx)
        pending = idx
        while pending.size:
            val, err = _em_complex(flat[pending], n_terms)
            out_f[pending] = val
            err_f[pending] = err
            bad = err > rel_tol * (1.0 + np.abs(val))
            if not bad.any() or n_terms >= max_terms:
                break
            pending = pending[bad]
            n_terms *= 2
    return out_f.reshape(s.shape), err_f.reshape(s.shape)


# Re s below this goes through the functional equation
_FE_CUTOFF = -0.5


def _check_window(s):
    if np.any(np.abs(np.imag(s)) > MAX_HEIGHT):
        raise ZetaDomainError("zeta_complex supports |Im s| <= %g" % MAX_HEIGHT)
    if np.any(np.asarray(s) == 1.0):
        raise ZetaDomainError("zeta has a pole at s = 1")


def zeta_array(s):
    """Zeta at every point of an array (vectorised :func:`zeta_complex`)."""
    s = np.asarray(s, dtype=complex)
    _check_window(s)
    out = np.empty(s.shape, dtype=complex)
    left = s.real < _FE_CUTOFF
    if (~left).any():
        out[~left], _ = _zeta_em_array(s[~left])
    if left.any():
        # left of the cutoff the EM head sum grows like N^(1 - sigma) and
        # cancels; the functional equation only needs zeta at Re > 3/2
        z = s[left]
        chi = np.array([_fe_factor(complex(v)) for v in z])
        refl, _ = _zeta_em_array(1.0 - z)
        out[left] = chi * refl
    return out


def zeta_complex(s):
    """Riemann zeta at a complex point, accurate to about 1e-10 (1 + |zeta|).

    Supported for ``s != 1`` with ``|Im s| <= 10 000``.
    """
    s = complex(s)
    _check_window(s)
    return complex(zeta_array(np.array([s]))[0])


def zeta_with_error(s, n_terms=None):
    """Euler-Maclaurin value of zeta(s) together with the remainder bound.

    With ``n_terms`` given, the truncation is fixed instead of adapted.
    """
    s = complex(s)
    _check_window(s)
    if n_terms is None:
        v, e = _zeta_em_array(np.array([s]))
    else:
        v, e = _em_complex(np.array([s]), int(n_terms))
    return complex(v[0]), float(e[0])


# --------------------------------------------------------------------------
# log-gamma
# --------------------------------------------------------------------------


def _loggamma_right(z):
    """Principal log-gamma for Re z > 0 (continuous branch)."""
    shift = 0j
    while abs(z) < _STIRLING_MIN_ABS:
        shift += np.log(z)
        z += 1.0
    zinv = 1.0 / z
    zinv2 = zinv * zinv
    series = 0j
    term = zinv
    for coef in _STIRLING:
        series += coef * term
        term *= zinv2
    return (z - 0.5) * np.log(z) - z + 0.5 * _LOG_2PI + series - shift


def loggamma(z):
    """Complex log-gamma on the principal continuous branch, for Re z > 0."""
    z = complex(z)
    if not z.real > 0.0:
        raise ZetaDomainError("loggamma needs Re z > 0, got %r" % z)
    return complex(_loggamma_right(z))


def _log_gamma_any(z):
    # some branch of log Gamma(z), any z off the poles; reflection on the left
    z = complex(z)
    if z.real >= 0.5:
        return complex(_loggamma_right(z))
    return math.log(math.pi) - _log_sin_pi(z) - complex(_loggamma_right(1.0 - z))


def _log_sin_pi(z):
    # a branch of log sin(pi z) that does not overflow for large |Im z|
    if abs(z.imag) < 20.0:
        return complex(np.log(np.sin(math.pi * z)))
    if z.imag > 0:
        # sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        return complex(np.log(0.5j) - 1j * math.pi * z + np.log1p(-np.exp(2j * math.pi * z)))
    return complex(np.log(-0.5j) + 1j * math.pi * z + np.log1p(-np.exp(-2j * math.pi * z)))


def log_abs_gamma(z):
    """log |Gamma(z)| for any z that is not a pole."""
    return _log_gamma_any(z).real


def log_gamma_im(z):
    """Im log Gamma(z) on the principal continuous branch (Re z > 0).

    The branch is fixed by the recursion plus the principal Stirling branch,
    so values along a vertical ray vary continuously.
    """
    return loggamma(z).imag


def _fe_factor(s):
    # pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2), so that zeta(s) = factor * zeta(1-s)
    lg = _log_gamma_any((1.0 - s) / 2.0) - _log_gamma_any(s / 2.0)
    return complex(np.exp((s - 0.5) * math.log(math.pi) + lg))


def functional_equation_rhs(s):
    """Right side of zeta(s) = pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2) zeta(1-s)."""
    s = complex(s)
    return _fe_factor(s) * zeta_complex(1.0 - s)


# --------------------------------------------------------------------------
# Riemann-Siegel theta and Hardy's Z
# --------------------------------------------------------------------------


def riemann_siegel_theta(t):
    """theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log pi, for t >= 1."""
    t = float(t)
    if t < 1.0:
        raise ZetaDomainError("riemann_siegel_theta needs t >= 1, got %r" % t)
    return log_gamma_im(complex(0.25, 0.5 * t)) - 0.5 * t * math.log(math.pi)


def hardy_z(t):
    """Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + i t) on an array of t >= 1."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    theta = np.array([riemann_siegel_theta(x) for x in t])
    zeta = zeta_array(0.5 + 1j * t)
    return (np.exp(1j * theta) * zeta).real
