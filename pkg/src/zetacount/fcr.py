"""The envelope F_{c,r}(theta) bounding (1/N) log|f_N| on the circle c + r e^{i theta}.

F is built from six pieces, one per vertical strip of sigma = c + r cos(theta).
Each piece is available pointwise (:func:`F_pointwise`, exact in T) and as a
coefficient vector in log T, log log T, 1, 1/T, 1/(T log T)
(:func:`F_coefficients`) obtained by replacing L_j with L*_j / T and M_j with
L*_j / (2 T log T).
"""

import enum
import math
from dataclasses import dataclass

from .specfn import ZetaDomainError, zeta_real

_LOG_2PI = math.log(2.0 * math.pi)
_LOG_SQRT_2PI = 0.5 * _LOG_2PI


class Piece(enum.IntEnum):
    """Strip of sigma, ordered from right (theta = 0) to left (theta = pi)."""

    SigmaAbove1PlusEta = 1
    OneTo1PlusEta = 2
    HalfToOne = 3
    ZeroToHalf = 4
    MinusEtaToZero = 5
    BelowMinusEta = 6


def pieces_at(sigma, eta):
    """Every piece whose closed strip contains sigma (two at a boundary)."""
    out = []
    if sigma >= 1 + eta:
        out.append(Piece.SigmaAbove1PlusEta)
    if 1 <= sigma <= 1 + eta:
        out.append(Piece.OneTo1PlusEta)
    if 0.5 <= sigma <= 1:
        out.append(Piece.HalfToOne)
    if 0 <= sigma <= 0.5:
        out.append(Piece.ZeroToHalf)
    if -eta <= sigma <= 0:
        out.append(Piece.MinusEtaToZero)
    if sigma <= -eta:
        out.append(Piece.BelowMinusEta)
    return out


def nearest_int(x):
    """Integer closest to x; exact halves go toward zero."""
    fl = math.floor(x)
    frac = x - fl
    if frac < 0.5:
        return int(fl)
    if frac > 0.5:
        return int(fl) + 1
    return int(fl) if fl >= 0 else int(fl) + 1


def _excess(theta, j, T, params):
    # ((j + sigma)^2 + (|t| + T)^2) / T^2 - 1, without forming the O(T^2) sum
    a = j + params.c + params.r * math.cos(theta)
    t = abs(params.r * math.sin(theta))
    return (a * a + t * t) / (T * T) + 2.0 * t / T


def L_j(theta, j, T, params):
    """log of ((j + sigma)^2 + (|t| + T)^2) / T^2 on the circle."""
    return math.log1p(_excess(theta, j, T, params))


def M_j(theta, j, T, params):
    """log log((j + sigma)^2 + (|t| + T)^2) - log log T^2.

    Evaluated as log1p(L_j / log T^2), the same quantity without cancellation.
    """
    if T <= 1.0:
        raise ZetaDomainError("M_j needs T > 1")
    return math.log1p(L_j(theta, j, T, params) / (2.0 * math.log(T)))


def L_star_j(theta, j, T0, params):
    """Height-free majorant: L_j(theta) <= L*_j(theta) / T for T >= T0, theta in [0, pi]."""
    cos, sin = math.cos(theta), math.sin(theta)
    return ((j + params.c + params.r * cos) ** 2 + (params.r * sin) ** 2) / T0 + \
        2.0 * params.r * sin


#: Numerator choices for the constant of the -eta <= sigma <= 0 piece.
LEFT_STRIP_CHOICES = ("printed", "zeta")


def left_strip_log(eta, c1, left_strip="printed"):
    """log(X / (c1 (2 pi)^eta)), the constant of the -eta <= sigma <= 0 piece.

    ``"printed"`` takes X = 1 + eta, which reproduces the published constants.
    ``"zeta"`` takes X = zeta(1 + eta), the value the interpolation between
    sigma = -eta and sigma = 0 actually delivers. Only the second makes F a
    true upper envelope for log|f_N| on that strip.
    """
    if left_strip == "printed":
        x = math.log1p(eta)
    elif left_strip == "zeta":
        x = math.log(zeta_real(1 + eta))
    else:
        raise ValueError("left_strip must be one of %s" % (LEFT_STRIP_CHOICES,))
    return x - math.log(c1) - eta * _LOG_2PI


def _region5_weight(sigma, eta):
    # multiplies (L/2 + log T) in the -eta <= sigma <= 0 piece; equals (1 - 2 sigma)/2
    return -sigma * (1 + 2 * eta) / (2 * eta) + (sigma + eta) / (2 * eta)


def _piece_value(piece, theta, sigma, T, params, hyp, left_strip):
    eta = params.eta
    logT, loglogT = math.log(T), math.log(math.log(T))
    L = lambda j: L_j(theta, j, T, params)  # noqa: E731
    M = lambda j: M_j(theta, j, T, params)  # noqa: E731
    if piece is Piece.SigmaAbove1PlusEta:
        return 0.5 * L(-1) + logT + math.log(zeta_real(sigma))
    if piece is Piece.OneTo1PlusEta:
        w = (1 + eta - sigma) / eta
        return (w * math.log(hyp.c1) + (sigma - 1) / eta * math.log(zeta_real(1 + eta))
                + 0.5 * L(hyp.Q0) + logT + hyp.c2 * w * (M(hyp.Q0) + loglogT))
    if piece is Piece.HalfToOne:
        a = (2 - 2 * sigma) * (hyp.k2 + 1) + 2 * sigma - 1
        b = hyp.k3 * (2 - 2 * sigma) + hyp.c2 * (2 * sigma - 1)
        return ((2 - 2 * sigma) * math.log(hyp.k1) + (2 * sigma - 1) * math.log(hyp.c1)
                + a * (0.5 * L(hyp.Q2) + logT) + b * (M(hyp.Q2) + loglogT))
    if piece is Piece.ZeroToHalf:
        p = (1 - 2 * sigma + 4 * hyp.k2 * sigma) / 2
        b = hyp.c2 * (1 - 2 * sigma) + 2 * hyp.k3 * sigma
        return ((1 - 2 * sigma) * (math.log(hyp.c1) - _LOG_SQRT_2PI)
                + 2 * sigma * math.log(hyp.k1) + 0.5 * L(-1) + logT
                + p * (0.5 * L(hyp.Q5) + logT) + b * (M(hyp.Q5) + loglogT))
    if piece is Piece.MinusEtaToZero:
        w = _region5_weight(sigma, eta)
        return (-sigma / eta * left_strip_log(eta, hyp.c1, left_strip)
                + math.log(hyp.c1) - _LOG_SQRT_2PI + 0.5 * L(-1) + logT
                + w * (0.5 * L(hyp.Q4) + logT)
                + (sigma + eta) / eta * hyp.c2 * (M(hyp.Q4) + loglogT))
    n = nearest_int(sigma)
    return (math.log(zeta_real(1 - sigma)) + 0.5 * L(-1)
            + (1 + (1 - 2 * sigma) / 2) * logT - (1 - 2 * sigma) / 2 * _LOG_2PI
            + (1 - 2 * sigma + 2 * n) / 4 * L(1 - n)
            + 0.5 * sum(L(j - 1) for j in range(1, -n + 1)))


def F_pointwise(theta, T, params, hyp, left_strip="printed"):
    """Envelope value at angle theta and height T.

    At a strip boundary the larger of the two adjacent pieces is returned.
    See :func:`left_strip_log` for ``left_strip``.
    """
    sigma = params.c + params.r * math.cos(theta)
    return max(_piece_value(p, theta, sigma, T, params, hyp, left_strip)
               for p in pieces_at(sigma, params.eta))


@dataclass(frozen=True)
class EnvelopeCoefficients:
    a_logT: float
    a_loglogT: float
    a_const: float
    a_invT: float
    a_invTlogT: float

    def evaluate(self, T):
        logT = math.log(T)
        return (self.a_logT * logT + self.a_loglogT * math.log(logT) + self.a_const
                + self.a_invT / T + self.a_invTlogT / (T * logT))


def _piece_coefficients(piece, theta, sigma, params, hyp, left_strip):
    eta, T0 = params.eta, params.T0
    Ls = lambda j: L_star_j(theta, j, T0, params)  # noqa: E731
    if piece is Piece.SigmaAbove1PlusEta:
        return EnvelopeCoefficients(1.0, 0.0, math.log(zeta_real(sigma)), 0.5 * Ls(-1), 0.0)
    if piece is Piece.OneTo1PlusEta:
        w = (1 + eta - sigma) / eta
        const = w * math.log(hyp.c1) + (sigma - 1) / eta * math.log(zeta_real(1 + eta))
        return EnvelopeCoefficients(1.0, hyp.c2 * w, const, 0.5 * Ls(hyp.Q0),
                                    0.5 * hyp.c2 * w * Ls(hyp.Q0))
    if piece is Piece.HalfToOne:
        a = (2 - 2 * sigma) * (hyp.k2 + 1) + 2 * sigma - 1
        b = hyp.k3 * (2 - 2 * sigma) + hyp.c2 * (2 * sigma - 1)
        const = (2 - 2 * sigma) * math.log(hyp.k1) + (2 * sigma - 1) * math.log(hyp.c1)
        return EnvelopeCoefficients(a, b, const, 0.5 * a * Ls(hyp.Q2), 0.5 * b * Ls(hyp.Q2))
    if piece is Piece.ZeroToHalf:
        p = (1 - 2 * sigma + 4 * hyp.k2 * sigma) / 2
        b = hyp.c2 * (1 - 2 * sigma) + 2 * hyp.k3 * sigma
        const = (1 - 2 * sigma) * (math.log(hyp.c1) - _LOG_SQRT_2PI) + 2 * sigma * math.log(hyp.k1)
        return EnvelopeCoefficients(1 + p, b, const, 0.5 * Ls(-1) + 0.5 * p * Ls(hyp.Q5),
                                    0.5 * b * Ls(hyp.Q5))
    if piece is Piece.MinusEtaToZero:
        w = _region5_weight(sigma, eta)
        b = (sigma + eta) / eta * hyp.c2
        const = (-sigma / eta * left_strip_log(eta, hyp.c1, left_strip)
                 + math.log(hyp.c1) - _LOG_SQRT_2PI)
        return EnvelopeCoefficients(1 + w, b, const, 0.5 * Ls(-1) + 0.5 * w * Ls(hyp.Q4),
                                    0.5 * b * Ls(hyp.Q4))
    n = nearest_int(sigma)
    inv_t = (0.5 * Ls(-1) + (1 - 2 * sigma + 2 * n) / 4 * Ls(1 - n)
             + 0.5 * sum(Ls(j - 1) for j in range(1, -n + 1)))
    const = math.log(zeta_real(1 - sigma)) - (1 - 2 * sigma) / 2 * _LOG_2PI
    return EnvelopeCoefficients(1 + (1 - 2 * sigma) / 2, 0.0, const, inv_t, 0.0)


def F_coefficients(theta, params, hyp, left_strip="printed"):
    """Coefficient form of the envelope piece containing sigma = c + r cos(theta).

    Valid for theta in [0, pi] (L* is only a majorant there). At a boundary the
    piece with the larger value at T0 is returned.
    """
    sigma = params.c + params.r * math.cos(theta)
    options = [_piece_coefficients(p, theta, sigma, params, hyp, left_strip)
               for p in pieces_at(sigma, params.eta)]
    return max(options, key=lambda co: co.evaluate(params.T0))
