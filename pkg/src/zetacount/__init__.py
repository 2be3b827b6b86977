"""Explicit bounds for the number of zeros of the Riemann zeta function.

N(T), the number of zeros with 0 < Im rho <= T, satisfies

    |N(T) - (T/2pi) log(T/(2 pi e))| <= C1 log T + C2 log log T + C3.

This package computes admissible (C1, C2, C3) from a contour (c, r, eta) and
assumed zeta bounds on the 1-line and the 1/2-line, searches for good
contours, and checks the results against actual zero counts.
"""

from .assembly import BoundConstants, assemble_constants
from .params import ContourParams, ZetaLineHypotheses, validate
from .specfn import zeta_complex

__all__ = ["BoundConstants", "ContourParams", "ZetaLineHypotheses", "assemble_constants",
           "validate", "zeta_complex"]
