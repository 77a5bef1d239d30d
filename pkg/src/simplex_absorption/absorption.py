"""Absorption index xi(C;S) and translate index alpha(C;S).

``xi(C;S)`` is the least ``sigma >= 1`` with ``C`` inside ``S`` dilated by
``sigma`` about its centroid; ``alpha(C;S)`` is the least ``tau > 0`` such that
a translate of ``tau*S`` contains ``C``. With ``m_j = max_{x in C} -lam_j(x)``:

    xi    = (n+1) * max_j m_j + 1      (when C is not inside S, else 1)
    alpha = sum_j m_j + 1

The generic functions :func:`xi` and :func:`alpha` go through the body's
support function. The closed-form helpers at the bottom of the module are
separate routes kept for cross-checking; none of them calls the generic path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import metrics
from .bodies import ConvexBody, neg_lambda_maxima
from .simplex import Simplex

CIRCUMSCRIBED_TOL = 1e-9


@dataclass(frozen=True)
class AbsorptionResult:
    index: str
    value: object
    per_facet: list = field(repr=False)
    argmax_facet: int
    witness_point: np.ndarray
    circumscribed: bool

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "value": _num(self.value),
            "per_facet": [_num(m) for m in self.per_facet],
            "argmax_facet": self.argmax_facet,
            "witness_point": [_num(v) for v in self.witness_point],
            "circumscribed": self.circumscribed,
        }


def _num(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return float(v)


def per_facet_maxima(body: ConvexBody, s: Simplex):
    """``[m_j]`` and the matching maximizing points of the body."""
    m, X = neg_lambda_maxima(body, s)
    return list(m), list(X)


def _spread_ok(values, tol: float) -> bool:
    return float(max(values) - min(values)) <= tol


def xi(body: ConvexBody, s: Simplex, tol: float = CIRCUMSCRIBED_TOL) -> AbsorptionResult:
    values, points = per_facet_maxima(body, s)
    j_star = max(range(len(values)), key=lambda j: values[j])
    top = values[j_star]
    value = (s.n + 1) * top + 1
    if top <= 0:
        # C lies in S: the index is 1 by definition
        value = Fraction(1) if isinstance(value, Fraction) else 1.0
    return AbsorptionResult("xi", value, values, j_star, points[j_star], _spread_ok(values, tol))


def alpha(body: ConvexBody, s: Simplex, tol: float = CIRCUMSCRIBED_TOL) -> AbsorptionResult:
    values, points = per_facet_maxima(body, s)
    j_star = max(range(len(values)), key=lambda j: values[j])
    value = sum(values) + 1
    return AbsorptionResult("alpha", value, values, j_star, points[j_star], _spread_ok(values, tol))


def circumscribed_test(body: ConvexBody, s: Simplex, tol: float = CIRCUMSCRIBED_TOL) -> bool:
    """True when all ``m_j`` agree, i.e. ``xi(C;S) S`` is circumscribed about C."""
    values, _ = per_facet_maxima(body, s)
    return _spread_ok(values, tol)


# -- closed-form routes ---------------------------------------------------

def _L(s: Simplex) -> np.ndarray:
    return np.asarray(s.coeffs, dtype=float)


def xi_ball_formula(s: Simplex, center=None, radius: float = 1.0) -> float:
    """Ball absorption index from the coefficient sums, unclamped.

    ``(n+1) max_j [rho*sqrt(sum_i l_ij^2) - sum_i l_ij x0_i - l_{n+1,j}] + 1``.
    Valid as the index only when the ball is not inside S.
    """
    L = _L(s)
    n = s.n
    x0 = np.zeros(n) if center is None else np.asarray(center, dtype=float)
    terms = []
    for j in range(n + 1):
        col = L[:, j]
        sq = sum(col[i] ** 2 for i in range(n))
        lin = sum(col[i] * x0[i] for i in range(n))
        terms.append(radius * math.sqrt(sq) - lin - col[n])
    return (n + 1) * max(terms) + 1


def alpha_ball_coeff(s: Simplex, radius: float = 1.0) -> float:
    """``rho * sum_j sqrt(sum_i l_ij^2)``."""
    L = _L(s)[: s.n, :]
    return radius * float(np.sqrt((L ** 2).sum(axis=0)).sum())


def alpha_ball_heights(s: Simplex) -> float:
    """``sum_j 1/h_j``."""
    return float((1.0 / metrics.heights(s)).sum())


def alpha_ball_inradius(s: Simplex) -> float:
    r, _ = metrics.inradius_incenter(s)
    return 1.0 / r


def alpha_ball_surface(s: Simplex) -> float:
    """``sigma / (n vol(S))`` from facet Gram determinants and the volume."""
    return float(metrics.facet_measures(s).sum()) / (s.n * float(s.volume()))


def alpha_cube_diameters(s: Simplex) -> float:
    """``sum_i 1/d_i`` for the unit cube."""
    return float((1.0 / metrics.axial_diameters(s)).sum())


def alpha_cube_coeff(s: Simplex):
    """``(1/2) sum_ij |l_ij|`` for the unit cube; exact for rational simplices."""
    L = s.coeffs[: s.n, :]
    return abs(L).sum() / 2


def alpha_symcube_coeff(s: Simplex):
    """``sum_ij |l_ij|`` for the cube ``[-1,1]^n``."""
    return abs(s.coeffs[: s.n, :]).sum()
