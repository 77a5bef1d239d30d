"""Independent checks for the closed forms.

Nothing here reads the Lagrange coefficients of a simplex. Facet
hyperplanes are rebuilt from the vertices (null space of each facet's
bordered vertex block), containment is tested against those hyperplanes
directly, and the absorption index is recovered by bisection on the
dilation factor.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from . import linalg, metrics
from .bodies import ConvexBody, unit_cube
from .errors import DimensionTooLarge, PreconditionFailed
from .simplex import Simplex

CONTAINMENT_TOL = 1e-12
BISECTION_WIDTH = 1e-9
MAX_CUBE_DIM = 20


def facet_hyperplanes(s: Simplex) -> tuple[np.ndarray, np.ndarray]:
    """Unit inward normals ``W`` and offsets ``b`` of every facet.

    ``W[j] @ x + b[j]`` is the signed distance from ``x`` to facet j,
    positive on the side of vertex j.
    """
    verts = np.asarray(s.vertices, dtype=float)
    n = s.n
    W = np.empty((n + 1, n))
    b = np.empty(n + 1)
    for j in range(n + 1):
        face = np.delete(verts, j, axis=0)
        block = np.hstack([face, np.ones((n, 1))])
        _, _, vt = np.linalg.svd(block)
        w, c = vt[-1, :n], vt[-1, n]
        norm = np.linalg.norm(w)
        w, c = w / norm, c / norm
        if w @ verts[j] + c < 0:
            w, c = -w, -c
        W[j], b[j] = w, c
    return W, b


@dataclass(frozen=True)
class ContainmentReport:
    contained: bool
    violating_facet: int | None
    margin: float
    tolerance: float

    def to_dict(self) -> dict:
        return {"contained": self.contained, "violating_facet": self.violating_facet,
                "margin": self.margin, "tolerance": self.tolerance}


def _report(slack: np.ndarray, tol: float) -> ContainmentReport:
    """``slack`` has one column per facet; rows are individual checks."""
    per_facet = slack.min(axis=0)
    j = int(np.argmin(per_facet))
    margin = float(per_facet[j])
    ok = bool(margin >= -tol)
    return ContainmentReport(ok, None if ok else j, margin, float(tol))


def _scale(s: Simplex, *extra: float) -> float:
    return 1.0 + float(np.abs(np.asarray(s.vertices, dtype=float)).max()) + sum(abs(e) for e in extra)


def ball_in_simplex(center, radius: float, s: Simplex, tol: float = CONTAINMENT_TOL) -> ContainmentReport:
    """Exact test of ``B(center; radius)`` inside S via signed facet distances."""
    W, b = facet_hyperplanes(s)
    c = np.asarray(center, dtype=float)
    slack = (W @ c + b - radius)[None, :]
    return _report(slack, tol * _scale(s, radius, *c))


def cube_in_simplex(body: ConvexBody, s: Simplex, tol: float = CONTAINMENT_TOL) -> ContainmentReport:
    """Exact test of a cube inside S over all of its ``2**n`` corners."""
    if body.kind != "cube":
        raise ValueError("cube_in_simplex needs a cube body")
    if body.n > MAX_CUBE_DIM:
        raise DimensionTooLarge(f"cube corner enumeration limited to n <= {MAX_CUBE_DIM}")
    W, b = facet_hyperplanes(s)
    corners = np.asarray(body.vertices(), dtype=float)
    slack = corners @ W.T + b
    return _report(slack, tol * _scale(s, float(body.radius), *np.asarray(body.center, dtype=float)))


def body_in_simplex(body: ConvexBody, s: Simplex, tol: float = CONTAINMENT_TOL) -> ContainmentReport:
    if body.kind == "ball":
        return ball_in_simplex(body.center, float(body.radius), s, tol)
    return cube_in_simplex(body, s, tol)


def _dilation_slack(body: ConvexBody, s: Simplex):
    """``tau -> tau * (worst signed slack of the body inside s.dilate(tau))``.

    ``x`` lies in the dilate iff ``c + (x - c)/tau`` lies in S (``c`` the
    centroid), so the body is shrunk instead of the simplex being grown and
    S's hyperplanes are built once. Multiplying by ``tau`` makes each slack
    affine in ``tau`` with O(1) coefficients, which keeps large indices
    well resolved.
    """
    W, b = facet_hyperplanes(s)
    c = np.asarray(s.centroid(), dtype=float)
    at_centroid = W @ c + b                  # distance from centroid to each facet
    if body.kind == "ball":
        spread = W @ (np.asarray(body.center, dtype=float) - c) - float(body.radius)
    else:
        if body.n > MAX_CUBE_DIM:
            raise DimensionTooLarge(f"cube corner enumeration limited to n <= {MAX_CUBE_DIM}")
        corners = np.asarray(body.vertices(), dtype=float)
        spread = ((corners - c) @ W.T).min(axis=0)
    return lambda tau: float((tau * at_centroid + spread).min())


def xi_bisection(body: ConvexBody, s: Simplex, width: float = BISECTION_WIDTH,
                 tol: float = 0.0) -> float:
    """Least ``tau >= 1`` with the body inside ``s.dilate(tau)``, by bisection.

    ``tol`` is the slack allowed in the containment test; the default 0
    makes the predicate exact up to rounding.
    """
    s = s.to_float()
    slack = _dilation_slack(body, s)

    def inside(tau):
        return slack(tau) >= -tol * tau

    if inside(1.0):
        return 1.0
    lo, hi = 1.0, 2.0
    while not inside(hi):
        lo, hi = hi, 2.0 * hi
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if inside(mid):
            hi = mid
        else:
            lo = mid
    return hi


def chebyshev_inradius(s: Simplex) -> tuple[float, np.ndarray]:
    """Largest inscribed ball from the tangency system ``W z + b = r``.

    The n+1 facet equations in the n+1 unknowns ``(z, r)`` are assembled from
    the rebuilt hyperplanes and solved as one linear system.
    """
    W, b = facet_hyperplanes(s)
    n = s.n
    system = np.hstack([W, -np.ones((n + 1, 1))])
    sol = linalg.solve(system, -b)
    return float(sol[n]), sol[:n]


def _chord_lengths(W: np.ndarray, b: np.ndarray, i: int, points: np.ndarray) -> np.ndarray:
    """Length of the line through each point parallel to axis i, clipped to S."""
    base = points @ W.T + b                  # signed distances at the points, (m, n+1)
    wi = W[:, i]
    with np.errstate(divide="ignore", invalid="ignore"):
        bound = -base / wi                   # t where the line crosses facet j
    lower = np.where(wi > 0, bound, -np.inf).max(axis=1)
    upper = np.where(wi < 0, bound, np.inf).min(axis=1)
    # facets parallel to the axis either admit the whole line or none of it
    blocked = (base[:, wi == 0] < 0).any(axis=1)
    return np.where(blocked, 0.0, np.maximum(upper - lower, 0.0))


def _barycentric_grid(n: int, resolution: int, max_points: int, seed: int) -> np.ndarray:
    count = math.comb(resolution + n, n)
    if count <= max_points:
        rows = []
        for cuts in itertools.combinations(range(resolution + n), n):
            prev, parts = -1, []
            for c in cuts:
                parts.append(c - prev - 1)
                prev = c
            parts.append(resolution + n - 1 - prev)
            rows.append(parts)
        return np.asarray(rows, dtype=float) / resolution
    rng = np.random.default_rng(seed)
    return rng.dirichlet(np.ones(n + 1), size=max_points)


def axial_diameter_bruteforce(s: Simplex, i: int, resolution: int = 50, refine: int = 5,
                              max_points: int = 200_000, seed: int = 0) -> float:
    """Longest chord of S parallel to coordinate axis ``i`` (a lower bound).

    Chord lengths are evaluated exactly on a barycentric grid of base
    points, then the best few are polished by Nelder-Mead over the
    coordinates transverse to the axis.
    """
    W, b = facet_hyperplanes(s)
    verts = np.asarray(s.vertices, dtype=float)
    n = s.n
    points = _barycentric_grid(n, resolution, max_points, seed) @ verts
    lengths = _chord_lengths(W, b, i, points)
    best = float(lengths.max())
    if n == 1 or refine <= 0:
        return best
    others = [k for k in range(n) if k != i]

    def neg_chord(q):
        p = np.zeros((1, n))
        p[0, others] = q
        return -_chord_lengths(W, b, i, p)[0]

    span = float(np.ptp(verts, axis=0).max())
    for idx in np.argsort(lengths)[::-1][:refine]:
        q = points[idx, others]
        for _ in range(3):
            res = minimize(neg_chord, q, method="Nelder-Mead",
                           options={"xatol": 1e-13 * span, "fatol": 1e-15, "maxiter": 4000,
                                    "initial_simplex": q + 0.05 * span * np.vstack(
                                        [np.zeros(n - 1), np.eye(n - 1)])})
            q = res.x
            best = max(best, -float(res.fun))
    return best


@dataclass(frozen=True)
class Corollary5Report:
    n: int
    inside_cube: bool
    cube_absorbed: ContainmentReport
    regular: bool
    ball_absorbed: ContainmentReport
    implication_holds: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "inside_cube": self.inside_cube,
            "cube_absorbed": self.cube_absorbed.to_dict(),
            "regular": self.regular,
            "ball_absorbed": self.ball_absorbed.to_dict(),
            "implication_holds": self.implication_holds,
        }


def corollary5_check(s: Simplex, tol: float = 1e-9) -> Corollary5Report:
    """For ``S`` in ``[0,1]^n`` with the cube inside ``n*S``: a non-regular S
    cannot also absorb the ball of radius ``sqrt(n)/2`` around the cube.
    """
    s = s.to_float()
    n = s.n
    verts = np.asarray(s.vertices)
    inside = bool(np.all(verts >= -tol) and np.all(verts <= 1 + tol))
    if not inside:
        raise PreconditionFailed("simplex is not contained in the unit cube")
    big = s.dilate(n)
    cube = cube_in_simplex(unit_cube(n), big, tol)
    if not cube.contained:
        raise PreconditionFailed(f"unit cube is not inside {n}*S (margin {cube.margin:.3e})")
    regular = metrics.is_regular(s)
    ball = ball_in_simplex(np.full(n, 0.5), math.sqrt(n) / 2, big, tol)
    return Corollary5Report(n, inside, cube, regular, ball, regular or not ball.contained)
