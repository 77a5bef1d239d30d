"""Derivative-free minimisation of xi over simplices inside a cube or a ball.

Each restart starts from a random feasible simplex and repeatedly nudges
one vertex, projects back into the feasible set and keeps the move if xi
drops by more than ``ACCEPT_EPS``. When a full sweep over all vertex
coordinates gives nothing, a round of random single-vertex moves is tried
and then the step shrinks geometrically.

Both targets are bounded below by n (cube: ``xi >= alpha = sum 1/d_i >= n``;
ball: the regular inscribed simplex is optimal), and every accepted iterate
is checked against that bound.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import absorption, metrics
from .bodies import unit_ball, unit_cube
from .constructions import random_simplex
from .errors import DegenerateSimplex
from .simplex import Simplex

log = logging.getLogger(__name__)

ACCEPT_EPS = 1e-12
BOUND_SLACK = 1e-9
MAX_SEARCH_DIM = 6


@dataclass
class SearchConfig:
    n: int
    body: Literal["cube", "ball"] = "cube"
    restarts: int = 10
    max_iters: int = 4000
    initial_step: float = 0.1
    decay: float = 0.5
    min_step: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.body not in ("cube", "ball"):
            raise ValueError(f"body must be 'cube' or 'ball', got {self.body!r}")
        if not 1 <= self.n <= MAX_SEARCH_DIM:
            raise ValueError(f"search supports 1 <= n <= {MAX_SEARCH_DIM}")
        if self.restarts < 1 or self.max_iters < 1:
            raise ValueError("restarts and max_iters must be at least 1")
        if not (self.initial_step > 0 and self.min_step > 0 and 0 < self.decay < 1):
            raise ValueError("steps must be positive and decay in (0, 1)")


@dataclass
class SearchResult:
    best_value: float
    best_simplex: Simplex
    history: list[float]
    iterations: int
    trace: list[tuple[int, int, float]] = field(default_factory=list, repr=False)

    def history_csv(self) -> str:
        lines = ["restart,iteration,value"]
        lines += [f"{r},{i},{v:.17g}" for r, i, v in self.trace]
        return "\n".join(lines) + "\n"


class BoundViolation(AssertionError):
    """An iterate beat a proven lower bound; the objective is broken."""


def _project(verts: np.ndarray, body: str) -> np.ndarray:
    if body == "cube":
        return np.clip(verts, 0.0, 1.0)
    R, c = metrics.circumball(Simplex(verts))
    if R > 1.0:
        return (verts - c) / R
    return verts


def _objective(verts: np.ndarray, cfg: SearchConfig, target) -> float:
    try:
        s = Simplex(verts)
    except DegenerateSimplex:
        return np.inf
    value = float(absorption.xi(target, s).value)
    if value < cfg.n - BOUND_SLACK:
        raise BoundViolation(f"xi = {value!r} below the lower bound {cfg.n} for {verts.tolist()}")
    return value


def _one_restart(cfg: SearchConfig, rng: np.random.Generator, restart: int, target):
    scheme = "in_cube" if cfg.body == "cube" else "in_ball"
    verts = np.array(random_simplex(cfg.n, scheme=scheme, rng=rng).vertices, dtype=float)
    verts = _project(verts, cfg.body)
    value = _objective(verts, cfg, target)
    trace = [(restart, 0, value)]
    step = cfg.initial_step
    it = 0
    coords = [(k, i) for k in range(cfg.n + 1) for i in range(cfg.n)]

    def attempt(candidate):
        nonlocal verts, value
        candidate = _project(candidate, cfg.body)
        v = _objective(candidate, cfg, target)
        if v < value - ACCEPT_EPS:
            verts, value = candidate, v
            trace.append((restart, it, value))
            return True
        return False

    while it < cfg.max_iters and step >= cfg.min_step:
        improved = False
        for idx in rng.permutation(len(coords)):
            k, i = coords[idx]
            for sign in (1.0, -1.0):
                it += 1
                cand = verts.copy()
                cand[k, i] += sign * step
                if attempt(cand):
                    improved = True
                    break
            if it >= cfg.max_iters:
                break
        if improved:
            continue
        # coordinate moves stall on ridges where several facets are active
        for _ in range(4 * len(coords)):
            if it >= cfg.max_iters:
                break
            it += 1
            cand = verts.copy()
            d = rng.standard_normal(cand.shape)
            if rng.random() < 0.5:
                # move a single vertex
                mask = np.zeros(cfg.n + 1, dtype=bool)
                mask[rng.integers(cfg.n + 1)] = True
                d[~mask] = 0.0
            cand += step * d / np.linalg.norm(d)
            improved = attempt(cand) or improved
        if not improved:
            step *= cfg.decay
    return value, verts, it, trace


def minimize_xi(cfg: SearchConfig) -> SearchResult:
    target = unit_cube(cfg.n) if cfg.body == "cube" else unit_ball(cfg.n)
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    best_value, best_verts = np.inf, None
    history, trace, total = [], [], 0
    for r, ss in enumerate(seeds):
        value, verts, its, tr = _one_restart(cfg, np.random.default_rng(ss), r, target)
        log.debug("restart %d: xi=%.12f after %d iterations", r, value, its)
        history.append(value)
        trace.extend(tr)
        total += its
        if value < best_value:
            best_value, best_verts = value, verts
    return SearchResult(best_value, Simplex(best_verts), history, total, trace)
