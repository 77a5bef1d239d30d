"""Cross-validation sweeps over random simplices.

Each suite compares independent routes to the same quantity on seeded
random simplices and records the worst deviation together with the
simplex that produced it, so a failure can be replayed.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import absorption as ab
from . import metrics, oracle
from .bodies import sym_cube, unit_ball, unit_cube
from .constructions import random_simplex
from .simplex import Simplex, simplex_to_dict

SUITES = ("corollary1", "alpha_ball", "alpha_cube", "euler", "xi_oracle")

DEFAULT_TOL = {
    "corollary1": 1e-9,
    "alpha_ball": 1e-8,
    "alpha_cube": 1e-9,
    "euler": 1e-9,
    "xi_oracle": 1e-6,
}


@dataclass
class SuiteResult:
    suite: str
    n: int
    cases: int
    tolerance: float
    worst_deviation: float = 0.0
    worst_case: dict | None = None
    failures: int = 0
    first_failure: dict | None = field(default=None)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, deviation: float, s: Simplex) -> None:
        if deviation > self.worst_deviation or self.worst_case is None:
            self.worst_deviation = float(deviation)
            self.worst_case = simplex_to_dict(s)
        if not deviation <= self.tolerance:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = simplex_to_dict(s)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "cases": self.cases,
            "tolerance": self.tolerance,
            "worst_deviation": self.worst_deviation,
            "passed": self.passed,
            "failures": self.failures,
            "worst_case": self.worst_case,
            "first_failure": self.first_failure,
        }


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def corollary1_deviation(s: Simplex) -> float:
    r, _ = metrics.inradius_incenter(s)
    return _rel(1.0 / r, float((1.0 / metrics.heights(s)).sum()))


def alpha_ball_deviation(s: Simplex) -> float:
    routes = [
        float(ab.alpha(unit_ball(s.n), s).value),
        ab.alpha_ball_coeff(s),
        ab.alpha_ball_inradius(s),
        ab.alpha_ball_surface(s),
    ]
    return max(_rel(x, y) for i, x in enumerate(routes) for y in routes[i + 1:])


def alpha_cube_deviation(s: Simplex) -> float:
    cube = [float(ab.alpha(unit_cube(s.n), s).value), ab.alpha_cube_diameters(s),
            float(ab.alpha_cube_coeff(s))]
    dev = max(_rel(x, y) for i, x in enumerate(cube) for y in cube[i + 1:])
    dev = max(dev, _rel(float(ab.alpha(sym_cube(s.n), s).value), float(ab.alpha_symcube_coeff(s))))
    # the ball sits inside [-1,1]^n, so its translate index cannot be larger
    excess = float(ab.alpha(unit_ball(s.n), s).value) - float(ab.alpha(sym_cube(s.n), s).value)
    return max(dev, excess / float(ab.alpha(sym_cube(s.n), s).value))


def euler_deviation(s: Simplex) -> float:
    """How far ``R >= n r`` is violated (0 when it holds)."""
    _, _, gap = metrics.euler_check(s)
    return max(0.0, -gap)


def xi_oracle_deviation(s: Simplex) -> float:
    """Worst |bisection - formula| over the unit ball, the unit cube and [-1,1]^n."""
    n = s.n
    bodies = [unit_ball(n), unit_cube(n), sym_cube(n)]
    worst = 0.0
    for body in bodies:
        exact = float(ab.xi(body, s).value)
        approx = oracle.xi_bisection(body, s)
        worst = max(worst, abs(exact - approx))
    return worst


# xi_oracle draws simplices normalized into the unit ball: for nearly flat
# gaussian draws xi reaches 1e5 and float rounding alone exceeds 1e-6
SCHEMES = {"xi_oracle": "in_ball"}

DEVIATIONS = {
    "corollary1": corollary1_deviation,
    "alpha_ball": alpha_ball_deviation,
    "alpha_cube": alpha_cube_deviation,
    "euler": euler_deviation,
    "xi_oracle": xi_oracle_deviation,
}


def run_suite(suite: str, n: int, cases: int, seed: int = 0, tol: float | None = None,
              scheme: str | None = None) -> SuiteResult:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    result = SuiteResult(suite, n, cases, DEFAULT_TOL[suite] if tol is None else tol)
    fn = DEVIATIONS[suite]
    scheme = scheme or SCHEMES.get(suite, "gaussian")
    for ss in np.random.SeedSequence([seed, n, SUITES.index(suite)]).spawn(cases):
        s = random_simplex(n, scheme=scheme, rng=np.random.default_rng(ss))
        result.record(fn(s), s)
    return result


def run_suites(names, n: int, cases: int, seed: int = 0, tol: float | None = None) -> list[SuiteResult]:
    names = SUITES if "all" in names else names
    return [run_suite(name, n, cases, seed, tol) for name in names]
