import math

import numpy as np
import pytest

from simplex_absorption import SearchConfig, ball, metrics, minimize_xi, unit_ball, xi
from simplex_absorption.search import BoundViolation, _objective

XI2 = 1 + 3 * math.sqrt(5) / 5


@pytest.mark.parametrize("kw", [dict(n=0), dict(n=7), dict(n=2, body="simplex"), dict(n=2, restarts=0),
                                dict(n=2, max_iters=0), dict(n=2, initial_step=0.0), dict(n=2, decay=1.0)])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        SearchConfig(**kw)


def test_deterministic_given_seed():
    cfg = SearchConfig(n=2, restarts=2, max_iters=300, seed=3)
    a, b = minimize_xi(cfg), minimize_xi(cfg)
    assert a.best_value == b.best_value
    assert a.best_simplex == b.best_simplex
    assert a.history_csv() == b.history_csv()


def test_history_csv_header():
    res = minimize_xi(SearchConfig(n=2, restarts=2, max_iters=50))
    lines = res.history_csv().splitlines()
    assert lines[0] == "restart,iteration,value"
    assert len(res.history) == 2
    assert res.best_value == min(res.history)


def test_bound_guard_fires():
    # a body the simplex already contains has xi = 1 < n, which the guard must reject
    with pytest.raises(BoundViolation):
        _objective(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]), SearchConfig(n=2),
                   target=ball([0.3, 0.3], 1e-3))


def test_cube_n2_reaches_xi2():
    res = minimize_xi(SearchConfig(n=2, body="cube", restarts=12, seed=0))
    assert 2.3416 <= res.best_value <= 2.35
    assert res.best_value >= XI2 - 1e-9


def test_ball_n2_regular_optimum():
    res = minimize_xi(SearchConfig(n=2, body="ball", restarts=8, seed=0))
    assert 2 <= res.best_value <= 2.001
    assert metrics.is_regular(res.best_simplex, 1e-2)
    assert metrics.circumball(res.best_simplex)[0] == pytest.approx(1, abs=1e-6)
    assert xi(unit_ball(2), res.best_simplex).value == pytest.approx(res.best_value)


@pytest.mark.slow
def test_cube_n3():
    res = minimize_xi(SearchConfig(n=3, body="cube", restarts=6, seed=0))
    assert 3 <= res.best_value <= 3.01
