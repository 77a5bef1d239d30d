import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplex_absorption import (alpha, ball, circumscribed_test, metrics, oracle, random_simplex,
                                regular_inscribed_simplex, standard_simplex, sym_cube, unit_ball,
                                unit_cube, xi)
from simplex_absorption import absorption as ab

from conftest import simplices


@pytest.mark.parametrize("n", range(2, 7))
def test_xi_regular_inscribed_is_n(n):
    s = regular_inscribed_simplex(n)
    assert xi(unit_ball(n), s).value == pytest.approx(n, rel=1e-9)
    assert alpha(unit_ball(n), s).value == pytest.approx(n, rel=1e-9)
    assert circumscribed_test(unit_ball(n), s)


def test_xi_ball_standard_triangle(std2):
    res = xi(unit_ball(2), std2)
    assert res.value == pytest.approx(4.0)
    np.testing.assert_allclose(res.per_facet, [math.sqrt(2) - 1, 1, 1])
    assert not res.circumscribed
    assert oracle.xi_bisection(unit_ball(2), std2) == pytest.approx(4.0, abs=1e-6)


@pytest.mark.parametrize("n", range(1, 11))
def test_xi_cube_standard_simplex_is_n_squared(n):
    res = xi(unit_cube(n), standard_simplex(n))
    assert res.value == pytest.approx(n * n, rel=1e-9)
    assert res.argmax_facet == 0
    assert res.per_facet[0] == pytest.approx(n - 1)
    assert alpha(unit_cube(n), standard_simplex(n)).value == pytest.approx(n)


def test_xi_cube_standard_rational_exact():
    res = xi(unit_cube(4, "rational"), standard_simplex(4, "rational"))
    assert res.value == Fraction(16)


def test_xi_clamps_when_contained(std2):
    res = xi(ball([1 / 3, 1 / 3], 0.1), std2)
    assert res.value == 1.0
    assert alpha(ball([1 / 3, 1 / 3], 0.1), std2).value < 1


def test_alpha_ball_standard_triangle(std2):
    a = alpha(unit_ball(2), std2).value
    assert a == pytest.approx(2 + math.sqrt(2))
    assert a == pytest.approx(1 / metrics.inradius_incenter(std2)[0])


def test_alpha_ball_independent_of_center(std2):
    base = alpha(unit_ball(2), std2).value
    for c, rho in (([5, -3], 0.5), ([0.2, 0.2], 2.0)):
        assert alpha(ball(c, rho), std2).value == pytest.approx(rho * base)


def test_symcube_coefficient_route():
    for seed in range(20):
        s = random_simplex(3, seed=seed)
        assert alpha(sym_cube(3), s).value == pytest.approx(ab.alpha_symcube_coeff(s), rel=1e-12)


def test_to_dict_rational():
    d = xi(unit_cube(2, "rational"), standard_simplex(2, "rational")).to_dict()
    assert d["value"] == 4 and d["index"] == "xi"


@given(simplices(min_n=2))
def test_xi_at_least_alpha_and_one(s):
    for body in (unit_ball(s.n), unit_cube(s.n), sym_cube(s.n)):
        x, a = xi(body, s), alpha(body, s)
        assert x.value >= a.value - 1e-12
        assert x.value >= 1 and a.value > 0
        tol = 1e-9
        assert circumscribed_test(body, s, tol) == (abs(x.value - a.value) <= tol * (s.n + 1)) or \
            abs(abs(x.value - a.value) - tol * (s.n + 1)) < 1e-6


@given(simplices(min_n=2))
def test_ball_and_cube_specializations(s):
    a = alpha(unit_ball(s.n), s).value
    r, _ = metrics.inradius_incenter(s)
    assert a == pytest.approx(1 / r, rel=1e-9)
    routes = [alpha(unit_cube(s.n), s).value, ab.alpha_cube_diameters(s), ab.alpha_cube_coeff(s)]
    for v in routes[1:]:
        assert v == pytest.approx(routes[0], rel=1e-9)


@given(simplices(min_n=2), st.floats(0.1, 3.0))
def test_xi_ball_formula_matches_generic(s, rho):
    c = np.full(s.n, 0.25)
    assert xi(ball(c, rho), s).value == pytest.approx(
        max(1.0, ab.xi_ball_formula(s, c, rho)), rel=1e-9)


@given(simplices(min_n=2, max_n=4), st.integers(0, 2**32 - 1))
def test_xi_oracle_equivalence(s, seed):
    rng = np.random.default_rng(seed)
    body = ball(rng.normal(size=s.n) * 0.3, rng.uniform(0.2, 1.5))
    assert oracle.xi_bisection(body, s) == pytest.approx(xi(body, s).value, abs=1e-6, rel=1e-9)


@given(simplices(min_n=2))
def test_monotone_in_radius_and_witness(s):
    c = s.centroid() + 0.1
    values = [xi(ball(c, rho), s).value for rho in (0.1, 0.5, 1.0, 2.0)]
    assert all(a <= b + 1e-12 for a, b in zip(values, values[1:]))
    body = ball(c, 2.0)
    res = xi(body, s)
    assert np.linalg.norm(res.witness_point - c) <= 2.0 + 1e-12
    if res.value > 1:
        lam = s.dilate(res.value).barycentric(res.witness_point)
        assert lam[res.argmax_facet] == pytest.approx(0, abs=1e-8)
        assert (lam >= -1e-8).all()


def test_theorem2_lower_bound():
    for seed in range(500):
        n = 2 + seed % 4
        s = random_simplex(n, seed=seed, scheme="in_ball")
        a = alpha(unit_ball(n), s).value
        assert a >= n - 1e-9
        if a - n <= 1e-6:
            assert metrics.is_regular(s, 1e-6)
