import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplex_absorption import Simplex, compute_metrics, oracle, random_simplex
from simplex_absorption import metrics as mt
from simplex_absorption.constructions import hadamard_simplex, regular_inscribed_simplex
from simplex_absorption.errors import DimensionTooLarge

from conftest import simplices

R_STD2 = 1 / (2 + math.sqrt(2))  # 0.292893...


def test_heights(std2):
    np.testing.assert_allclose(mt.heights(std2), [1 / math.sqrt(2), 1, 1])
    np.testing.assert_allclose(mt.heights(regular_inscribed_simplex(2)), 1.5)
    np.testing.assert_allclose(mt.heights(Simplex([[0], [1]])), [1, 1])


def test_axial_diameters(std2):
    np.testing.assert_allclose(mt.axial_diameters(std2), [1, 1])
    np.testing.assert_allclose(mt.axial_diameters(std2.dilate(-2.5)), [2.5, 2.5])
    s = random_simplex(3, seed=3)
    d = mt.axial_diameters(s)
    for i in range(3):
        assert oracle.axial_diameter_bruteforce(s, i) == pytest.approx(d[i], abs=1e-8)


def test_inradius_incenter(std2):
    r, z = mt.inradius_incenter(std2)
    assert r == pytest.approx(R_STD2, abs=1e-12)
    np.testing.assert_allclose(z, [R_STD2, R_STD2])
    for n in range(1, 8):
        r, z = mt.inradius_incenter(regular_inscribed_simplex(n))
        assert r == pytest.approx(1 / n)
        np.testing.assert_allclose(z, 0, atol=1e-12)


def test_tangent_points(std2):
    y = mt.tangent_points(std2)
    # facet 1 is opposite vertex (1,0), i.e. the line x1 = 0
    np.testing.assert_allclose(y[1], [0, R_STD2], atol=1e-12)


def test_facet_measures(std2):
    np.testing.assert_allclose(mt.facet_measures(std2), [math.sqrt(2), 1, 1])
    assert mt.facet_measures(std2).sum() == pytest.approx(2 + math.sqrt(2))
    np.testing.assert_allclose(mt.facet_measures(regular_inscribed_simplex(2)), math.sqrt(3))
    np.testing.assert_allclose(mt.facet_measures(Simplex([[0], [3]])), [1, 1])


def test_circumball_examples(std2):
    for n in (2, 3, 6):
        R, c = mt.circumball(regular_inscribed_simplex(n))
        assert R == pytest.approx(1.0)
        np.testing.assert_allclose(c, 0, atol=1e-12)
    R, c = mt.circumball(std2)
    assert R == pytest.approx(math.sqrt(2) / 2)
    np.testing.assert_allclose(c, [0.5, 0.5])
    R, c = mt.circumball(Simplex([[0, 0], [4, 0], [2, 0.1]]))
    assert R == pytest.approx(2.0)
    np.testing.assert_allclose(c, [2, 0], atol=1e-12)


def test_circumball_dimension_cap():
    s = Simplex(np.vstack([np.zeros(21), np.eye(21)]))
    with pytest.raises(DimensionTooLarge):
        mt.circumball(s)


def test_euler_examples(std2):
    for n in range(2, 8):
        assert abs(mt.euler_check(regular_inscribed_simplex(n))[2]) < 1e-9
    R, nr, gap = mt.euler_check(std2)
    assert R == pytest.approx(0.70710678)
    assert nr == pytest.approx(0.5857864376)
    assert gap > 0


def test_is_regular(std2):
    reg = regular_inscribed_simplex(4)
    assert mt.is_regular(reg)
    assert mt.is_regular(reg.dilate(2.7).translate([1, -2, 3, 0.5]))
    assert mt.is_regular(hadamard_simplex(7), 1e-12)
    assert not mt.is_regular(std2)


def test_compute_metrics_dict(std2):
    d = compute_metrics(std2).to_dict()
    assert d["inradius"] == pytest.approx(R_STD2)
    assert d["regular"] is False
    assert set(d) >= {"volume", "heights", "axial_diameters", "circumradius", "euler_gap"}


@given(simplices(min_n=2))
def test_corollary1_and_surface_identity(s):
    r, _ = mt.inradius_incenter(s)
    assert abs(1 / r - (1 / mt.heights(s)).sum()) <= 1e-9 / r
    vol = float(s.volume())
    assert 1 / r == pytest.approx(mt.facet_measures(s).sum() / (s.n * vol), rel=1e-8)
    np.testing.assert_allclose(mt.facet_measures(s) * mt.heights(s) / s.n, vol, rtol=1e-9)


@given(simplices(), st.integers(0, 2**32 - 1))
def test_inscribed_ball_and_tangency(s, seed):
    r, z = mt.inradius_incenter(s)
    u = np.random.default_rng(seed).normal(size=(200, s.n))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    assert (s.barycentric(z + r * u) >= -1e-10).all()
    y = mt.tangent_points(s)
    lam = s.barycentric(y)
    np.testing.assert_allclose(np.diag(lam), 0, atol=1e-10)
    np.testing.assert_allclose(np.linalg.norm(y - z, axis=1), r, rtol=1e-10)


@given(simplices(min_n=2))
def test_euler_inequality(s):
    R, nr, gap = mt.euler_check(s)
    assert gap >= -1e-9
    if abs(gap) <= 1e-8 * R:
        assert mt.is_regular(s, 1e-6)


@given(simplices(), st.sampled_from([-2.0, 0.5, 3.0]))
def test_homothety_covariance(s, tau):
    d = s.dilate(tau)
    k = abs(tau)
    assert mt.inradius_incenter(d)[0] == pytest.approx(k * mt.inradius_incenter(s)[0], rel=1e-9)
    assert mt.circumball(d)[0] == pytest.approx(k * mt.circumball(s)[0], rel=1e-9)
    np.testing.assert_allclose(mt.heights(d), k * mt.heights(s), rtol=1e-9)
    np.testing.assert_allclose(mt.axial_diameters(d), k * mt.axial_diameters(s), rtol=1e-9)
    if tau > 0:
        c = s.centroid()
        z, zd = mt.inradius_incenter(s)[1], mt.inradius_incenter(d)[1]
        np.testing.assert_allclose(zd, c + tau * (z - c), atol=1e-9)


@given(simplices(max_n=4))
def test_circumball_contains_all_vertices(s):
    R, c = mt.circumball(s)
    assert (np.linalg.norm(s.vertices - c, axis=1) <= R * (1 + 1e-9)).all()
    # no vertex-centred ball through the farthest vertex is smaller
    assert R <= np.linalg.norm(s.vertices - s.centroid(), axis=1).max() + 1e-12
