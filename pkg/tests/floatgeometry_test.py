"""Test the floating point construction of the quadrilateral."""
import math

import pytest

from ladybug_geometry.geometry2d import Polygon2D, Arc2D

from heron_quad.geometry import construct_quad, quad_area
from heron_quad.floatgeometry import FloatQuadConstruction


def test_float_construction_3_4_5():
    """Test the float construction against the exact values of (3, 4, 5)."""
    q = FloatQuadConstruction(3, 4, 5)
    assert q.alpha == 3.0
    gamma, b, gamma2, gamma1 = q.vertices
    assert (gamma.x, gamma.y) == pytest.approx((1.8, 2.4))
    assert (gamma2.x, gamma2.y) == (0, -3)
    assert (gamma1.x, gamma1.y) == (9, 0)
    assert q.a.x == 5

    sides = q.side_lengths
    assert sides[:2] == pytest.approx((3, 3))
    assert sides[2] == pytest.approx(3 * math.sqrt(10))
    assert sides[3] == pytest.approx(12 * math.sqrt(10) / 5)
    assert q.diagonal_lengths == pytest.approx((9, 9 * math.sqrt(10) / 5))
    assert q.tangents == pytest.approx((-0.75, -3, 0.75, 3))
    assert q.theta_degrees == pytest.approx(18.43494882, abs=1e-8)
    assert q.area == pytest.approx(24.3)


def test_float_construction_geometry_objects():
    """Test the ladybug-geometry objects of the float construction."""
    q = FloatQuadConstruction(120, 35, 125)
    assert isinstance(q.polygon, Polygon2D)
    assert q.polygon.area == pytest.approx(12288)
    circle = q.circumcircle
    assert isinstance(circle, Arc2D)
    assert circle.r == pytest.approx(100)
    assert (circle.c.x, circle.c.y) == pytest.approx((80, -60))
    for pt in q.vertices:
        assert pt.distance_to_point(circle.c) == pytest.approx(100)


def test_float_construction_irrational():
    """Test the float construction on an irrational triple."""
    q = FloatQuadConstruction(1, math.sqrt(2), math.sqrt(3))
    assert q.side_lengths[0] == pytest.approx(1)
    assert q.tangents[0] + q.tangents[2] == pytest.approx(0, abs=1e-12)
    assert q.tangents[1] + q.tangents[3] == pytest.approx(0, abs=1e-12)
    assert q.tangent_at('Gamma1') == pytest.approx(1 / math.sqrt(2))


def test_float_matches_exact():
    """Test that the float path agrees with the exact construction."""
    for triple in [(3, 4, 5), (4, 3, 5), (20, 21, 29), (1560, 1547, 2197)]:
        exact = construct_quad(*triple)
        q = FloatQuadConstruction.from_exact(exact)
        assert q.area == pytest.approx(float(quad_area(exact)), rel=1e-12)
        assert q.tangents == pytest.approx(tuple(float(t) for t in exact.tangents))
        assert q.side_lengths[3] == pytest.approx(float(exact.side_gamma_gamma1))
        assert q.diagonal_lengths[1] == pytest.approx(float(exact.diag_gamma_gamma2))


def test_float_construction_errors():
    """Test the diagnostics of invalid float triples."""
    with pytest.raises(ValueError, match='positive'):
        FloatQuadConstruction(0, 4, 4)
    with pytest.raises(ValueError, match='must equal'):
        FloatQuadConstruction(3, 4, 5.001)
    FloatQuadConstruction(3, 4, 5 + 1e-12)
    FloatQuadConstruction(3, 4, 5.001, tolerance=1e-2)
    with pytest.raises(ValueError):
        FloatQuadConstruction(3, 4, 5).tangent_at('A')


def test_float_to_dict():
    """Test the to_dict method of FloatQuadConstruction."""
    q_dict = FloatQuadConstruction(3, 4, 5).to_dict()
    assert q_dict['type'] == 'FloatQuadConstruction'
    assert q_dict['triple'] == [3.0, 4.0, 5.0]
    assert q_dict['vertices']['Gamma1'] == [9.0, 0.0]
    assert q_dict['circumcircle']['radius'] == pytest.approx(1.5 * math.sqrt(10))
    assert q_dict['theta']['degrees'] == pytest.approx(18.43495)
