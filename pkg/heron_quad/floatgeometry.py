# coding=utf-8
"""Floating point construction of the quadrilateral for arbitrary positive reals.

This mirrors heron_quad.geometry with ladybug-geometry objects. It makes no exact
claims and is used for irrational inputs and for drawing.
"""
import math

from ladybug_geometry.geometry2d import Point2D, Polygon2D, Arc2D

from .config import tolerances

VERTEX_ORDER = ('Gamma', 'B', 'Gamma2', 'Gamma1')


class FloatQuadConstruction(object):
    """The quadrilateral Gamma-B-Gamma2-Gamma1 computed in floating point.

    Args:
        alpha: Positive leg |Gamma B|.
        beta: Positive leg |Gamma A|.
        gamma: Positive hypotenuse |BA|.
        tolerance: Relative tolerance for alpha^2 + beta^2 = gamma^2. If None,
            the configured pythagorean_tolerance is used. (Default: None).

    Properties:
        * alpha
        * beta
        * gamma
        * vertices
        * a
        * polygon
        * circumcircle
        * side_lengths
        * diagonal_lengths
        * tangents
        * theta_degrees
        * area
    """
    __slots__ = ('_alpha', '_beta', '_gamma', '_vertices', '_a')

    def __init__(self, alpha, beta, gamma, tolerance=None):
        alpha, beta, gamma = float(alpha), float(beta), float(gamma)
        if tolerance is None:
            tolerance = tolerances.pythagorean_tolerance
        if not (alpha > 0 and beta > 0 and gamma > 0):
            raise ValueError(
                'alpha, beta and gamma must be positive. Got ({}, {}, {}).'.format(
                    alpha, beta, gamma))
        if abs(alpha * alpha + beta * beta - gamma * gamma) > tolerance * gamma * gamma:
            raise ValueError(
                'alpha^2 + beta^2 must equal gamma^2 within a relative tolerance of '
                '{}. Got {} + {} != {}.'.format(
                    tolerance, alpha * alpha, beta * beta, gamma * gamma))
        self._alpha, self._beta, self._gamma = alpha, beta, gamma
        self._vertices = (
            Point2D(alpha * alpha / gamma, alpha * beta / gamma),
            Point2D(0, 0),
            Point2D(0, -alpha),
            Point2D(beta + gamma, 0)
        )
        self._a = Point2D(gamma, 0)

    @classmethod
    def from_exact(cls, q):
        """Create a FloatQuadConstruction from an exact QuadConstruction."""
        return cls(float(q.alpha), float(q.beta), float(q.gamma))

    @property
    def alpha(self):
        """Get the leg |Gamma B|."""
        return self._alpha

    @property
    def beta(self):
        """Get the leg |Gamma A|."""
        return self._beta

    @property
    def gamma(self):
        """Get the hypotenuse |BA|."""
        return self._gamma

    @property
    def vertices(self):
        """Get the Point2D vertices in the order Gamma, B, Gamma2, Gamma1."""
        return self._vertices

    @property
    def a(self):
        """Get the Point2D A of the right triangle Gamma-B-A."""
        return self._a

    @property
    def polygon(self):
        """Get a ladybug-geometry Polygon2D of the quadrilateral."""
        return Polygon2D(self._vertices)

    @property
    def circumcircle(self):
        """Get the circumcircle as a ladybug-geometry Arc2D."""
        gamma2, gamma1 = self._vertices[2], self._vertices[3]
        center = Point2D((gamma1.x + gamma2.x) / 2, (gamma1.y + gamma2.y) / 2)
        return Arc2D(center, gamma1.distance_to_point(gamma2) / 2)

    @property
    def side_lengths(self):
        """Get the sides (|Gamma B|, |B Gamma2|, |Gamma2 Gamma1|, |Gamma Gamma1|)."""
        g, b, g2, g1 = self._vertices
        return (g.distance_to_point(b), b.distance_to_point(g2),
                g2.distance_to_point(g1), g.distance_to_point(g1))

    @property
    def diagonal_lengths(self):
        """Get the diagonals (|B Gamma1|, |Gamma Gamma2|)."""
        g, b, g2, g1 = self._vertices
        return (b.distance_to_point(g1), g.distance_to_point(g2))

    def tangent_at(self, vertex):
        """Get the tangent of the interior angle at a named vertex from coordinates.

        Returns math.inf for an exactly right angle.
        """
        if vertex not in VERTEX_ORDER:
            raise ValueError('Vertex "{}" is not one of {}.'.format(vertex, VERTEX_ORDER))
        i = VERTEX_ORDER.index(vertex)
        pts = self._vertices
        u = pts[i - 1] - pts[i]
        w = pts[(i + 1) % 4] - pts[i]
        dot = u.dot(w)
        if dot == 0:
            return math.inf
        return abs(u.determinant(w)) / dot

    @property
    def tangents(self):
        """Get the interior angle tangents ordered as (B, Gamma, Gamma1, Gamma2)."""
        return tuple(self.tangent_at(v) for v in ('B', 'Gamma', 'Gamma1', 'Gamma2'))

    @property
    def theta_degrees(self):
        """Get theta, the angle at Gamma1 of the right triangle B-Gamma1-Gamma2."""
        return math.degrees(math.atan(self._alpha / (self._beta + self._gamma)))

    @property
    def area(self):
        """Get the area of the quadrilateral."""
        return self.polygon.area

    def to_dict(self):
        """Get FloatQuadConstruction as a dictionary."""
        digits = tolerances.angle_decimals
        names = ('GammaB', 'BGamma2', 'Gamma2Gamma1', 'GammaGamma1')
        circle = self.circumcircle
        return {
            'type': 'FloatQuadConstruction',
            'triple': [self._alpha, self._beta, self._gamma],
            'vertices': {name: [pt.x, pt.y] for name, pt in
                         zip(VERTEX_ORDER, self._vertices)},
            'sides': dict(zip(names, self.side_lengths)),
            'diagonals': dict(zip(('BGamma1', 'GammaGamma2'), self.diagonal_lengths)),
            'tangents': dict(zip(('B', 'Gamma', 'Gamma1', 'Gamma2'), self.tangents)),
            'theta': {'degrees': round(self.theta_degrees, digits)},
            'circumcircle': {'center': [circle.c.x, circle.c.y], 'radius': circle.r},
            'area': self.area
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'FloatQuadConstruction: ({}, {}, {})'.format(
            self._alpha, self._beta, self._gamma)
