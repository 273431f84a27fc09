# coding=utf-8
"""Exact construction of the cyclic quadrilateral Gamma-B-Gamma2-Gamma1.

Starting from the right triangle Gamma-B-A with |Gamma B| = alpha,
|Gamma A| = beta and hypotenuse |BA| = gamma, the figure is embedded with every
vertex at rational coordinates:

* B = (0, 0) and A = (gamma, 0), with BA on the positive horizontal axis.
* Gamma = (alpha^2/gamma, alpha*beta/gamma) in the upper half-plane.
* Gamma2 = (0, -alpha) on the ray through B perpendicular to BA, below the axis.
* Gamma1 = (beta + gamma, 0) on BA extended past A, so that |A Gamma1| = beta.

Gamma1-Gamma2 is a diameter of the circumcircle since the angle at B is right.
"""
import math
from collections import namedtuple
from fractions import Fraction

from .config import tolerances
from .exactnum import Surd, to_rational, rational_root, rational_to_str, approx_str

GAMMA = 'Gamma'
B = 'B'
GAMMA2 = 'Gamma2'
GAMMA1 = 'Gamma1'
VERTEX_ORDER = (GAMMA, B, GAMMA2, GAMMA1)

# tangent reported for an interior angle of exactly 90 degrees
RIGHT_ANGLE = math.inf

AngleIdentity = namedtuple('AngleIdentity', ('phi', 'omega', 'theta', 'max_spread'))


class Point2(object):
    """A point (or vector) in the plane with exact Rational coordinates.

    Args:
        x: The x coordinate as a Rational or integer.
        y: The y coordinate as a Rational or integer.

    Properties:
        * x
        * y
    """
    __slots__ = ('_x', '_y')

    def __init__(self, x, y):
        self._x = to_rational(x)
        self._y = to_rational(y)

    @classmethod
    def from_dict(cls, data):
        """Create a Point2 from a dictionary with "x" and "y" rational strings."""
        return cls(to_rational(data['x']), to_rational(data['y']))

    @property
    def x(self):
        """Get the x coordinate."""
        return self._x

    @property
    def y(self):
        """Get the y coordinate."""
        return self._y

    def dot(self, other):
        """Get the dot product with another Point2 treated as a vector."""
        return self._x * other._x + self._y * other._y

    def cross(self, other):
        """Get the z component of the cross product with another Point2 vector."""
        return self._x * other._y - self._y * other._x

    def distance_squared_to(self, other):
        """Get the exact squared distance to another Point2."""
        dx, dy = self._x - other._x, self._y - other._y
        return dx * dx + dy * dy

    def distance_to(self, other):
        """Get the exact distance to another Point2 as a Surd."""
        return Surd.sqrt_of(self.distance_squared_to(other))

    def __sub__(self, other):
        return Point2(self._x - other._x, self._y - other._y)

    def __add__(self, other):
        return Point2(self._x + other._x, self._y + other._y)

    def __iter__(self):
        return iter((self._x, self._y))

    def __eq__(self, other):
        return isinstance(other, Point2) and \
            self._x == other._x and self._y == other._y

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._x, self._y))

    def to_dict(self):
        """Get Point2 as a dictionary."""
        return {
            'x': rational_to_str(self._x), 'y': rational_to_str(self._y),
            'x_decimal': approx_str(self._x), 'y_decimal': approx_str(self._y)
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Point2 ({}, {})'.format(rational_to_str(self._x), rational_to_str(self._y))


def angle_tangent(previous, vertex, following):
    """Get the exact tangent of the angle at a vertex between two incident edges.

    The tangent is |cross| / dot of the two edge vectors. That is the tangent of
    the interior angle of a convex polygon, which lies in (0, 180) degrees.

    Returns:
        A Rational, or RIGHT_ANGLE when the two edges are perpendicular.
    """
    u, w = previous - vertex, following - vertex
    dot = u.dot(w)
    if dot == 0:
        return RIGHT_ANGLE
    return abs(u.cross(w)) / dot


def angle_degrees(previous, vertex, following):
    """Get the angle at a vertex between two incident edges in degrees (float)."""
    u, w = previous - vertex, following - vertex
    return math.degrees(math.atan2(float(abs(u.cross(w))), float(u.dot(w))))


def signed_area(points):
    """Get the exact signed shoelace area of a closed polygon.

    The result is positive for counterclockwise vertex order.
    """
    total = Fraction(0)
    count = len(points)
    for i, pt in enumerate(points):
        total += pt.cross(points[(i + 1) % count])
    return total / 2


class QuadConstruction(object):
    """The cyclic quadrilateral Gamma-B-Gamma2-Gamma1 built on a Pythagorean triple.

    Args:
        alpha: Positive Rational leg |Gamma B|.
        beta: Positive Rational leg |Gamma A|.
        gamma: Positive Rational hypotenuse |BA| with alpha^2 + beta^2 = gamma^2.

    Properties:
        * alpha
        * beta
        * gamma
        * gamma_pt
        * b
        * gamma2
        * gamma1
        * a
        * vertices
        * side_gamma_b
        * side_b_gamma2
        * side_gamma2_gamma1
        * side_gamma_gamma1
        * diag_b_gamma1
        * diag_gamma_gamma2
        * tan_b
        * tan_gamma
        * tan_gamma1
        * tan_gamma2
        * tangents
        * tan_theta
        * theta_degrees
        * circumcenter
        * radius_squared
        * sin_2omega
        * cos_2omega
    """
    __slots__ = ('_alpha', '_beta', '_gamma', '_gamma_pt', '_b', '_gamma2',
                 '_gamma1', '_a', '_diameter')

    def __init__(self, alpha, beta, gamma):
        alpha, beta, gamma = (to_rational(v) for v in (alpha, beta, gamma))
        if alpha <= 0 or beta <= 0 or gamma <= 0:
            raise ValueError(
                'alpha, beta and gamma must be positive. Got ({}, {}, {}).'.format(
                    alpha, beta, gamma))
        if alpha * alpha + beta * beta != gamma * gamma:
            raise ValueError(
                'alpha^2 + beta^2 must equal gamma^2. Got {} + {} != {}.'.format(
                    alpha * alpha, beta * beta, gamma * gamma))
        self._alpha, self._beta, self._gamma = alpha, beta, gamma
        self._b = Point2(0, 0)
        self._a = Point2(gamma, 0)
        self._gamma_pt = Point2(alpha * alpha / gamma, alpha * beta / gamma)
        self._gamma2 = Point2(0, -alpha)
        self._gamma1 = Point2(beta + gamma, 0)
        self._diameter = Surd.sqrt_of(alpha * alpha + (beta + gamma) ** 2)

    @classmethod
    def from_dict(cls, data):
        """Create a QuadConstruction from a dictionary with its generating triple.

        Args:
            data: A dictionary in the format below. Other keys written by
                to_dict are ignored since they are derived from the triple.

        .. code-block:: python

            {
            "type": "QuadConstruction",
            "triple": ["3", "4", "5"]
            }
        """
        assert data['type'] == 'QuadConstruction', \
            'Expected QuadConstruction dictionary. Got {}.'.format(data['type'])
        return cls(*(to_rational(str(v)) for v in data['triple']))

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
    def triple(self):
        """Get the tuple (alpha, beta, gamma)."""
        return (self._alpha, self._beta, self._gamma)

    @property
    def gamma_pt(self):
        """Get the vertex Gamma."""
        return self._gamma_pt

    @property
    def b(self):
        """Get the vertex B (the origin)."""
        return self._b

    @property
    def gamma2(self):
        """Get the vertex Gamma2."""
        return self._gamma2

    @property
    def gamma1(self):
        """Get the vertex Gamma1."""
        return self._gamma1

    @property
    def a(self):
        """Get the point A, the vertex of the right triangle opposite Gamma B."""
        return self._a

    @property
    def vertices(self):
        """Get the four vertices in the order Gamma, B, Gamma2, Gamma1."""
        return (self._gamma_pt, self._b, self._gamma2, self._gamma1)

    def vertex(self, name):
        """Get a vertex by its name (Gamma, B, Gamma2 or Gamma1)."""
        try:
            return self.vertices[VERTEX_ORDER.index(name)]
        except ValueError:
            raise ValueError('Vertex "{}" is not one of {}.'.format(name, VERTEX_ORDER))

    @property
    def side_gamma_b(self):
        """Get the side |Gamma B| = alpha."""
        return self._alpha

    @property
    def side_b_gamma2(self):
        """Get the side |B Gamma2| = alpha."""
        return self._alpha

    @property
    def side_gamma2_gamma1(self):
        """Get the side |Gamma2 Gamma1| = sqrt(alpha^2 + (beta + gamma)^2), a diameter."""
        return self._diameter

    @property
    def side_gamma_gamma1(self):
        """Get the side x = |Gamma Gamma1| = (beta/gamma) * |Gamma2 Gamma1|."""
        return self._diameter * (self._beta / self._gamma)

    @property
    def diag_b_gamma1(self):
        """Get the diagonal |B Gamma1| = beta + gamma."""
        return self._beta + self._gamma

    @property
    def diag_gamma_gamma2(self):
        """Get the diagonal y = |Gamma Gamma2| = (alpha/gamma) * |Gamma2 Gamma1|."""
        return self._diameter * (self._alpha / self._gamma)

    @property
    def tan_b(self):
        """Get the tangent of the angle Gamma-B-Gamma2, equal to -alpha/beta."""
        return -self._alpha / self._beta

    @property
    def tan_gamma(self):
        """Get the tangent of the angle B-Gamma-Gamma1, equal to alpha/(beta - gamma)."""
        return self._alpha / (self._beta - self._gamma)

    @property
    def tan_gamma1(self):
        """Get the tangent of the angle Gamma-Gamma1-Gamma2, equal to alpha/beta."""
        return self._alpha / self._beta

    @property
    def tan_gamma2(self):
        """Get the tangent of the angle Gamma1-Gamma2-B, equal to (beta + gamma)/alpha."""
        return (self._beta + self._gamma) / self._alpha

    @property
    def tangents(self):
        """Get the four angle tangents ordered as (B, Gamma, Gamma1, Gamma2)."""
        return (self.tan_b, self.tan_gamma, self.tan_gamma1, self.tan_gamma2)

    @property
    def tan_theta(self):
        """Get tan(theta) = alpha/(beta + gamma)."""
        return self._alpha / (self._beta + self._gamma)

    @property
    def theta_degrees(self):
        """Get theta in degrees."""
        return math.degrees(math.atan(float(self.tan_theta)))

    @property
    def circumcenter(self):
        """Get the circumcenter, the midpoint of the diameter Gamma1-Gamma2."""
        return Point2((self._beta + self._gamma) / 2, -self._alpha / 2)

    @property
    def radius_squared(self):
        """Get the squared circumradius (alpha^2 + (beta + gamma)^2) / 4."""
        return self._diameter.square / 4

    @property
    def sin_2omega(self):
        """Get sin(2*omega) = alpha/gamma recovered from the coordinates of Gamma."""
        return self._gamma_pt.x / self._distance_b_gamma()

    @property
    def cos_2omega(self):
        """Get cos(2*omega) = beta/gamma recovered from the coordinates of Gamma."""
        return self._gamma_pt.y / self._distance_b_gamma()

    def _distance_b_gamma(self):
        return rational_root(self._gamma_pt.distance_squared_to(self._b), 2)

    def area_decomposition(self):
        """Get the areas of the three triangles that tile the quadrilateral.

        Returns:
            A tuple with the exact areas of the right triangle Gamma-B-A
            (alpha*beta/2), the isosceles triangle Gamma-A-Gamma1
            (beta^2 * sin(2*omega)/2) and the right triangle B-Gamma1-Gamma2
            (alpha*(beta + gamma)/2).
        """
        al, be, ga = self._alpha, self._beta, self._gamma
        return (al * be / 2, be * be * (al / ga) / 2, al * (be + ga) / 2)

    def to_dict(self):
        """Get QuadConstruction as a dictionary of every derived quantity."""
        def _rat(value):
            return {'value': rational_to_str(value), 'decimal': approx_str(value)}
        tans = dict(zip((B, GAMMA, GAMMA1, GAMMA2), self.tangents))
        return {
            'type': 'QuadConstruction',
            'triple': [rational_to_str(v) for v in self.triple],
            'vertices': {
                GAMMA: self._gamma_pt.to_dict(), B: self._b.to_dict(),
                GAMMA2: self._gamma2.to_dict(), GAMMA1: self._gamma1.to_dict(),
                'A': self._a.to_dict()
            },
            'sides': {
                'GammaB': _rat(self.side_gamma_b),
                'BGamma2': _rat(self.side_b_gamma2),
                'Gamma2Gamma1': self.side_gamma2_gamma1.to_dict(),
                'GammaGamma1': self.side_gamma_gamma1.to_dict()
            },
            'diagonals': {
                'BGamma1': _rat(self.diag_b_gamma1),
                'GammaGamma2': self.diag_gamma_gamma2.to_dict()
            },
            'tangents': {name: _rat(val) for name, val in tans.items()},
            'theta': {
                'tan': _rat(self.tan_theta),
                'degrees': round(self.theta_degrees, tolerances.angle_decimals)
            },
            'circumcircle': {
                'center': self.circumcenter.to_dict(),
                'radius_squared': _rat(self.radius_squared)
            },
            'area': _rat(quad_area(self))
        }

    def duplicate(self):
        """Get a copy of this object."""
        return QuadConstruction(self._alpha, self._beta, self._gamma)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'QuadConstruction: ({}, {}, {})'.format(
            *(rational_to_str(v) for v in self.triple))


def construct_quad(alpha, beta, gamma):
    """Construct the cyclic quadrilateral for a positive rational Pythagorean triple."""
    return QuadConstruction(alpha, beta, gamma)


def interior_tangent_from_coords(q, vertex):
    """Get the tangent of an interior angle from the vertex coordinates alone.

    Args:
        q: A QuadConstruction.
        vertex: The vertex name, one of Gamma, B, Gamma2 or Gamma1.

    Returns:
        A Rational, or RIGHT_ANGLE if the interior angle is exactly 90 degrees.
    """
    assert isinstance(q, QuadConstruction), \
        'Expected QuadConstruction. Got {}.'.format(type(q))
    if vertex not in VERTEX_ORDER:
        raise ValueError('Vertex "{}" is not one of {}.'.format(vertex, VERTEX_ORDER))
    i = VERTEX_ORDER.index(vertex)
    pts = q.vertices
    return angle_tangent(pts[i - 1], pts[i], pts[(i + 1) % 4])


def angle_identity_check(q):
    """Measure the three angles phi, omega and theta independently, in degrees.

    * phi is a base angle of the isosceles triangle Gamma-B-Gamma2, measured at
      Gamma2 from the coordinates.
    * omega is half of the angle B-A-Gamma, measured at A from the coordinates.
    * theta is arctan(alpha/(beta + gamma)).

    Returns:
        An AngleIdentity tuple (phi, omega, theta, max_spread).
    """
    assert isinstance(q, QuadConstruction), \
        'Expected QuadConstruction. Got {}.'.format(type(q))
    phi = angle_degrees(q.b, q.gamma2, q.gamma_pt)
    omega = angle_degrees(q.b, q.a, q.gamma_pt) / 2
    theta = q.theta_degrees
    angles = (phi, omega, theta)
    return AngleIdentity(phi, omega, theta, max(angles) - min(angles))


def quad_area(q):
    """Get the exact area of the quadrilateral by the shoelace formula."""
    assert isinstance(q, QuadConstruction), \
        'Expected QuadConstruction. Got {}.'.format(type(q))
    return abs(signed_area(q.vertices))
