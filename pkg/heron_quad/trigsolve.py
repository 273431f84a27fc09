# coding=utf-8
"""Solution sets of the equation alpha*sin(x) + beta*cos(x) = gamma.

The equation is reduced to the quadratic in t = tan(x/2)

    (beta + gamma)*t^2 - 2*alpha*t + (gamma - beta) = 0

which is valid away from x = 2k*pi + pi. Those odd multiples of pi are tested
separately. They solve the equation exactly when beta + gamma = 0.
"""
import math
import numbers
from fractions import Fraction

from .config import tolerances
from .exactnum import Surd, parse_rational, rational_root, rational_to_str, \
    approx_str

ALL_REALS = 'AllReals'
EMPTY = 'Empty'
FAMILIES = 'Families'

ODD_PI_FAMILY = 'OddPiFamily'
DOUBLE_ANGLE_FAMILY = 'DoubleAngleFamily'


def number_to_str(value):
    """Serialize an exact value as "p/q" and a float with repr."""
    if isinstance(value, Fraction):
        return rational_to_str(value)
    return repr(float(value))


def parse_coefficient(text):
    """Parse one equation coefficient from text.

    Integers and "p/q" literals become exact Rationals. Decimal or scientific
    literals become floats.
    """
    text = str(text).strip()
    if any(ch in text for ch in '.eE') or text.lower() in ('inf', '-inf', 'nan'):
        try:
            value = float(text)
        except ValueError:
            raise ValueError('"{}" is not a valid number.'.format(text))
        if math.isinf(value) or math.isnan(value):
            raise ValueError('Coefficients must be finite. Got "{}".'.format(text))
        return value
    return parse_rational(text)


class EquationCoeffs(object):
    """The coefficients of alpha*sin(x) + beta*cos(x) = gamma.

    When all three coefficients are rational the classification is exact.
    If any coefficient is a float, all three are converted to floats.

    Args:
        alpha: Coefficient of sin(x).
        beta: Coefficient of cos(x).
        gamma: Right hand side.

    Properties:
        * alpha
        * beta
        * gamma
        * is_exact
    """
    __slots__ = ('_alpha', '_beta', '_gamma', '_is_exact')

    def __init__(self, alpha, beta, gamma):
        values = (alpha, beta, gamma)
        for val in values:
            assert isinstance(val, numbers.Real) and not isinstance(val, bool), \
                'Expected real number for equation coefficient. Got {}.'.format(
                    type(val))
        self._is_exact = all(isinstance(val, numbers.Rational) for val in values)
        if self._is_exact:
            values = tuple(Fraction(val) for val in values)
        else:
            values = tuple(float(val) for val in values)
            for val in values:
                if math.isinf(val) or math.isnan(val):
                    raise ValueError(
                        'Coefficients must be finite. Got {}.'.format(val))
        self._alpha, self._beta, self._gamma = values

    @classmethod
    def from_literals(cls, alpha, beta, gamma):
        """Create EquationCoeffs from three text literals."""
        return cls(*(parse_coefficient(val) for val in (alpha, beta, gamma)))

    @classmethod
    def from_dict(cls, data):
        """Create EquationCoeffs from a dictionary.

        Args:
            data: A dictionary in the format below.

        .. code-block:: python

            {
            "type": "EquationCoeffs",
            "alpha": "3",
            "beta": "4",
            "gamma": "5"
            }
        """
        assert data['type'] == 'EquationCoeffs', \
            'Expected EquationCoeffs dictionary. Got {}.'.format(data['type'])
        return cls.from_literals(data['alpha'], data['beta'], data['gamma'])

    @property
    def alpha(self):
        """Get the coefficient of sin(x)."""
        return self._alpha

    @property
    def beta(self):
        """Get the coefficient of cos(x)."""
        return self._beta

    @property
    def gamma(self):
        """Get the right hand side of the equation."""
        return self._gamma

    @property
    def is_exact(self):
        """Get a boolean noting whether all three coefficients are Rationals."""
        return self._is_exact

    def to_dict(self):
        """Get EquationCoeffs as a dictionary."""
        return {
            'type': 'EquationCoeffs',
            'alpha': number_to_str(self._alpha),
            'beta': number_to_str(self._beta),
            'gamma': number_to_str(self._gamma),
            'exact': self._is_exact
        }

    def __iter__(self):
        return iter((self._alpha, self._beta, self._gamma))

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'EquationCoeffs: {}*sin(x) + {}*cos(x) = {}'.format(
            number_to_str(self._alpha), number_to_str(self._beta),
            number_to_str(self._gamma))


class HalfAngleQuadratic(object):
    """The quadratic c2*t^2 + c1*t + c0 in t = tan(x/2) equivalent to the equation.

    Args:
        c2: beta + gamma.
        c1: -2 * alpha.
        c0: gamma - beta.

    Properties:
        * c2
        * c1
        * c0
        * discriminant
    """
    __slots__ = ('_c2', '_c1', '_c0')

    def __init__(self, c2, c1, c0):
        self._c2, self._c1, self._c0 = c2, c1, c0

    @property
    def c2(self):
        """Get the coefficient of t^2 (beta + gamma)."""
        return self._c2

    @property
    def c1(self):
        """Get the coefficient of t (-2*alpha)."""
        return self._c1

    @property
    def c0(self):
        """Get the constant term (gamma - beta)."""
        return self._c0

    @property
    def discriminant(self):
        """Get c1^2 - 4*c2*c0, which equals 4*(alpha^2 + beta^2 - gamma^2)."""
        return self._c1 * self._c1 - 4 * self._c2 * self._c0

    def __call__(self, t):
        return (self._c2 * t + self._c1) * t + self._c0

    def to_dict(self):
        """Get HalfAngleQuadratic as a dictionary."""
        return {
            'type': 'HalfAngleQuadratic',
            'c2': number_to_str(self._c2),
            'c1': number_to_str(self._c1),
            'c0': number_to_str(self._c0),
            'discriminant': number_to_str(self.discriminant)
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'HalfAngleQuadratic: ({})t^2 + ({})t + ({})'.format(
            number_to_str(self._c2), number_to_str(self._c1),
            number_to_str(self._c0))


def half_angle_quadratic(c):
    """Get the half-angle quadratic of a set of EquationCoeffs."""
    assert isinstance(c, EquationCoeffs), \
        'Expected EquationCoeffs. Got {}.'.format(type(c))
    return HalfAngleQuadratic(c.beta + c.gamma, -2 * c.alpha, c.gamma - c.beta)


class BaseAngle(object):
    """The base angle of one solution family {2k*pi + base, k in Z}.

    Args:
        base: The base angle in radians within (-pi, pi].
        tan_half: The tangent of base/2. This is a Rational when it is known
            exactly, a float otherwise, and None for the odd-pi family.
        provenance: Either ODD_PI_FAMILY or DOUBLE_ANGLE_FAMILY.
        tan_half_radical: Optional exact description of an irrational tan_half
            as a tuple (rational part, Surd part). (Default: None).

    Properties:
        * base
        * degrees
        * tan_half
        * provenance
        * tan_half_radical
        * is_exact
    """
    __slots__ = ('_base', '_tan_half', '_provenance', '_tan_half_radical')

    def __init__(self, base, tan_half, provenance, tan_half_radical=None):
        assert provenance in (ODD_PI_FAMILY, DOUBLE_ANGLE_FAMILY), \
            'Expected family provenance. Got {}.'.format(provenance)
        self._base = float(base)
        self._tan_half = tan_half
        self._provenance = provenance
        self._tan_half_radical = tan_half_radical

    @property
    def base(self):
        """Get the base angle in radians."""
        return self._base

    @property
    def degrees(self):
        """Get the base angle in degrees."""
        return math.degrees(self._base)

    @property
    def tan_half(self):
        """Get the tangent of half the base angle (None for the odd-pi family)."""
        return self._tan_half

    @property
    def provenance(self):
        """Get the family provenance (OddPiFamily or DoubleAngleFamily)."""
        return self._provenance

    @property
    def tan_half_radical(self):
        """Get an exact (Rational, Surd) pair summing to tan_half, if irrational."""
        return self._tan_half_radical

    @property
    def is_exact(self):
        """Get a boolean noting whether tan_half is known as an exact Rational."""
        return isinstance(self._tan_half, Fraction)

    def solutions(self, k_min, k_max):
        """Get the members 2k*pi + base of this family for k_min <= k <= k_max."""
        return [2 * k * math.pi + self._base for k in range(k_min, k_max + 1)]

    def to_dict(self):
        """Get BaseAngle as a dictionary."""
        base = {
            'type': 'BaseAngle',
            'provenance': self._provenance,
            'base_radians': self._base,
            'base_degrees': round(self.degrees, tolerances.angle_decimals),
            'tan_half': None,
            'tan_half_exact': self.is_exact
        }
        if self._tan_half is not None:
            base['tan_half'] = number_to_str(self._tan_half)
            base['tan_half_decimal'] = approx_str(self._tan_half)
        if self._tan_half_radical is not None:
            rat, surd = self._tan_half_radical
            base['tan_half_radical'] = {
                'rational': rational_to_str(rat), 'surd': surd.to_dict()}
        return base

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'BaseAngle: {} ({:.8f} deg)'.format(self._provenance, self.degrees)


class SolutionSet(object):
    """All real solutions of alpha*sin(x) + beta*cos(x) = gamma.

    Args:
        coeffs: The EquationCoeffs that were classified.
        kind: One of ALL_REALS, EMPTY or FAMILIES.
        families: A list of BaseAngle objects (only for FAMILIES). (Default: None).
        discriminant_sign: The sign (-1, 0 or 1) of alpha^2 + beta^2 - gamma^2,
            or None when beta + gamma = 0. (Default: None).

    Properties:
        * coeffs
        * kind
        * families
        * discriminant_sign
        * triangle_kind
        * is_pythagorean
    """
    __slots__ = ('_coeffs', '_kind', '_families', '_discriminant_sign')

    def __init__(self, coeffs, kind, families=None, discriminant_sign=None):
        assert kind in (ALL_REALS, EMPTY, FAMILIES), \
            'Expected solution set kind. Got {}.'.format(kind)
        families = tuple(families or ())
        if kind == FAMILIES:
            assert 1 <= len(families) <= 2, \
                'Expected one or two solution families. Got {}.'.format(len(families))
        else:
            assert len(families) == 0, \
                '{} solution sets have no families.'.format(kind)
        self._coeffs = coeffs
        self._kind = kind
        self._families = families
        self._discriminant_sign = discriminant_sign

    @property
    def coeffs(self):
        """Get the EquationCoeffs that were classified."""
        return self._coeffs

    @property
    def kind(self):
        """Get the kind of solution set (AllReals, Empty or Families)."""
        return self._kind

    @property
    def families(self):
        """Get a tuple of BaseAngle objects, one per solution family."""
        return self._families

    @property
    def discriminant_sign(self):
        """Get the sign of alpha^2 + beta^2 - gamma^2, or None if beta + gamma = 0."""
        return self._discriminant_sign

    @property
    def triangle_kind(self):
        """Get the triangle reading of positive coefficients.

        When alpha, beta and gamma are all positive they can be the sides of
        a triangle. The triangle's angle opposite gamma is obtuse, right or acute
        as the discriminant is negative, zero or positive. Other coefficients
        give None.
        """
        if self._discriminant_sign is None or not all(v > 0 for v in self._coeffs):
            return None
        return {-1: 'obtuse', 0: 'right', 1: 'acute'}[self._discriminant_sign]

    @property
    def is_pythagorean(self):
        """Get a boolean for positive coefficients with alpha^2 + beta^2 = gamma^2.

        Only these equations have a single family generated by the angle
        theta of the cyclic quadrilateral construction.
        """
        return self.triangle_kind == 'right'

    def to_dict(self):
        """Get SolutionSet as a dictionary."""
        return {
            'type': 'SolutionSet',
            'kind': self._kind,
            'families': [fam.to_dict() for fam in self._families],
            'triangle': self.triangle_kind
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'SolutionSet: {} ({} families)'.format(self._kind, len(self._families))


def _is_zero(value, scale, exact, zero_tolerance, floor=1.0):
    """Test a value for zero, exactly or relative to max(scale, floor) for floats.

    With a floor of 0 the test is purely relative and a zero scale only admits
    an exact zero.
    """
    if exact:
        return value == 0
    return abs(value) <= zero_tolerance * max(scale, floor)


def _canonical(angle):
    """Move an angle in [-pi, pi] into (-pi, pi]."""
    return angle + 2 * math.pi if angle <= -math.pi else angle


def _double_angle(tan_half, tan_half_radical=None):
    """Build the DoubleAngleFamily whose half base angle has a given tangent."""
    base = _canonical(2 * math.atan(float(tan_half)))
    return BaseAngle(base, tan_half, DOUBLE_ANGLE_FAMILY, tan_half_radical)


def _odd_pi():
    return BaseAngle(math.pi, None, ODD_PI_FAMILY)


def _two_roots(alpha, beta, gamma, exact):
    """Get the two roots r1, r2 of the half-angle quadratic when D > 0.

    r_j = (alpha + (-1)^(j+1) * sqrt(alpha^2 + beta^2 - gamma^2)) / (beta + gamma).
    The float values come from the stable form that uses the product of the roots,
    r1 * r2 = (gamma - beta) / (beta + gamma).

    Returns:
        A list of two (tan_half, tan_half_radical) tuples ordered as (r1, r2).
    """
    s = beta + gamma
    quarter_d = alpha * alpha + beta * beta - gamma * gamma
    if exact:
        root = rational_root(quarter_d, 2)
        if root is not None:
            return [((alpha + root) / s, None), ((alpha - root) / s, None)]
        surd = Surd.sqrt_of(quarter_d) / s
        radicals = [(alpha / s, surd), (alpha / s, -surd)]
        sq = math.sqrt(float(quarter_d))
        alpha, beta, gamma, s = float(alpha), float(beta), float(gamma), float(s)
    else:
        radicals = [None, None]
        sq = math.sqrt(quarter_d)
    if alpha >= 0:
        big = alpha + sq
        r1, r2 = big / s, (gamma - beta) / big
    else:
        big = alpha - sq
        r1, r2 = (gamma - beta) / big, big / s
    return [(r1, radicals[0]), (r2, radicals[1])]


def classify(c, zero_tolerance=None):
    """Classify the full real solution set of an equation.

    Args:
        c: EquationCoeffs to be classified.
        zero_tolerance: Relative tolerance for deciding beta + gamma = 0 and the
            sign of the discriminant on float coefficients. If None, the
            configured zero_tolerance is used. Exact coefficients ignore
            it. (Default: None).

    Returns:
        A SolutionSet.
    """
    assert isinstance(c, EquationCoeffs), \
        'Expected EquationCoeffs. Got {}.'.format(type(c))
    if zero_tolerance is None:
        zero_tolerance = tolerances.zero_tolerance
    exact = c.is_exact
    alpha, beta, gamma = c.alpha, c.beta, c.gamma
    scale = max(abs(alpha), abs(beta), abs(gamma))

    # x = 2k*pi + pi solves the equation only when beta + gamma = 0
    if _is_zero(beta + gamma, max(abs(beta), abs(gamma)), exact, zero_tolerance):
        alpha_zero = _is_zero(alpha, scale, exact, zero_tolerance, 0)
        if alpha_zero and _is_zero(beta, scale, exact, zero_tolerance, 0):
            return SolutionSet(c, ALL_REALS)
        if alpha_zero:
            return SolutionSet(c, FAMILIES, [_odd_pi()])
        tan_phi = -beta / alpha
        return SolutionSet(c, FAMILIES, [_odd_pi(), _double_angle(tan_phi)])

    quarter_d = alpha * alpha + beta * beta - gamma * gamma
    if _is_zero(quarter_d, scale * scale, exact, zero_tolerance, 0):
        tan_theta = alpha / (beta + gamma)
        return SolutionSet(c, FAMILIES, [_double_angle(tan_theta)], 0)
    if quarter_d < 0:
        return SolutionSet(c, EMPTY, discriminant_sign=-1)
    families = [_double_angle(r, rad) for r, rad in _two_roots(alpha, beta, gamma, exact)]
    return SolutionSet(c, FAMILIES, families, 1)


def enumerate_solutions(s, k_min, k_max, merge_tolerance=None):
    """Get every solution 2k*pi + base with k_min <= k <= k_max, sorted ascending.

    Args:
        s: A SolutionSet.
        k_min: The smallest integer k.
        k_max: The largest integer k.
        merge_tolerance: Solutions closer than this are merged into one. If None,
            the configured merge_tolerance is used. (Default: None).
    """
    assert isinstance(s, SolutionSet), \
        'Expected SolutionSet. Got {}.'.format(type(s))
    if k_min > k_max:
        raise ValueError('k_min must not exceed k_max. Got {} > {}.'.format(
            k_min, k_max))
    if s.kind == ALL_REALS:
        raise ValueError(
            'The solution set is all real numbers, which is uncountable.')
    if merge_tolerance is None:
        merge_tolerance = tolerances.merge_tolerance
    values = sorted(x for fam in s.families for x in fam.solutions(k_min, k_max))
    merged = []
    for x in values:
        if merged and x - merged[-1] <= merge_tolerance:
            continue
        merged.append(x)
    return merged


def residual(c, x):
    """Get alpha*sin(x) + beta*cos(x) - gamma as a float."""
    return float(c.alpha) * math.sin(x) + float(c.beta) * math.cos(x) - float(c.gamma)
