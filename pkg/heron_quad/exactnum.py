# coding=utf-8
"""Exact arithmetic and the elementary number theory behind the quadrilaterals.

Rationals are plain ``fractions.Fraction`` objects (aliased here as ``Rational``).
Python integers are arbitrary precision, so nothing in this module can overflow.
"""
import math
import numbers
from fractions import Fraction

from .config import tolerances

Rational = Fraction

EVEN_LEG_FIRST = '5a'
ODD_LEG_FIRST = '5b'
LEG_FORMS = (EVEN_LEG_FIRST, ODD_LEG_FIRST)


def _check_int(value, name, minimum=None):
    """Check that a value is an integer, optionally no smaller than a minimum."""
    assert isinstance(value, numbers.Integral) and not isinstance(value, bool), \
        'Expected integer for {}. Got {}.'.format(name, type(value))
    value = int(value)
    if minimum is not None and value < minimum:
        raise ValueError(
            '{} must be at least {}. Got {}.'.format(name, minimum, value))
    return value


def to_rational(value):
    """Convert an integer, Fraction or exact literal string into a Rational.

    Floats are refused since their binary expansion is rarely what was meant.
    Use parse_rational for decimal text.
    """
    if isinstance(value, bool):
        raise TypeError('Expected rational number. Got {}.'.format(type(value)))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError('Expected rational number. Got {}.'.format(type(value)))


def parse_rational(text):
    """Parse an integer, "p/q" or decimal literal into an exact Rational.

    Decimal literals are converted exactly, so "0.1" becomes 1/10.

    Args:
        text: Text of the number to be parsed.
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError('"{}" is not a valid rational literal.'.format(text))


def rational_to_str(value):
    """Get a "p/q" string for a Rational, or "p" when the denominator is 1."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def approx_str(value, digits=None):
    """Get a decimal approximation of a number at a number of significant digits.

    Args:
        value: Any number that can be converted to float, including Surds.
        digits: Significant digits. If None, the configured decimal_digits
            are used. (Default: None).
    """
    if digits is None:
        digits = tolerances.decimal_digits
    return '{:.{}g}'.format(float(value), digits)


def gcd(a, b):
    """Get the greatest common divisor of two non-negative integers.

    gcd(0, 0) is 0 by convention.
    """
    a = _check_int(a, 'a', 0)
    b = _check_int(b, 'b', 0)
    return math.gcd(a, b)


def integer_root(c, n):
    """Get the floor of the nth root of a non-negative integer.

    This is a generic helper. The package itself only takes square roots, which
    go through math.isqrt. Any other n uses Newton iteration on integers, so it
    is exact for any size of c.

    Returns:
        A tuple (r, is_exact) where r is the floor of the nth root of c and
        is_exact notes whether r ** n == c.
    """
    c = _check_int(c, 'c', 0)
    n = _check_int(n, 'n', 1)
    if n == 1 or c <= 1:
        return c, True
    if n == 2:
        r = math.isqrt(c)
        return r, r * r == c
    # start above the root so the iteration decreases monotonically
    x = 1 << -(-c.bit_length() // n)
    while True:
        y = ((n - 1) * x + c // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x, x ** n == c


def exact_sqrt(c):
    """Get the integer square root of c if c is a perfect square, otherwise None.

    Args:
        c: A positive integer.
    """
    _check_int(c, 'c', 1)
    root, is_exact = integer_root(c, 2)
    return root if is_exact else None


def rational_root(value, n=2):
    """Get the nth root of a Rational if it is the nth power of a Rational.

    Like integer_root, this accepts any n although the package uses n = 2.

    A reduced fraction is an nth power of a rational exactly when its numerator
    and denominator are both nth powers of integers.

    Returns:
        The Rational root, or None if the root is irrational. Odd roots of
        negative numbers are returned negative, even roots of negative numbers
        are None.
    """
    value = to_rational(value)
    n = _check_int(n, 'n', 1)
    sign = 1
    if value < 0:
        if n % 2 == 0:
            return None
        sign, value = -1, -value
    num, num_exact = integer_root(value.numerator, n)
    den, den_exact = integer_root(value.denominator, n)
    if num_exact and den_exact:
        return sign * Fraction(num, den)
    return None


def divides_via_power(a, b, n):
    """Get a boolean for whether a^n is a divisor of b^n.

    For positive integers this agrees with whether a divides b.
    """
    a = _check_int(a, 'a', 1)
    b = _check_int(b, 'b', 1)
    n = _check_int(n, 'n', 1)
    return (b ** n) % (a ** n) == 0


def squarefree_decompose(c):
    """Split a positive integer c into outer^2 * radicand with a squarefree radicand.

    Trial division runs up to the cube root of what remains. The cofactor then
    has at most two prime factors, so it is either a perfect square or
    squarefree.

    Returns:
        A tuple (outer, radicand).
    """
    remaining = _check_int(c, 'c', 1)
    outer, radicand = 1, 1
    p = 2
    while p * p * p <= remaining:
        if remaining % p == 0:
            exponent = 0
            while remaining % p == 0:
                remaining //= p
                exponent += 1
            outer *= p ** (exponent // 2)
            if exponent % 2:
                radicand *= p
        p = 3 if p == 2 else p + 2
    root = exact_sqrt(remaining)
    if root is not None:
        outer *= root
    else:
        radicand *= remaining
    return outer, radicand


class Surd(object):
    """An exact real number of the form coefficient * sqrt(radicand).

    The radicand is always stored squarefree, with every square factor moved into
    the coefficient, and zero is always stored with radicand 1. Each value
    therefore has exactly one representation.

    Args:
        coefficient: A Rational (or integer) multiplying the square root.
        radicand: A positive integer under the square root. (Default: 1).

    Properties:
        * coefficient
        * radicand
        * is_rational
        * is_integer
        * square
    """
    __slots__ = ('_coefficient', '_radicand')

    def __init__(self, coefficient, radicand=1):
        coefficient = to_rational(coefficient)
        radicand = _check_int(radicand, 'radicand', 1)
        root = exact_sqrt(radicand)
        outer, radicand = (root, 1) if root is not None \
            else squarefree_decompose(radicand)
        coefficient *= outer
        self._coefficient = coefficient
        self._radicand = radicand if coefficient != 0 else 1

    @classmethod
    def _from_normalized(cls, coefficient, radicand):
        """Create a Surd from parts that are already known to be normalized."""
        new_surd = cls.__new__(cls)
        new_surd._coefficient = coefficient
        new_surd._radicand = radicand if coefficient != 0 else 1
        return new_surd

    @classmethod
    def sqrt_of(cls, value):
        """Create a Surd for the square root of a non-negative Rational.

        Squares of rationals return a rational Surd with no trial division.
        Otherwise sqrt(p/q) is written as sqrt(p) * sqrt(q) / q so the radicand
        stays an integer, and p and q are reduced separately.
        """
        value = to_rational(value)
        if value < 0:
            raise ValueError(
                'Cannot take the real square root of {}.'.format(value))
        if value == 0:
            return cls._from_normalized(Fraction(0), 1)
        root = rational_root(value, 2)
        if root is not None:
            return cls._from_normalized(root, 1)
        den = value.denominator
        return cls(1, value.numerator) * cls(Fraction(1, den), den)

    @classmethod
    def from_dict(cls, data):
        """Create a Surd from a dictionary.

        Args:
            data: A dictionary in the format below.

        .. code-block:: python

            {
            "type": "Surd",
            "coef": "12/5",
            "radicand": 10
            }
        """
        assert data.get('type', 'Surd') == 'Surd', \
            'Expected Surd dictionary. Got {}.'.format(data.get('type'))
        return cls(parse_rational(data['coef']), int(data['radicand']))

    @property
    def coefficient(self):
        """Get the Rational coefficient in front of the square root."""
        return self._coefficient

    @property
    def radicand(self):
        """Get the squarefree integer under the square root."""
        return self._radicand

    @property
    def is_rational(self):
        """Get a boolean noting whether the value is rational (radicand of 1)."""
        return self._radicand == 1

    @property
    def is_integer(self):
        """Get a boolean noting whether the value is an integer."""
        return self._radicand == 1 and self._coefficient.denominator == 1

    @property
    def square(self):
        """Get the exact Rational square of this value."""
        return self._coefficient ** 2 * self._radicand

    def to_rational(self):
        """Get this value as a Rational, raising a ValueError if it is irrational."""
        if not self.is_rational:
            raise ValueError('{} is not rational.'.format(self))
        return self._coefficient

    def __mul__(self, other):
        if isinstance(other, Surd):
            # both radicands are squarefree, so only their common part squares out
            g = math.gcd(self._radicand, other._radicand)
            return Surd._from_normalized(
                self._coefficient * other._coefficient * g,
                (self._radicand // g) * (other._radicand // g))
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            return Surd._from_normalized(self._coefficient * other, self._radicand)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError('Surd division by zero.')
            return Surd._from_normalized(
                self._coefficient / other, self._radicand)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            other = Surd._from_normalized(to_rational(other), 1)
        if not isinstance(other, Surd):
            return NotImplemented
        if other._coefficient == 0:
            return self
        if self._coefficient == 0:
            return other
        if self._radicand != other._radicand:
            raise ValueError(
                'Cannot add surds with different radicands: {} and {}.'.format(
                    self._radicand, other._radicand))
        return Surd._from_normalized(
            self._coefficient + other._coefficient, self._radicand)

    __radd__ = __add__

    def __neg__(self):
        return Surd._from_normalized(-self._coefficient, self._radicand)

    def __sub__(self, other):
        if isinstance(other, (Surd, numbers.Rational)):
            return self + (-other)
        return NotImplemented

    def __float__(self):
        return float(self._coefficient) * math.sqrt(self._radicand)

    def __eq__(self, other):
        if isinstance(other, Surd):
            return self._coefficient == other._coefficient and \
                self._radicand == other._radicand
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            return self._radicand == 1 and self._coefficient == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._radicand == 1:
            return hash(self._coefficient)
        return hash((self._coefficient, self._radicand))

    def to_dict(self):
        """Get Surd as a dictionary."""
        return {
            'type': 'Surd',
            'coef': rational_to_str(self._coefficient),
            'radicand': self._radicand,
            'decimal': approx_str(self)
        }

    def duplicate(self):
        """Get a copy of this object."""
        return Surd._from_normalized(self._coefficient, self._radicand)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        if self._radicand == 1:
            return rational_to_str(self._coefficient)
        return '{}*sqrt({})'.format(rational_to_str(self._coefficient), self._radicand)


def surd_normalize(coefficient, radicand):
    """Get the normalized Surd equal to coefficient * sqrt(radicand)."""
    return Surd(coefficient, radicand)


def surd_mul(u, v):
    """Multiply two Surds exactly."""
    return u * v


def surd_add_same_radicand(u, v):
    """Add two Surds that share a radicand, raising a ValueError otherwise."""
    return u + v


def surd_eq(u, v):
    """Get a boolean for whether two Surds are equal on their normalized form."""
    return u == v


class PythTriple(object):
    """A Pythagorean triple a^2 + b^2 = c^2 together with its generator.

    The triple is produced by one of the two leg forms. Under EVEN_LEG_FIRST
    it is (2*delta*m*n, delta*(m^2 - n^2), delta*(m^2 + n^2)). Under
    ODD_LEG_FIRST the two legs are swapped.

    Args:
        delta: Positive integer scale of the triple.
        m: Positive integer generator, greater than n.
        n: Positive integer generator, coprime to m and of opposite parity.
        leg_form: Either EVEN_LEG_FIRST ('5a') or ODD_LEG_FIRST ('5b').
            (Default: EVEN_LEG_FIRST).

    Properties:
        * a
        * b
        * c
        * delta
        * m
        * n
        * leg_form
        * is_primitive
    """
    __slots__ = ('_delta', '_m', '_n', '_leg_form')

    def __init__(self, delta, m, n, leg_form=EVEN_LEG_FIRST):
        self._delta = _check_int(delta, 'delta', 1)
        self._m, self._n = check_generator(m, n)
        assert leg_form in LEG_FORMS, \
            'Expected leg form {}. Got {}.'.format(LEG_FORMS, leg_form)
        self._leg_form = leg_form

    @property
    def delta(self):
        """Get the integer scale of the triple."""
        return self._delta

    @property
    def m(self):
        """Get the larger generator."""
        return self._m

    @property
    def n(self):
        """Get the smaller generator."""
        return self._n

    @property
    def leg_form(self):
        """Get the leg form, either '5a' (even leg first) or '5b' (odd leg first)."""
        return self._leg_form

    @property
    def even_leg(self):
        """Get the leg 2*delta*m*n."""
        return 2 * self._delta * self._m * self._n

    @property
    def odd_leg(self):
        """Get the leg delta*(m^2 - n^2)."""
        return self._delta * (self._m ** 2 - self._n ** 2)

    @property
    def a(self):
        """Get the first leg."""
        return self.even_leg if self._leg_form == EVEN_LEG_FIRST else self.odd_leg

    @property
    def b(self):
        """Get the second leg."""
        return self.odd_leg if self._leg_form == EVEN_LEG_FIRST else self.even_leg

    @property
    def c(self):
        """Get the hypotenuse."""
        return self._delta * (self._m ** 2 + self._n ** 2)

    @property
    def is_primitive(self):
        """Get a boolean noting whether gcd(a, b, c) is 1."""
        return self._delta == 1

    def scale(self, delta):
        """Get a copy of this triple with its scale multiplied by an integer."""
        delta = _check_int(delta, 'delta', 1)
        return PythTriple(self._delta * delta, self._m, self._n, self._leg_form)

    def to_dict(self):
        """Get PythTriple as a dictionary."""
        return {
            'type': 'PythTriple',
            'a': self.a, 'b': self.b, 'c': self.c,
            'delta': self._delta, 'm': self._m, 'n': self._n,
            'leg_form': self._leg_form
        }

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __eq__(self, other):
        return isinstance(other, PythTriple) and \
            (self._delta, self._m, self._n, self._leg_form) == \
            (other._delta, other._m, other._n, other._leg_form)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._delta, self._m, self._n, self._leg_form))

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'PythTriple: ({}, {}, {}) [delta={}, m={}, n={}, {}]'.format(
            self.a, self.b, self.c, self._delta, self._m, self._n, self._leg_form)


def check_generator(m, n, names=('m', 'n')):
    """Check that (m, n) generate a primitive Pythagorean triple.

    The conditions are m > n >= 1, gcd(m, n) = 1 and m + n odd. Each violation
    raises a ValueError with its own message.

    Args:
        m: The larger generator.
        n: The smaller generator.
        names: Names used for the two generators in error messages.

    Returns:
        The tuple (m, n) as Python integers.
    """
    m_name, n_name = names
    m = _check_int(m, m_name, 1)
    n = _check_int(n, n_name, 1)
    if m <= n:
        raise ValueError('{} must be greater than {}. Got {}={}, {}={}.'.format(
            m_name, n_name, m_name, m, n_name, n))
    if math.gcd(m, n) != 1:
        raise ValueError('{} and {} must be coprime. Got gcd({}, {}) = {}.'.format(
            m_name, n_name, m, n, math.gcd(m, n)))
    if (m + n) % 2 == 0:
        raise ValueError('{} + {} must be odd. Got {} + {} = {}.'.format(
            m_name, n_name, m, n, m + n))
    return m, n


def primitive_triple(m, n):
    """Get the primitive triple (2mn, m^2 - n^2, m^2 + n^2) with delta = 1."""
    return PythTriple(1, m, n, EVEN_LEG_FIRST)


def scale_triple(triple, delta):
    """Get a triple scaled by a positive integer delta."""
    assert isinstance(triple, PythTriple), \
        'Expected PythTriple. Got {}.'.format(type(triple))
    return triple.scale(delta)


def classify_triple(a, b, c):
    """Recover the generator (delta, m, n, leg_form) of a Pythagorean triple.

    The scale delta is extracted first as gcd(a, b). In the remaining primitive
    triple exactly one leg is even, and that leg takes the 2*m*n slot.

    Args:
        a: First leg as a positive integer.
        b: Second leg as a positive integer.
        c: Hypotenuse as a positive integer.
    """
    a = _check_int(a, 'a', 1)
    b = _check_int(b, 'b', 1)
    c = _check_int(c, 'c', 1)
    if a * a + b * b != c * c:
        raise ValueError('({}, {}, {}) is not a Pythagorean triple: '
                         '{}^2 + {}^2 != {}^2.'.format(a, b, c, a, b, c))
    delta = math.gcd(a, b)
    pa, pb, pc = a // delta, b // delta, c // delta
    if pa % 2 == 0:
        leg_form, odd = EVEN_LEG_FIRST, pb
    else:
        leg_form, odd = ODD_LEG_FIRST, pa
    m = exact_sqrt((pc + odd) // 2)
    n = exact_sqrt((pc - odd) // 2)
    return PythTriple(delta, m, n, leg_form)
