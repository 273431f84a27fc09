# coding=utf-8
"""The family F1 of cyclic quadrilaterals with rational sides and diagonals.

A member is generated by positive integers delta, m, n and L with m > n,
gcd(m, n) = 1, m + n odd and m^2 + n^2 = L^2. Its triangle is the even-leg-first
Pythagorean triple (2*delta*m*n, delta*(m^2 - n^2), delta*(m^2 + n^2)).
Since (m, n, L) is itself a primitive triple, it is in turn generated by
(t1, t2) in one of two forms:

* 9a: m = t1^2 - t2^2, n = 2*t1*t2, L = t1^2 + t2^2
* 9b: m = 2*t1*t2, n = t1^2 - t2^2, L = t1^2 + t2^2

Members whose delta is a multiple of L are Heron quadrilaterals, with integer
sides, diagonals and area.
"""
import math
import logging
from collections import namedtuple
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor

from .config import tolerances
from .exactnum import EVEN_LEG_FIRST, ODD_LEG_FIRST, _check_int, check_generator, \
    exact_sqrt, rational_to_str, approx_str
from .geometry import construct_quad

_logger = logging.getLogger(__name__)

T_FORM_A = '9a'
T_FORM_B = '9b'
T_FORMS = (T_FORM_A, T_FORM_B)

TABLE_COLUMNS = ('t1', 't2', 'm', 'n', 'delta', 'BGamma', 'GammaGamma1',
                 'Gamma1Gamma2', 'Gamma2B', 'BGamma1', 'GammaGamma2', 'Area')

ThetaValue = namedtuple('ThetaValue', ('tan', 'degrees'))


def mnl_from_t(t1, t2, form):
    """Get the primitive triple (m, n, L) generated by (t1, t2) in form 9a or 9b.

    Args:
        t1: Positive integer greater than t2, coprime to it, of opposite parity.
        t2: Positive integer.
        form: Either '9a' (m = t1^2 - t2^2) or '9b' (m = 2*t1*t2).

    Returns:
        A tuple (m, n, L) with m > n.
    """
    t1, t2 = check_generator(t1, t2, names=('t1', 't2'))
    if form not in T_FORMS:
        raise ValueError('Form must be one of {}. Got "{}".'.format(T_FORMS, form))
    odd, even, big_l = t1 * t1 - t2 * t2, 2 * t1 * t2, t1 * t1 + t2 * t2
    m, n = (odd, even) if form == T_FORM_A else (even, odd)
    if m <= n:
        other = T_FORM_B if form == T_FORM_A else T_FORM_A
        raise ValueError(
            'Form {} gives m={} <= n={} for (t1, t2) = ({}, {}), which violates '
            'm > n. Use form {} instead.'.format(form, m, n, t1, t2, other))
    return m, n, big_l


def t_pairs(t_max):
    """Yield every (t1, t2) with t1 <= t_max that generates a primitive triple.

    Pairs are ordered by t1 and then t2.
    """
    for t1 in range(2, t_max + 1):
        for t2 in range(1, t1):
            if (t1 + t2) % 2 == 1 and math.gcd(t1, t2) == 1:
                yield t1, t2


def t_generators(t_max):
    """Yield (t1, t2, form, m, n, L) for each valid form of every (t1, t2) pair.

    Exactly one of the two forms gives m > n for each pair. The other is skipped.
    """
    for t1, t2 in t_pairs(t_max):
        for form in T_FORMS:
            try:
                m, n, big_l = mnl_from_t(t1, t2, form)
            except ValueError:
                continue
            yield t1, t2, form, m, n, big_l


class F1Params(object):
    """The generator parameters of a member of family F1.

    Args:
        delta: Positive integer scale.
        m: Positive integer, greater than n.
        n: Positive integer, coprime to m, with m + n odd.
        L: Positive integer with m^2 + n^2 = L^2. If None, it is derived from
            m and n. (Default: None).
        t1: Optional (t1, t2) generator of (m, n, L). (Default: None).
        t2: Optional (t1, t2) generator of (m, n, L). (Default: None).
        t_form: The form ('9a' or '9b') in which t1 and t2 generate (m, n, L).
            (Default: None).

    Properties:
        * delta
        * m
        * n
        * L
        * t1
        * t2
        * t_form
        * k
    """
    __slots__ = ('_delta', '_m', '_n', '_L', '_t1', '_t2', '_t_form')

    def __init__(self, delta, m, n, L=None, t1=None, t2=None, t_form=None):
        self._delta = _check_int(delta, 'delta', 1)
        self._m, self._n = check_generator(m, n)
        big_l = exact_sqrt(self._m ** 2 + self._n ** 2)
        if big_l is None:
            raise ValueError(
                'L is not integral; (m, n) = ({}, {}) does not generate F1 since '
                '{} is not a perfect square.'.format(
                    self._m, self._n, self._m ** 2 + self._n ** 2))
        if L is not None and _check_int(L, 'L', 1) != big_l:
            raise ValueError('m^2 + n^2 must equal L^2. Got {} != {}.'.format(
                self._m ** 2 + self._n ** 2, L * L))
        self._L = big_l
        if (t1, t2, t_form) != (None, None, None):
            if mnl_from_t(t1, t2, t_form) != (self._m, self._n, self._L):
                raise ValueError(
                    '(t1, t2) = ({}, {}) in form {} does not generate (m, n, L) = '
                    '({}, {}, {}).'.format(t1, t2, t_form, self._m, self._n, self._L))
        self._t1, self._t2, self._t_form = t1, t2, t_form

    @classmethod
    def from_t(cls, t1, t2, form, delta):
        """Create F1Params from (t1, t2), their form and a scale delta."""
        m, n, big_l = mnl_from_t(t1, t2, form)
        return cls(delta, m, n, big_l, t1, t2, form)

    @property
    def delta(self):
        """Get the integer scale delta."""
        return self._delta

    @property
    def m(self):
        """Get the generator m."""
        return self._m

    @property
    def n(self):
        """Get the generator n."""
        return self._n

    @property
    def L(self):
        """Get L = sqrt(m^2 + n^2)."""
        return self._L

    @property
    def t1(self):
        """Get t1 if the parameters were generated from (t1, t2)."""
        return self._t1

    @property
    def t2(self):
        """Get t2 if the parameters were generated from (t1, t2)."""
        return self._t2

    @property
    def t_form(self):
        """Get the form ('9a' or '9b') that generated (m, n, L) from (t1, t2)."""
        return self._t_form

    @property
    def k(self):
        """Get k = 2*delta*m*L, the integer length |Gamma2 Gamma1|."""
        return 2 * self._delta * self._m * self._L

    def to_dict(self):
        """Get F1Params as a dictionary."""
        base = {
            'type': 'F1Params',
            'delta': self._delta, 'm': self._m, 'n': self._n, 'L': self._L
        }
        if self._t_form is not None:
            base['t1'], base['t2'], base['t_form'] = self._t1, self._t2, self._t_form
        return base

    def __eq__(self, other):
        return isinstance(other, F1Params) and \
            (self._delta, self._m, self._n) == (other._delta, other._m, other._n)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._delta, self._m, self._n))

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'F1Params: delta={}, m={}, n={}, L={}'.format(
            self._delta, self._m, self._n, self._L)


class F1Member(object):
    """A quadrilateral of family F1 with all of its lengths, tangents and area.

    Args:
        params: The F1Params generating the member.

    Properties:
        * params
        * alpha_beta_gamma
        * side_gamma_b
        * side_b_gamma2
        * side_gamma2_gamma1
        * side_gamma_gamma1
        * diag_b_gamma1
        * diag_gamma_gamma2
        * lengths
        * tangents
        * area
        * area_decomposition
        * area_bracket
        * is_heron
        * is_integral
        * k
    """
    __slots__ = ('_params',)

    def __init__(self, params):
        assert isinstance(params, F1Params), \
            'Expected F1Params. Got {}.'.format(type(params))
        self._params = params

    @property
    def params(self):
        """Get the F1Params of this member."""
        return self._params

    @property
    def alpha_beta_gamma(self):
        """Get the generating triple (2dmn, d(m^2 - n^2), d(m^2 + n^2))."""
        d, m, n = self._params.delta, self._params.m, self._params.n
        return (2 * d * m * n, d * (m * m - n * n), d * (m * m + n * n))

    @property
    def side_gamma_b(self):
        """Get |Gamma B| = 2*delta*m*n."""
        p = self._params
        return 2 * p.delta * p.m * p.n

    @property
    def side_b_gamma2(self):
        """Get |B Gamma2| = 2*delta*m*n."""
        return self.side_gamma_b

    @property
    def side_gamma2_gamma1(self):
        """Get |Gamma2 Gamma1| = 2*delta*m*L."""
        return self._params.k

    @property
    def side_gamma_gamma1(self):
        """Get x = |Gamma Gamma1| = 2*delta*m*(m^2 - n^2)/L as a Rational."""
        p = self._params
        return Fraction(2 * p.delta * p.m * (p.m ** 2 - p.n ** 2), p.L)

    @property
    def diag_b_gamma1(self):
        """Get |B Gamma1| = 2*delta*m^2."""
        p = self._params
        return 2 * p.delta * p.m ** 2

    @property
    def diag_gamma_gamma2(self):
        """Get y = |Gamma Gamma2| = 4*delta*m^2*n/L as a Rational."""
        p = self._params
        return Fraction(4 * p.delta * p.m ** 2 * p.n, p.L)

    @property
    def lengths(self):
        """Get the six lengths in table order.

        (|B Gamma|, |Gamma Gamma1|, |Gamma1 Gamma2|, |Gamma2 B|, |B Gamma1|,
        |Gamma Gamma2|).
        """
        return (self.side_gamma_b, self.side_gamma_gamma1, self.side_gamma2_gamma1,
                self.side_b_gamma2, self.diag_b_gamma1, self.diag_gamma_gamma2)

    @property
    def tangents(self):
        """Get the four angle tangents ordered as (B, Gamma, Gamma1, Gamma2).

        These are 2mn/(n^2 - m^2), -m/n, 2mn/(m^2 - n^2) and m/n. The angles at
        Gamma and Gamma2 are 90 degrees plus omega and 90 degrees minus theta,
        whose tangents are -cot(omega) = -m/n and cot(theta) = m/n.
        """
        m, n = self._params.m, self._params.n
        return (Fraction(2 * m * n, n * n - m * m), Fraction(-m, n),
                Fraction(2 * m * n, m * m - n * n), Fraction(m, n))

    @property
    def area(self):
        """Get the exact area 4*delta^2*m^5*n / L^2."""
        p = self._params
        return Fraction(4 * p.delta ** 2 * p.m ** 5 * p.n, p.L ** 2)

    @property
    def area_decomposition(self):
        """Get the areas of the three tiling triangles as Rationals.

        These are the right triangle Gamma-B-A, the isosceles triangle
        Gamma-A-Gamma1 and the right triangle B-Gamma1-Gamma2.
        """
        d, m, n = self._params.delta, self._params.m, self._params.n
        diff = m * m - n * n
        return (Fraction(d * d * m * n * diff),
                Fraction(d * d * diff ** 2 * m * n, m * m + n * n),
                Fraction(2 * d * d * n * m ** 3))

    @property
    def area_bracket(self):
        """Get the area as delta^2*m*n*[m^2 - n^2 + (m^2 - n^2)^2/(m^2 + n^2) + 2m^2]."""
        d, m, n = self._params.delta, self._params.m, self._params.n
        diff = m * m - n * n
        return d * d * m * n * (diff + Fraction(diff ** 2, m * m + n * n) + 2 * m * m)

    @property
    def is_heron(self):
        """Get a boolean for whether delta is a multiple of L."""
        return self._params.delta % self._params.L == 0

    @property
    def is_integral(self):
        """Get a boolean for whether all six lengths and the area are integers."""
        values = self.lengths + (self.area,)
        return all(Fraction(v).denominator == 1 for v in values)

    @property
    def k(self):
        """Get k = 2*delta*m*L."""
        return self._params.k

    def construction(self):
        """Get the exact QuadConstruction of this member's generating triple."""
        return construct_quad(*self.alpha_beta_gamma)

    def table_row(self):
        """Get the values of this member in the TABLE_COLUMNS order."""
        p = self._params
        return [p.t1, p.t2, p.m, p.n, p.delta] + list(self.lengths) + [self.area]

    def to_dict(self):
        """Get F1Member as a dictionary."""
        def _rat(value):
            return {'value': rational_to_str(value), 'decimal': approx_str(value)}
        names = ('BGamma', 'GammaGamma1', 'Gamma1Gamma2', 'Gamma2B', 'BGamma1',
                 'GammaGamma2')
        theta = theta_of_member(self)
        return {
            'type': 'F1Member',
            'params': self._params.to_dict(),
            'triple': list(self.alpha_beta_gamma),
            'lengths': {name: _rat(val) for name, val in zip(names, self.lengths)},
            'tangents': {name: _rat(val) for name, val in
                         zip(('B', 'Gamma', 'Gamma1', 'Gamma2'), self.tangents)},
            'theta': {'tan': _rat(theta.tan),
                      'degrees': round(theta.degrees, tolerances.angle_decimals)},
            'area': _rat(self.area),
            'k': self.k,
            'is_heron': self.is_heron
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'F1Member: delta={}, m={}, n={}, L={}{}'.format(
            self._params.delta, self._params.m, self._params.n, self._params.L,
            ' (Heron)' if self.is_heron else '')


def _cross_check(member):
    """Check the closed-form lengths of a member against its exact construction."""
    q = member.construction()
    assert q.side_gamma2_gamma1 == member.side_gamma2_gamma1 and \
        q.side_gamma_gamma1 == member.side_gamma_gamma1 and \
        q.diag_gamma_gamma2 == member.diag_gamma_gamma2 and \
        q.diag_b_gamma1 == member.diag_b_gamma1, \
        'Closed-form lengths of {} disagree with its construction.'.format(member)


def f1_member(delta, m, n, leg_form=EVEN_LEG_FIRST, check=True):
    """Get the member of family F1 generated by (delta, m, n).

    Args:
        delta: Positive integer scale.
        m: Positive integer generator, greater than n.
        n: Positive integer generator. m^2 + n^2 must be a perfect square.
        leg_form: The Pythagorean leg form of the triangle. Only the even-leg-first
            form ('5a') generates F1. The odd-leg-first form leads to the
            second family, which is not supported. (Default: '5a').
        check: Boolean to note whether the closed-form lengths should be checked
            against the exact coordinate construction. (Default: True).
    """
    if leg_form == ODD_LEG_FIRST:
        raise NotImplementedError(
            'The odd-leg-first form leads to the second family (m^2 + n^2 = 2L^2), '
            'which is out of scope.')
    assert leg_form == EVEN_LEG_FIRST, \
        'Expected leg form {} or {}. Got {}.'.format(EVEN_LEG_FIRST, ODD_LEG_FIRST,
                                                    leg_form)
    member = F1Member(F1Params(delta, m, n))
    if check:
        _cross_check(member)
    return member


def heron_member(m, n, L, j=1, t1=None, t2=None, t_form=None):
    """Get the Heron member of F1 with delta = j*L.

    Args:
        m: Generator m of a primitive triple (m, n, L).
        n: Generator n of a primitive triple (m, n, L).
        L: Hypotenuse of the primitive triple (m, n, L).
        j: Positive integer multiplier of L. (Default: 1).
        t1: Optional t1 that generated (m, n, L). (Default: None).
        t2: Optional t2 that generated (m, n, L). (Default: None).
        t_form: Optional form of (t1, t2). (Default: None).
    """
    j = _check_int(j, 'j', 1)
    member = F1Member(F1Params(j * L, m, n, L, t1, t2, t_form))
    _cross_check(member)
    return member


def theta_of_member(mem):
    """Get tan(theta) = n/m and theta in degrees for a member of F1."""
    assert isinstance(mem, F1Member), 'Expected F1Member. Got {}.'.format(type(mem))
    tan = Fraction(mem.params.n, mem.params.m)
    return ThetaValue(tan, math.degrees(math.atan2(mem.params.n, mem.params.m)))


def _members_for_pair(args):
    """Get every member generated by one (t1, t2) pair, in canonical order."""
    t1, t2, delta_max, heron_only = args
    members = []
    for form in T_FORMS:
        try:
            m, n, big_l = mnl_from_t(t1, t2, form)
        except ValueError:
            continue
        deltas = range(big_l, delta_max + 1, big_l) if heron_only \
            else range(1, delta_max + 1)
        for delta in deltas:
            members.append(F1Member(F1Params(delta, m, n, big_l, t1, t2, form)))
    return members


def enumerate_f1(t_max, delta_max, heron_only=False, workers=None):
    """Yield the members of F1 with t1 <= t_max and delta <= delta_max.

    Members come out ordered by (t1, t2, form, delta), each exactly once.

    Args:
        t_max: Largest t1, at least 2.
        delta_max: Largest delta, at least 1.
        heron_only: Boolean to note whether only multiples of L should be used
            for delta. (Default: False).
        workers: Number of processes among which the (t1, t2) pairs are split.
            The output order does not depend on it. If None or 1, everything is
            computed in this process. (Default: None).
    """
    t_max = _check_int(t_max, 't_max', 2)
    delta_max = _check_int(delta_max, 'delta_max', 1)
    jobs = [(t1, t2, delta_max, heron_only) for t1, t2 in t_pairs(t_max)]
    _logger.debug('Enumerating F1 over %d (t1, t2) pairs.', len(jobs))
    if workers is None or workers <= 1:
        for job in jobs:
            for member in _members_for_pair(job):
                yield member
        return
    with ProcessPoolExecutor(max_workers=workers) as executor:
        # map keeps the submission order, so the merge is deterministic
        for members in executor.map(_members_for_pair, jobs):
            for member in members:
                yield member


def heron_table(t_max, multiples=1):
    """Get the Heron members with delta = j*L for every (t1, t2) with t1 <= t_max.

    Args:
        t_max: Largest t1, at least 2.
        multiples: The largest multiplier j of L. (Default: 1).

    Returns:
        A list of F1Member ordered by (t1, t2, form, j).
    """
    t_max = _check_int(t_max, 't_max', 2)
    multiples = _check_int(multiples, 'multiples', 1)
    rows = []
    for t1, t2, form, m, n, big_l in t_generators(t_max):
        for j in range(1, multiples + 1):
            rows.append(heron_member(m, n, big_l, j, t1, t2, form))
    return rows


def coprimality_certificate(m, n, L):
    """Get (gcd(L, 2m(m^2 - n^2)), gcd(L, 4nm^2)), asserting that both are 1.

    The two gcds being 1 is why x and y are integers exactly when L divides
    delta. A value other than 1 raises an AssertionError.
    """
    m, n = check_generator(m, n)
    L = _check_int(L, 'L', 1)
    if m * m + n * n != L * L:
        raise ValueError('m^2 + n^2 must equal L^2. Got {} != {}.'.format(
            m * m + n * n, L * L))
    certificate = (math.gcd(L, 2 * m * (m * m - n * n)), math.gcd(L, 4 * n * m * m))
    assert certificate == (1, 1), \
        'L = {} shares a factor with 2m(m^2 - n^2) or 4nm^2: gcds {}.'.format(
            L, certificate)
    return certificate
