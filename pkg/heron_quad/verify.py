# coding=utf-8
"""Independent oracles for the constructed quadrilaterals.

Every oracle works from vertex coordinates and exact arithmetic only. Closed
forms appear solely as the expected side of a check, so agreement between the
two is evidence rather than tautology.
"""
import logging
import math
from collections import namedtuple
from fractions import Fraction

from .exactnum import Surd, exact_sqrt, rational_to_str
from .geometry import Point2, QuadConstruction, angle_tangent, angle_identity_check, \
    signed_area
from .family import F1Member, theta_of_member, coprimality_certificate

_logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
ERRATUM = 'erratum'
STATUSES = (PASS, FAIL, ERRATUM)

CONCYCLIC = 'concyclic'
NOT_CONCYCLIC = 'not concyclic'
COLLINEAR = 'collinear'

Check = namedtuple('Check', ('name', 'status', 'expected', 'actual'))

PrintedValue = namedtuple(
    'PrintedValue', ('triple', 'quantity', 'printed', 'location', 'erratum'))

# values printed in the reference worked examples and Heron table. Entries marked
# as errata disagree with the coordinate oracles on purpose.
PRINTED_VALUES = (
    PrintedValue((3, 4, 5), 'side_gamma2_gamma1', Surd(3, 10),
                 'worked example (3, 4, 5)', False),
    PrintedValue((3, 4, 5), 'side_gamma_gamma1', Surd(Fraction(12, 5), 10),
                 'worked example (3, 4, 5)', False),
    PrintedValue((3, 4, 5), 'diag_gamma_gamma2', Surd(Fraction(9, 5), 10),
                 'worked example (3, 4, 5)', False),
    PrintedValue((3, 4, 5), 'tan_gamma', Fraction(-3), 'worked example (3, 4, 5)',
                 False),
    PrintedValue((3, 4, 5), 'tan_gamma2', Fraction(3), 'worked example (3, 4, 5)',
                 False),
    PrintedValue((120, 35, 125), 'side_gamma_gamma1', Fraction(56),
                 'worked example (120, 35, 125)', False),
    PrintedValue((120, 35, 125), 'diag_gamma_gamma2', Fraction(92),
                 'worked example (120, 35, 125)', True),
    PrintedValue((120, 35, 125), 'tan_b', Fraction(-24, 7),
                 'worked example (120, 35, 125)', False),
    PrintedValue((120, 35, 125), 'tan_gamma', Fraction(-8, 3),
                 'worked example (120, 35, 125)', True),
    PrintedValue((120, 35, 125), 'tan_gamma2', Fraction(8, 3),
                 'worked example (120, 35, 125)', True),
    PrintedValue((120, 35, 125), 'area', Fraction(12888),
                 'Heron table row (t1, t2) = (2, 1)', True),
    PrintedValue((1560, 1547, 2197), 'side_gamma_gamma1', Fraction(2856),
                 'Heron table row (t1, t2) = (3, 2)', False),
    PrintedValue((1560, 1547, 2197), 'diag_gamma_gamma2', Fraction(2880),
                 'Heron table row (t1, t2) = (3, 2)', False),
    PrintedValue((1560, 1547, 2197), 'area', Fraction(4 * 12 ** 5 * 5),
                 'Heron table row (t1, t2) = (3, 2)', False),
)


def _value_str(value):
    """Get a stable string for a value recorded in a check."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return rational_to_str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


class VerificationReport(object):
    """A list of named oracle checks run against one verified object.

    Args:
        subject: Text identifying the verified object.

    Properties:
        * subject
        * checks
        * errata
        * notes
        * has_failures
        * passed
    """
    __slots__ = ('_subject', '_checks', '_errata', '_notes')

    def __init__(self, subject):
        self._subject = str(subject)
        self._checks = []
        self._errata = []
        self._notes = []

    @classmethod
    def from_dict(cls, data):
        """Create a VerificationReport from a dictionary."""
        assert data['type'] == 'VerificationReport', \
            'Expected VerificationReport dictionary. Got {}.'.format(data['type'])
        report = cls(data['subject'])
        for chk in data['checks']:
            assert chk['status'] in STATUSES, \
                'Expected check status {}. Got {}.'.format(STATUSES, chk['status'])
            report._checks.append(Check(
                chk['name'], chk['status'], chk['expected'], chk['actual']))
        report._errata.extend(data.get('errata', []))
        report._notes.extend(data.get('notes', []))
        return report

    @property
    def subject(self):
        """Get the text identifying the verified object."""
        return self._subject

    @property
    def checks(self):
        """Get a tuple of Check(name, status, expected, actual)."""
        return tuple(self._checks)

    @property
    def errata(self):
        """Get a tuple of descriptions of the printed values found to be errata."""
        return tuple(self._errata)

    @property
    def notes(self):
        """Get a tuple of informational notes that are neither passes nor failures."""
        return tuple(self._notes)

    @property
    def has_failures(self):
        """Get a boolean for whether any check failed. Errata are not failures."""
        return any(chk.status == FAIL for chk in self._checks)

    @property
    def passed(self):
        """Get a boolean for whether no check failed."""
        return not self.has_failures

    def add_check(self, name, passed, expected, actual):
        """Record the outcome of one oracle check.

        Args:
            name: Name of the check.
            passed: Boolean for whether the oracle agreed with the expectation.
            expected: The expected value.
            actual: The value found by the oracle.
        """
        status = PASS if passed else FAIL
        if not passed:
            _logger.warning('%s: check "%s" failed (expected %s, got %s).',
                            self._subject, name, expected, actual)
        self._checks.append(
            Check(name, status, _value_str(expected), _value_str(actual)))
        return status

    def add_erratum(self, name, printed, actual, description):
        """Record a printed value that the oracle shows to be wrong."""
        _logger.info('%s: printed %s = %s is an erratum; oracle gives %s.',
                     self._subject, name, printed, actual)
        self._checks.append(
            Check(name, ERRATUM, _value_str(printed), _value_str(actual)))
        self._errata.append(description)

    def add_note(self, note):
        """Record an informational note."""
        self._notes.append(str(note))

    def merge(self, other):
        """Append all checks, errata and notes of another report to this one."""
        self._checks.extend(other._checks)
        self._errata.extend(other._errata)
        self._notes.extend(other._notes)

    def to_dict(self):
        """Get VerificationReport as a dictionary."""
        return {
            'type': 'VerificationReport',
            'subject': self._subject,
            'passed': self.passed,
            'checks': [chk._asdict() for chk in self._checks],
            'errata': list(self._errata),
            'notes': list(self._notes)
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        counts = {status: sum(1 for c in self._checks if c.status == status)
                  for status in STATUSES}
        return 'VerificationReport: {} ({} pass, {} fail, {} erratum)'.format(
            self._subject, counts[PASS], counts[FAIL], counts[ERRATUM])


def _det3(m):
    """Get the determinant of a 3x3 matrix given as nested lists."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _orientation(p, q, r):
    """Get the sign of the cross product (q - p) x (r - p)."""
    value = (q - p).cross(r - p)
    return (value > 0) - (value < 0)


def concyclic_status(p1, p2, p3, p4):
    """Classify four points as concyclic, not concyclic, or collinear.

    The exact test is the vanishing of the 4x4 determinant with rows
    (x^2 + y^2, x, y, 1). Subtracting the last row reduces it to a 3x3
    determinant. Points that include three collinear distinct points are
    reported as COLLINEAR since no circle passes through them.

    Raises:
        ValueError: If fewer than three of the points are distinct.
    """
    points = [p1, p2, p3, p4]
    for pt in points:
        assert isinstance(pt, Point2), 'Expected Point2. Got {}.'.format(type(pt))
    distinct = list(dict.fromkeys(points))
    if len(distinct) < 3:
        raise ValueError('Concyclicity needs at least three distinct points. '
                         'Got {}.'.format(len(distinct)))
    count = len(distinct)
    for i in range(count):
        for j in range(i + 1, count):
            for k in range(j + 1, count):
                if _orientation(distinct[i], distinct[j], distinct[k]) == 0:
                    return COLLINEAR
    if count == 3:
        return CONCYCLIC
    base = p4.x * p4.x + p4.y * p4.y
    rows = [[pt.x * pt.x + pt.y * pt.y - base, pt.x - p4.x, pt.y - p4.y]
            for pt in (p1, p2, p3)]
    return CONCYCLIC if _det3(rows) == 0 else NOT_CONCYCLIC


def concyclic(p1, p2, p3, p4):
    """Get a boolean for whether four exact points lie on one circle."""
    return concyclic_status(p1, p2, p3, p4) == CONCYCLIC


def _surd_sum_equals(total, first, second):
    """Test total == first + second for Surds, allowing mismatched radicands."""
    try:
        return total == first + second
    except ValueError:
        # a sum of two surds with different squarefree radicands is not a surd
        return False


def ptolemy_check(q):
    """Test Ptolemy's identity exactly on a quadrilateral.

    For vertices P1, P2, P3, P4 in cyclic order it checks
    |P1P3|*|P2P4| = |P1P2|*|P3P4| + |P2P3|*|P4P1|. Every length is measured from
    the coordinates.

    Args:
        q: A QuadConstruction or a sequence of four Point2 in cyclic order.
    """
    pts = q.vertices if isinstance(q, QuadConstruction) else tuple(q)
    assert len(pts) == 4, 'Expected four vertices. Got {}.'.format(len(pts))
    p1, p2, p3, p4 = pts
    diagonals = p1.distance_to(p3) * p2.distance_to(p4)
    return _surd_sum_equals(diagonals, p1.distance_to(p2) * p3.distance_to(p4),
                            p2.distance_to(p3) * p4.distance_to(p1))


def _segments_intersect(p1, p2, p3, p4):
    """Get a boolean for whether the closed segments p1p2 and p3p4 intersect."""
    d1, d2 = _orientation(p3, p4, p1), _orientation(p3, p4, p2)
    d3, d4 = _orientation(p1, p2, p3), _orientation(p1, p2, p4)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    def _on_segment(a, b, c):
        return min(a.x, b.x) <= c.x <= max(a.x, b.x) and \
            min(a.y, b.y) <= c.y <= max(a.y, b.y)
    return (d1 == 0 and _on_segment(p3, p4, p1)) or \
        (d2 == 0 and _on_segment(p3, p4, p2)) or \
        (d3 == 0 and _on_segment(p1, p2, p3)) or \
        (d4 == 0 and _on_segment(p1, p2, p4))


def shoelace(points):
    """Get the exact absolute area of a simple polygon given in traversal order.

    Raises:
        ValueError: If there are fewer than three points or two non-adjacent
            edges of the polygon intersect.
    """
    points = list(points)
    if len(points) < 3:
        raise ValueError('A polygon needs at least three points. Got {}.'.format(
            len(points)))
    count = len(points)
    edges = [(points[i], points[(i + 1) % count]) for i in range(count)]
    for i in range(count):
        for j in range(i + 2, count):
            if i == 0 and j == count - 1:
                continue  # adjacent through the closing edge
            if _segments_intersect(edges[i][0], edges[i][1], edges[j][0], edges[j][1]):
                raise ValueError(
                    'Polygon is self-intersecting: edge {} crosses edge {}.'.format(i, j))
    return abs(signed_area(points))


def printed_values(triple):
    """Get the PrintedValue entries recorded for a generating triple."""
    key = tuple(Fraction(v) for v in triple)
    return [pv for pv in PRINTED_VALUES if tuple(Fraction(v) for v in pv.triple) == key]


def check_printed(report, name, printed, actual, erratum=False, location=''):
    """Compare a printed reference value with the oracle and record the result.

    Args:
        report: The VerificationReport to which the outcome is added.
        name: Name of the quantity.
        printed: The printed value.
        actual: The oracle value.
        erratum: Boolean for whether the printed value is a known erratum. A
            known erratum that disagrees with the oracle is recorded with the
            erratum status. Any other disagreement is a failure. (Default: False).
        location: Text describing where the value was printed. (Default: '').
    """
    if printed == actual:
        return report.add_check('printed {}'.format(name), not erratum, printed, actual)
    if erratum:
        report.add_erratum(
            'printed {}'.format(name), printed, actual,
            '{}: printed {} = {} disagrees with the oracle value {}.'.format(
                location, name, _value_str(printed), _value_str(actual)))
        return ERRATUM
    return report.add_check('printed {}'.format(name), False, printed, actual)


def _check_against_printed(report, q, measured):
    """Check every printed value registered for the triple of a construction."""
    for pv in printed_values(q.triple):
        check_printed(report, pv.quantity, pv.printed, measured[pv.quantity],
                      pv.erratum, pv.location)


def _measure(q):
    """Measure every quantity of a construction from its coordinates alone."""
    g, b, g2, g1 = q.vertices
    return {
        'side_gamma_b': g.distance_to(b),
        'side_b_gamma2': b.distance_to(g2),
        'side_gamma2_gamma1': g2.distance_to(g1),
        'side_gamma_gamma1': g.distance_to(g1),
        'diag_b_gamma1': b.distance_to(g1),
        'diag_gamma_gamma2': g.distance_to(g2),
        'tan_b': angle_tangent(g, b, g2),
        'tan_gamma': angle_tangent(g1, g, b),
        'tan_gamma1': angle_tangent(g2, g1, g),
        'tan_gamma2': angle_tangent(b, g2, g1),
        'tan_theta': angle_tangent(g2, g1, b),
        'area': shoelace(q.vertices)
    }


def verify_construction(q, angle_tolerance=1e-9):
    """Run every construction-level oracle on a QuadConstruction.

    Args:
        q: A QuadConstruction.
        angle_tolerance: Largest spread in degrees allowed between the three
            float measurements of phi, omega and theta. (Default: 1e-9).

    Returns:
        A VerificationReport.
    """
    assert isinstance(q, QuadConstruction), \
        'Expected QuadConstruction. Got {}.'.format(type(q))
    report = VerificationReport('triple ({}, {}, {})'.format(
        *(rational_to_str(v) for v in q.triple)))
    g, b, g2, g1 = q.vertices
    measured = _measure(q)

    report.add_check('concyclic', concyclic(g, b, g2, g1), CONCYCLIC,
                     concyclic_status(g, b, g2, g1))
    center, r2 = q.circumcenter, q.radius_squared
    for name, pt in zip(('Gamma', 'B', 'Gamma2', 'Gamma1'), q.vertices):
        dist = pt.distance_squared_to(center)
        report.add_check('circumcircle through {}'.format(name), dist == r2, r2, dist)
    right = (g2 - b).dot(g1 - b)
    report.add_check('right angle at B', right == 0, 0, right)
    ptolemy = ptolemy_check(q)
    report.add_check('ptolemy', ptolemy, True, ptolemy)

    closed_forms = {
        'side_gamma_b': q.side_gamma_b, 'side_b_gamma2': q.side_b_gamma2,
        'side_gamma2_gamma1': q.side_gamma2_gamma1,
        'side_gamma_gamma1': q.side_gamma_gamma1,
        'diag_b_gamma1': q.diag_b_gamma1, 'diag_gamma_gamma2': q.diag_gamma_gamma2,
        'tan_b': q.tan_b, 'tan_gamma': q.tan_gamma, 'tan_gamma1': q.tan_gamma1,
        'tan_gamma2': q.tan_gamma2, 'tan_theta': q.tan_theta
    }
    for name, expected in closed_forms.items():
        report.add_check(name, measured[name] == expected, expected, measured[name])

    sum_b = measured['tan_b'] + measured['tan_gamma1']
    sum_g = measured['tan_gamma'] + measured['tan_gamma2']
    report.add_check('opposite tangents B + Gamma1', sum_b == 0, 0, sum_b)
    report.add_check('opposite tangents Gamma + Gamma2', sum_g == 0, 0, sum_g)

    al, be, ga = q.triple
    report.add_check('sin 2omega', q.sin_2omega == al / ga, al / ga, q.sin_2omega)
    report.add_check('cos 2omega', q.cos_2omega == be / ga, be / ga, q.cos_2omega)
    tan_omega = (ga - be) / al
    report.add_check('tan omega', tan_omega == al / (ga + be), al / (ga + be),
                     tan_omega)
    identity = angle_identity_check(q)
    report.add_check('phi = omega = theta', identity.max_spread < angle_tolerance,
                     angle_tolerance, identity.max_spread)

    decomposition = sum(q.area_decomposition(), Fraction(0))
    report.add_check('area decomposition', measured['area'] == decomposition,
                     decomposition, measured['area'])

    _check_against_printed(report, q, measured)
    return report


def verify_member(mem, printed=None):
    """Run every oracle on a member of family F1.

    Args:
        mem: An F1Member.
        printed: Optional dictionary of printed values for this member. Keys
            are quantity names (e.g. 'area'), and values are either a number or a
            tuple (number, is_known_erratum). (Default: None).

    Returns:
        A VerificationReport.
    """
    assert isinstance(mem, F1Member), 'Expected F1Member. Got {}.'.format(type(mem))
    p = mem.params
    report = VerificationReport('F1 member delta={}, m={}, n={}'.format(
        p.delta, p.m, p.n))
    q = mem.construction()
    report.merge(verify_construction(q))
    measured = _measure(q)

    closed_forms = {
        'side_gamma_b': mem.side_gamma_b, 'side_b_gamma2': mem.side_b_gamma2,
        'side_gamma2_gamma1': mem.side_gamma2_gamma1,
        'side_gamma_gamma1': mem.side_gamma_gamma1,
        'diag_b_gamma1': mem.diag_b_gamma1, 'diag_gamma_gamma2': mem.diag_gamma_gamma2
    }
    for name, expected in closed_forms.items():
        report.add_check('F1 {}'.format(name), measured[name] == expected,
                         expected, measured[name])
    for name, expected in zip(('tan_b', 'tan_gamma', 'tan_gamma1', 'tan_gamma2'),
                              mem.tangents):
        report.add_check('F1 {}'.format(name), measured[name] == expected,
                         expected, measured[name])

    area = measured['area']
    report.add_check('F1 area', area == mem.area, mem.area, area)
    report.add_check('F1 area bracket', mem.area_bracket == area, area, mem.area_bracket)
    decomposition = sum(mem.area_decomposition, Fraction(0))
    report.add_check('F1 area decomposition', decomposition == area, area, decomposition)

    theta = theta_of_member(mem)
    report.add_check('F1 tan theta', measured['tan_theta'] == theta.tan, theta.tan,
                     measured['tan_theta'])

    k_measured = measured['side_gamma2_gamma1']
    report.add_check('F1 k', k_measured == mem.k and exact_sqrt(
        mem.alpha_beta_gamma[0] ** 2 + mem.diag_b_gamma1 ** 2) == mem.k, mem.k, k_measured)

    integral = all(isinstance(measured[name], Surd) and measured[name].is_integer
                   for name in closed_forms) and area.denominator == 1
    report.add_check('Heron integrality', integral == mem.is_heron, mem.is_heron,
                     integral)
    try:
        certificate = coprimality_certificate(p.m, p.n, p.L)
    except AssertionError:
        certificate = (math.gcd(p.L, 2 * p.m * (p.m ** 2 - p.n ** 2)),
                       math.gcd(p.L, 4 * p.n * p.m ** 2))
    report.add_check('coprimality certificate', certificate == (1, 1), (1, 1),
                     certificate)

    if not mem.is_heron:
        report.add_note('Not a Heron quadrilateral: x = {} and y = {}.'.format(
            rational_to_str(mem.side_gamma_gamma1),
            rational_to_str(mem.diag_gamma_gamma2)))

    for name, value in (printed or {}).items():
        value, erratum = value if isinstance(value, tuple) else (value, False)
        if name not in measured:
            raise ValueError('Unknown printed quantity "{}". Choose from {}.'.format(
                name, sorted(measured)))
        check_printed(report, name, value, measured[name], erratum,
                      'supplied printed value')
    return report
