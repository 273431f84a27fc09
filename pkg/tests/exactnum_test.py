"""Test the exact arithmetic and number theory of heron_quad.exactnum."""
import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from heron_quad.exactnum import Rational, Surd, gcd, exact_sqrt, integer_root, \
    rational_root, divides_via_power, squarefree_decompose, parse_rational, \
    rational_to_str, surd_normalize, surd_mul, surd_add_same_radicand, \
    surd_eq, PythTriple, primitive_triple, scale_triple, classify_triple, \
    check_generator, EVEN_LEG_FIRST, ODD_LEG_FIRST


def _generators(m_max):
    """Yield every (m, n) with m <= m_max that generates a primitive triple."""
    for m in range(2, m_max + 1):
        for n in range(1, m):
            if (m + n) % 2 == 1 and math.gcd(m, n) == 1:
                yield m, n


def test_gcd():
    """Test gcd on small, unit and zero arguments."""
    assert gcd(12, 18) == 6
    assert gcd(7, 1) == 1
    assert gcd(2 * 10 ** 9 + 7, 0) == 2 * 10 ** 9 + 7
    assert gcd(0, 0) == 0
    with pytest.raises(ValueError):
        gcd(-4, 2)


def test_exact_sqrt():
    """Test exact_sqrt on perfect and non-perfect squares."""
    assert exact_sqrt(25) == 5
    assert exact_sqrt(90) is None
    assert exact_sqrt(1) == 1
    assert exact_sqrt(4056 ** 2) == 4056
    with pytest.raises(ValueError):
        exact_sqrt(0)


def test_exact_sqrt_sampled():
    """Test exact_sqrt(k^2) = k and exact_sqrt(k^2 + 1) is None on sampled k."""
    rng = random.Random(1729)
    for k in [1, 2, 10 ** 6] + [rng.randint(1, 10 ** 6) for _ in range(10000)]:
        assert exact_sqrt(k * k) == k
        assert exact_sqrt(k * k + 1) is None


def test_exact_sqrt_big_integer():
    """Test that exact_sqrt stays exact far beyond float precision."""
    big = 3 ** 200 + 1
    assert exact_sqrt(big * big) == big
    assert exact_sqrt(big * big - 1) is None


def test_integer_root():
    """Test the floor nth root and its exactness flag."""
    assert integer_root(27, 3) == (3, True)
    assert integer_root(28, 3) == (3, False)
    assert integer_root(26, 3) == (2, False)
    assert integer_root(2 ** 100, 5) == (2 ** 20, True)
    assert integer_root(0, 4) == (0, True)
    assert integer_root(17, 1) == (17, True)
    for c in range(1, 2000):
        for n in (2, 3, 4):
            r, exact = integer_root(c, n)
            assert r ** n <= c < (r + 1) ** n
            assert exact == (r ** n == c)


def test_rational_root():
    """Test rational roots of reduced fractions."""
    assert rational_root(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert rational_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    assert rational_root(Fraction(-4, 9)) is None
    assert rational_root(Fraction(2, 9)) is None
    assert rational_root(Fraction(18, 8)) == Fraction(3, 2)  # reduces to 9/4
    assert rational_root(0) == 0


def test_divides_via_power():
    """Test divides_via_power on hand cases."""
    assert divides_via_power(2, 6, 2)
    assert not divides_via_power(4, 6, 2)
    delta, m, big_l = 5, 4, 5
    assert divides_via_power(2 * delta * m, 2 * delta * m * big_l, 2)


def test_divides_via_power_brute_force():
    """Test that a^n divides b^n exactly when a divides b for a, b <= 200, n <= 5."""
    for a in range(1, 201):
        for b in range(1, 201):
            divides = b % a == 0
            for n in range(1, 6):
                assert divides_via_power(a, b, n) == divides


def test_squarefree_decompose():
    """Test the squarefree decomposition of small integers."""
    assert squarefree_decompose(90) == (3, 10)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(72) == (6, 2)
    assert squarefree_decompose(13 ** 2 * 17) == (13, 17)
    assert squarefree_decompose(101 * 103) == (1, 101 * 103)
    assert squarefree_decompose(1009 ** 2) == (1009, 1)


def test_squarefree_decompose_against_sympy():
    """Test the squarefree decomposition against the prime factorization of sympy."""
    rng = random.Random(42)
    for c in list(range(1, 500)) + [rng.randint(1, 10 ** 9) for _ in range(300)]:
        outer, radicand = 1, 1
        for prime, exponent in sympy.factorint(c).items():
            outer *= prime ** (exponent // 2)
            radicand *= prime ** (exponent % 2)
        assert squarefree_decompose(c) == (outer, radicand)


def test_surd_normalize():
    """Test that surds are normalized to a squarefree radicand."""
    s = surd_normalize(1, 90)
    assert (s.coefficient, s.radicand) == (3, 10)
    s = surd_normalize(Fraction(4, 5), 90)
    assert (s.coefficient, s.radicand) == (Fraction(12, 5), 10)
    s = surd_normalize(7, 1)
    assert (s.coefficient, s.radicand) == (7, 1)
    assert s.is_rational and s.is_integer
    zero = surd_normalize(0, 10)
    assert (zero.coefficient, zero.radicand) == (0, 1)


def test_surd_sqrt_of():
    """Test Surd.sqrt_of on rationals."""
    assert Surd.sqrt_of(90) == Surd(3, 10)
    assert Surd.sqrt_of(Fraction(4, 9)) == Fraction(2, 3)
    s = Surd.sqrt_of(Fraction(2, 3))
    assert (s.coefficient, s.radicand) == (Fraction(1, 3), 6)
    assert Surd.sqrt_of(0) == 0
    with pytest.raises(ValueError):
        Surd.sqrt_of(-1)


def test_surd_sqrt_of_perfect_square():
    """Test that squares of large rationals normalize without factoring."""
    root = (10 ** 9 + 7) * (10 ** 9 + 9)
    s = Surd.sqrt_of(Fraction(root * root, 49))
    assert s.coefficient == Fraction(root, 7)
    assert s.radicand == 1
    assert Surd(3, root * root) == Surd(3 * root)


def test_surd_sqrt_of_against_sympy():
    """Test Surd.sqrt_of against sympy on random fractions."""
    rng = random.Random(11)
    for _ in range(300):
        p, q = rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6)
        s = Surd.sqrt_of(Fraction(p, q))
        assert s.square == Fraction(p, q)
        assert all(e == 1 for e in sympy.factorint(s.radicand).values())
        assert float(s) == pytest.approx(float(sympy.sqrt(sympy.Rational(p, q))),
                                         rel=1e-12)


def test_surd_arithmetic():
    """Test multiplication, addition and equality of surds."""
    three_root_ten = Surd(3, 10)
    assert surd_mul(three_root_ten, three_root_ten) == 90
    assert surd_mul(three_root_ten, three_root_ten).radicand == 1
    total = surd_add_same_radicand(Surd(Fraction(12, 5), 10), three_root_ten)
    assert total == Surd(Fraction(27, 5), 10)
    assert float(total) == pytest.approx(27 * math.sqrt(10) / 5, rel=1e-12)
    assert surd_eq(three_root_ten, Surd(Fraction(6, 2), 10))
    assert Surd(2, 6) * Surd(1, 3) == Surd(6, 2)
    assert -three_root_ten + three_root_ten == 0
    assert three_root_ten - Surd(1, 10) == Surd(2, 10)
    assert three_root_ten / 3 == Surd(1, 10)
    assert Fraction(1, 3) * three_root_ten == Surd(1, 10)
    with pytest.raises(ValueError):
        surd_add_same_radicand(Surd(1, 2), Surd(1, 3))
    with pytest.raises(ZeroDivisionError):
        three_root_ten / 0


def test_surd_rational_interplay():
    """Test that rational surds compare and hash like rationals."""
    assert Surd(5) == 5
    assert Surd(5) != Surd(5, 2)
    assert hash(Surd(Fraction(3, 2))) == hash(Fraction(3, 2))
    assert Surd(Fraction(3, 2)).to_rational() == Fraction(3, 2)
    with pytest.raises(ValueError):
        Surd(1, 2).to_rational()
    assert Surd(2, 3).square == 12


def test_surd_dict_and_repr():
    """Test the serialization of a Surd."""
    s = Surd(Fraction(12, 5), 10)
    data = s.to_dict()
    assert data['coef'] == '12/5'
    assert data['radicand'] == 10
    assert float(data['decimal']) == pytest.approx(7.589466384, rel=1e-9)
    assert Surd.from_dict(data) == s
    assert repr(s) == '12/5*sqrt(10)'
    assert repr(Surd(7)) == '7'
    assert s.duplicate() == s


@given(st.integers(min_value=1, max_value=10 ** 6),
       st.fractions(min_value=-100, max_value=100, max_denominator=50))
def test_surd_normalization_idempotent(radicand, coefficient):
    """Test that normalizing an already normalized surd changes nothing."""
    s = Surd(coefficient, radicand)
    again = Surd(s.coefficient, s.radicand)
    assert (again.coefficient, again.radicand) == (s.coefficient, s.radicand)
    assert float(s) == pytest.approx(float(coefficient) * math.sqrt(radicand),
                                     rel=1e-9, abs=1e-9)


@given(st.lists(st.tuples(st.integers(1, 40), st.integers(1, 200)),
                min_size=3, max_size=3))
def test_surd_mul_commutative_associative(parts):
    """Test that surd multiplication is commutative and associative."""
    u, v, w = (Surd(c, r) for c, r in parts)
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)


@given(st.fractions(min_value=0, max_value=10 ** 4, max_denominator=10 ** 3))
def test_sqrt_of_square(value):
    """Test that the square root of a squared rational is the rational itself."""
    assert Surd.sqrt_of(value * value) == value
    assert Surd.sqrt_of(value).square == value


def test_parse_rational():
    """Test parsing of integer, fraction and decimal literals."""
    assert parse_rational('3') == 3
    assert parse_rational(' -7/2 ') == Fraction(-7, 2)
    assert parse_rational('0.1') == Fraction(1, 10)
    assert isinstance(parse_rational('5'), Rational)
    with pytest.raises(ValueError):
        parse_rational('abc')
    with pytest.raises(ValueError):
        parse_rational('1/0')
    assert rational_to_str(Fraction(12, 5)) == '12/5'
    assert rational_to_str(Fraction(10, 5)) == '2'


def test_primitive_triple():
    """Test the primitive triples of small generators."""
    assert tuple(primitive_triple(2, 1)) == (4, 3, 5)
    assert tuple(primitive_triple(4, 3)) == (24, 7, 25)
    assert primitive_triple(2, 1).is_primitive
    with pytest.raises(ValueError):
        primitive_triple(3, 3)


def test_check_generator_messages():
    """Test that every violated generator condition has its own message."""
    with pytest.raises(ValueError, match='greater than'):
        check_generator(3, 3)
    with pytest.raises(ValueError, match='coprime'):
        check_generator(6, 3)
    with pytest.raises(ValueError, match='odd'):
        check_generator(5, 3)
    with pytest.raises(AssertionError):
        check_generator(2.0, 1)


def test_primitive_triples_up_to_100():
    """Test a^2 + b^2 = c^2 and gcd(a, b) = 1 for every generator with m <= 100."""
    for m, n in _generators(100):
        a, b, c = primitive_triple(m, n)
        assert a * a + b * b == c * c
        assert math.gcd(a, b) == 1


def test_classify_triple():
    """Test the recovery of generators from triples."""
    t = classify_triple(120, 35, 125)
    assert (t.delta, t.m, t.n, t.leg_form) == (5, 4, 3, EVEN_LEG_FIRST)
    t = classify_triple(3, 4, 5)
    assert (t.delta, t.m, t.n, t.leg_form) == (1, 2, 1, ODD_LEG_FIRST)
    assert tuple(t) == (3, 4, 5)
    with pytest.raises(ValueError):
        classify_triple(1, 1, 2)


def test_classify_inverts_scale():
    """Test that classify_triple undoes scale_triple for delta <= 20 and m <= 50."""
    for m, n in _generators(50):
        base = primitive_triple(m, n)
        for delta in range(1, 21):
            scaled = scale_triple(base, delta)
            assert classify_triple(*scaled) == PythTriple(delta, m, n)


def test_pyth_triple_dict():
    """Test the serialization of a PythTriple."""
    t = PythTriple(5, 4, 3)
    data = t.to_dict()
    assert (data['a'], data['b'], data['c']) == (120, 35, 125)
    assert data['leg_form'] == EVEN_LEG_FIRST
    assert tuple(PythTriple(1, 2, 1, ODD_LEG_FIRST)) == (3, 4, 5)
    assert t.scale(2) == PythTriple(10, 4, 3)
