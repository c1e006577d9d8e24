from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from regobj.errors import BadSpec, NoInverse
from regobj.exact import QQ, ZZ, Fp, Scalar, Zn, enumerate_ring, invert, is_prime, parse_ring, xgcd


def test_invert_examples():
    assert invert(Scalar(Zn(7), 3)).value == 5
    for ring in (Zn(4), Fp(5), QQ, ZZ):
        assert invert(Scalar(ring, 1)).value == 1
    with pytest.raises(NoInverse):
        invert(Scalar(Zn(4), 2))


def test_enumerate_ring():
    assert [x.value for x in enumerate_ring(Fp(2))] == [0, 1]
    assert [x.value for x in enumerate_ring(Zn(4))] == [0, 1, 2, 3]
    assert not enumerate_ring(QQ)
    assert not enumerate_ring(ZZ)


def test_descriptors_round_trip():
    for text in ("Z", "Q", "Zn:6", "Fp:7"):
        assert str(parse_ring(text)) == text
    for bad in ("Fp:4", "Zn:0", "R", "Fp:x"):
        with pytest.raises(BadSpec):
            parse_ring(bad)


def test_rational_normalization():
    assert Scalar(QQ, Fraction(2, 4)).value == Fraction(1, 2)
    assert Scalar(Zn(6), -1).value == 5


@given(st.integers(2, 60), st.integers(-500, 500))
def test_invert_is_involution(n, a):
    x = Scalar(Zn(n), a)
    try:
        y = invert(x)
    except NoInverse:
        # brute force: really no inverse
        assert all((a * b) % n != 1 for b in range(n))
        return
    assert (x * y).value == 1 % n
    assert invert(y) == x


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd_bezout(a, b):
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


def test_is_prime_matches_sieve():
    sieve = [n for n in range(2, 200) if all(n % d for d in range(2, n))]
    assert [n for n in range(200) if is_prime(n)] == sieve
