import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exactla.errors import DivisionByZero, FieldMismatch, ParseError
from exactla.field import GF, Field, GFElement, Q, characteristic, from_integer, inv, is_prime


def test_from_integer_examples():
    assert from_integer(Q, 5) == Fraction(5, 1)
    assert from_integer(GF(2), 2) == GFElement(0, 2)
    assert from_integer(GF(7), -3) == GFElement(4, 7)


def test_inverse_examples():
    assert inv(Q, Fraction(2, 3)) == Fraction(3, 2)
    # brute-force scan for 3*b = 1 mod 7
    expected = next(b for b in range(1, 7) if 3 * b % 7 == 1)
    assert expected == 5
    assert inv(GF(7), GFElement(3, 7)) == GFElement(expected, 7)
    with pytest.raises(DivisionByZero):
        inv(GF(2), GFElement(0, 2))
    with pytest.raises(DivisionByZero):
        inv(Q, Fraction(0))


def test_characteristic():
    assert characteristic(Q) == 0
    assert characteristic(GF(2)) == 2
    assert characteristic(GF(101)) == 101


def test_modulus_must_be_prime():
    with pytest.raises(ValueError):
        Field(9)
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_canonical_forms():
    assert Fraction(4, -6) == Fraction(-2, 3)
    assert Fraction(4, -6).denominator == 3
    a = GFElement(-1, 5)
    assert a.value == 4
    assert hash(a) == hash(GFElement(9, 5))


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        GFElement(1, 5) + GFElement(1, 7)


@pytest.mark.parametrize("F", [Q, GF(2), GF(5), GF(101)])
def test_field_axioms_random(F):
    rng = random.Random(7)
    zero, one = F.zero, F.one
    for _ in range(1000):
        a, b, c = (F.random_element(rng, 20) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == zero
        assert a * one == a
        if a:
            assert a * F.inv(a) == one


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6),
       st.sampled_from([Q, GF(2), GF(3), GF(7), GF(101)]))
@settings(max_examples=200)
def test_from_integer_is_ring_hom(j, k, F):
    assert F.from_integer(j + k) == F.from_integer(j) + F.from_integer(k)
    assert F.from_integer(j * k) == F.from_integer(j) * F.from_integer(k)


@given(st.integers(-1000, 1000))
def test_kernel_of_embedding(k):
    assert (Q.from_integer(k) == Q.zero) == (k == 0)
    for p in (2, 3, 7):
        assert GF(p).from_integer(p * k) == GF(p).zero


def test_parse_and_format_round_trip():
    assert Q.parse("-3/6") == Fraction(-1, 2)
    assert str(Q.parse("4/2")) == "2"
    assert str(GF(7).parse("-1")) == "6"
    for bad in ("1/0", "x", "1.5", ""):
        with pytest.raises(ParseError):
            Q.parse(bad)
    with pytest.raises(ParseError):
        GF(7).parse("1/2")


def test_field_names():
    assert Field.from_name("q") is Q
    assert Field.from_name("gf:5") == GF(5)
    assert Field.from_name("GF(5)") == GF(5)
    with pytest.raises(ParseError):
        Field.from_name("gf:4")
