from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from palatini.field import GF, QQ, FieldElement, FieldMismatch, PrimeField, field_from_descriptor, is_prime


def test_is_prime_small_values():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(32003) and is_prime(31991)
    assert not is_prime(32001)


def test_rationals_are_reduced_with_positive_denominator():
    x = QQ(Fraction(6, -4))
    assert x.value == Fraction(-3, 2)
    assert x.value.denominator == 2
    assert QQ(0).value == Fraction(0, 1)


def test_prime_residues_are_reduced():
    F = GF(7)
    assert F(-1).value == 6
    assert F(15).value == 1
    assert F(Fraction(1, 3)).value == 5  # 3 * 5 = 15 = 1 mod 7


def test_prime_field_rejects_composite_and_large_moduli():
    with pytest.raises(ValueError, match="not prime"):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        QQ(0.5)
    with pytest.raises(TypeError):
        GF(7)(0.5)


def test_elements_of_different_fields_never_combine():
    with pytest.raises(FieldMismatch):
        GF(7)(1) + GF(11)(1)
    with pytest.raises(FieldMismatch):
        QQ(1) * GF(7)(2)
    assert GF(7)(3) != GF(11)(3)


def test_division_and_inverse():
    F = GF(32003)
    a = F(12345)
    assert a * a.inverse() == 1
    assert (a / a) == F(1)
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()
    assert QQ(Fraction(2, 3)) / QQ(4) == Fraction(1, 6)


def test_element_is_immutable():
    a = QQ(1)
    with pytest.raises(AttributeError):
        a.value = 2


def test_descriptor_round_trip():
    for f in (QQ, GF(32003), GF(31991)):
        assert field_from_descriptor(f.descriptor()) == f
    with pytest.raises(ValueError):
        field_from_descriptor({"type": "r"})


@given(st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(a, b, c):
    F = GF(101)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) * z == x * z + y * z
    assert x - x == 0
    assert (x + y) - y == x
    if not y.is_zero():
        assert (x / y) * y == x


@given(st.fractions(), st.fractions())
def test_rational_matches_fraction(a, b):
    assert (QQ(a) * QQ(b)).value == a * b
    assert (QQ(a) - QQ(b)).value == a - b
    assert isinstance(QQ(a), FieldElement)
