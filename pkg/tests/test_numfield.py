from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fano3.numfield import NumberField

K = NumberField((-2, 0, 1))  # Q(sqrt 2)
L = NumberField((1, 1, 0, 1))  # x^3 + x + 1


def test_generator_relation():
    t = K.gen()
    assert t * t == 2
    u = L.gen()
    assert u * u * u == -u - 1


def test_inverse():
    t = K.gen()
    assert (1 + t).inverse() * (1 + t) == 1
    with pytest.raises(ZeroDivisionError):
        K(0).inverse()


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        K.gen() + L.gen()


coef = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@given(st.lists(coef, min_size=3, max_size=3), st.lists(coef, min_size=3, max_size=3))
def test_field_axioms(a, b):
    x, y = L.from_poly(a), L.from_poly(b)
    assert x * y == y * x
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x


def test_json_encoding():
    assert K.to_json() == ["-2", "0", "1"]
    assert (K.gen() / 3).to_json() == ["0", "1/3"]
    assert K.gen().as_fractions() == (Fraction(0), Fraction(1))
