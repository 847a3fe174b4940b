import pytest
from hypothesis import given, strategies as st

from fano3.chow import BundleSpec
from fano3.expr import ChowExpr, ExprSyntaxError, format_terms, parse_chow_expr, parse_divisor


@pytest.mark.parametrize("text,terms", [
    ("2M-F", {(1, 0): 2, (0, 1): -1}),
    ("3M-2F", {(1, 0): 3, (0, 1): -2}),
    ("M^5", {(5, 0): 1}),
    ("-M + M", {}),
    ("2*M^4*F", {(4, 1): 2}),
    (" 2 M F ", {(1, 1): 2}),
])
def test_parse(text, terms):
    assert parse_chow_expr(text).as_dict() == terms


@pytest.mark.parametrize("text,offset", [("2X", 1), ("M^", 2), ("2M-", 3), ("X^2", 0), ("", 0), ("*M", 0)])
def test_syntax_errors_carry_offset(text, offset):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_chow_expr(text)
    assert exc.value.offset == offset


def test_format_is_canonical():
    assert format_terms({(1, 0): 2, (0, 1): -1}) == "2M-F"
    assert format_terms({(4, 1): 2}) == "2M^4F"
    assert format_terms({}) == "0"


def test_parse_divisor():
    assert parse_divisor("2M-F") == (2, -1)
    assert parse_divisor("F") == (0, 1)
    with pytest.raises(ValueError):
        parse_divisor("M^2")


def test_to_element_reduces():
    ring = BundleSpec([0, 0, 0, 1, 1])
    e = parse_chow_expr("M^5").to_element(ring)
    assert (e.coeff_M, e.coeff_MF) == (0, 2)
    with pytest.raises(ValueError):
        parse_chow_expr("M^2+F").to_element(ring)


monomial = st.tuples(st.integers(0, 6), st.integers(0, 2))
terms = st.dictionaries(monomial, st.integers(-20, 20).filter(bool), max_size=5)


@given(terms)
def test_print_parse_roundtrip(d):
    e = ChowExpr.from_dict(d)
    assert parse_chow_expr(str(e)) == e
