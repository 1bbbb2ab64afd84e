from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from knotslope.errors import NonIntegralExponent, ZeroPolynomial
from knotslope.laurent import LaurentPolynomial as L

polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=6).map(lambda d: L(d, "A"))


def test_zero_coefficients_are_dropped():
    p = L({1: 2, 3: 0, -2: -1})
    assert p.terms == {-2: -1, 1: 2}
    assert L({0: 0}).is_zero()


def test_degrees_and_zero_polynomial():
    p = L.parse("-t^-4 + t^-3 + t^-1")
    assert (p.min_degree(), p.max_degree()) == (-4, -1)
    with pytest.raises(ZeroPolynomial):
        L().max_degree()


def test_str_and_parse_round_trip():
    p = L({-4: -1, -3: 1, -1: 1})
    assert str(p) == "-1*t^-4 + 1*t^-3 + 1*t^-1"
    assert L.parse(str(p)) == p


def test_parse_knotinfo_style():
    assert L.parse("t^(-2)-t^(-1)+ 1-t+ t^2") == L({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    assert L.parse("t+ t^3-t^4") == L({1: 1, 3: 1, 4: -1})
    assert L.parse("-2*A^3", "A") == L({3: -2}, "A")


def test_parse_rejects_garbage():
    for bad in ("t^", "3*", "+-t", "x+t"):
        with pytest.raises(ValueError):
            L.parse(bad)


def test_evaluation_is_exact():
    p = L({-1: 1, 2: 3})
    assert p(2) == Fraction(1, 2) + 12
    assert L.parse("t^(-2)-t^(-1)+ 1-t+ t^2")(-1) == 5


def test_mixed_variables_rejected():
    with pytest.raises(ValueError):
        L({1: 1}, "A") + L({1: 1}, "t")


def test_contract_requires_divisible_exponents():
    assert L({-8: 1, 4: 2}, "A").contract(-4, "t") == L({2: 1, -1: 2}, "t")
    with pytest.raises(NonIntegralExponent):
        L({2: 1}, "A").contract(4)


def test_exact_div():
    d = L({2: -1, -2: -1}, "A")
    q = L({3: 1, -5: 2}, "A")
    assert (q * d).exact_div(d) == q
    with pytest.raises(ValueError):
        (q * d + L({0: 1}, "A")).exact_div(d)


def test_negative_power_of_unit_monomial():
    assert L({3: -1}, "A") ** -1 == L({-3: -1}, "A")


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(polys, polys)
def test_division_inverts_multiplication(p, q):
    if not q.is_zero():
        assert (p * q).exact_div(q) == p


@given(polys)
def test_serialisation_round_trips(p):
    assert L.from_terms(p.to_terms(), "A") == p
    assert L.parse(str(p), "A") == p
    assert p.invert_variable().invert_variable() == p
    assert hash(L(p.terms, "A")) == hash(p)
