from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ribbon_llt.laurent import ONE, ZERO, LaurentPoly, qpow

polys = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=4).map(LaurentPoly)


def test_zero_coefficients_dropped():
    assert LaurentPoly({1: 0, 2: 3}).coeffs == {2: 3}
    assert not LaurentPoly({5: 0})
    assert LaurentPoly() == ZERO


def test_float_rejected():
    with pytest.raises(TypeError):
        LaurentPoly({0: 0.5})


def test_fraction_normalized():
    p = LaurentPoly({0: Fraction(4, 2)})
    assert p.coeffs == {0: 2} and isinstance(p[0], int)


def test_format():
    assert str(LaurentPoly({4: 1, 5: 2})) == "q^4 + 2*q^5"
    assert str(LaurentPoly({-1: 1, 0: -1, 1: -3})) == "q^-1 - 1 - 3*q"
    assert str(ZERO) == "0"


def test_monomial_division():
    p = LaurentPoly({1: 2, 3: 1})
    assert (p * qpow(-4)).divide_monomial(p) == -4
    assert LaurentPoly({0: 1, 1: 1}).divide_monomial(LaurentPoly({0: 1, 1: 2})) is None


def test_substitute_power():
    p = LaurentPoly({1: 1, 2: 3})
    assert p.substitute_power(-2) == LaurentPoly({-2: 1, -4: 3})
    assert p.at_one() == 4


def test_triples_round_trip():
    p = LaurentPoly({-2: Fraction(1, 3), 5: 7})
    assert LaurentPoly.from_triples(p.to_triples()) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, st.integers(-5, 5))
def test_shift_is_monomial_product(a, n):
    assert a.shift(n) == a * qpow(n)
