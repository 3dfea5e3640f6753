import random
from math import factorial

import pytest

from ribbon_llt.laurent import LaurentPoly
from ribbon_llt.shapes import cells, conjugate, partitions
from ribbon_llt.symfunc import (
    NotSymmetricError,
    SymFunc,
    from_schur,
    lr_tableaux_count,
    schur,
    schur_expand,
    schur_product,
    skew_schur_expand,
    standard_tableaux,
    syt_descents,
)


def _hook_count(lam):
    conj = conjugate(lam)
    prod = 1
    for r, c in cells(lam):
        prod *= (lam[r - 1] - c) + (conj[c - 1] - r) + 1
    return factorial(sum(lam)) // prod


def _skew_syt_descents(outer, inner):
    # standard fillings of outer/inner, descents as for straight shapes
    inner = inner + (0,) * (len(outer) - len(inner))
    n = sum(outer) - sum(inner)
    out = []
    rows = list(inner)

    def rec(i, row_of):
        if i > n:
            out.append(frozenset(j for j in range(1, n) if row_of[j + 1] > row_of[j]))
            return
        for r in range(len(outer)):
            if rows[r] < outer[r] and (r == 0 or rows[r - 1] > rows[r]):
                rows[r] += 1
                row_of[i] = r
                rec(i + 1, row_of)
                rows[r] -= 1

    rec(1, {})
    return out


def test_syt_counts_match_hook_lengths():
    for n in range(1, 8):
        for lam in partitions(n):
            assert len(standard_tableaux(lam)) == _hook_count(lam)


def test_syt_descents():
    assert syt_descents(((1, 2), (3,))) == frozenset({2})
    assert syt_descents(((1, 3), (2,))) == frozenset({1})


def test_schur_round_trip():
    for n in range(0, 8):
        for lam in partitions(n):
            assert schur_expand(schur(lam)) == {lam: LaurentPoly({0: 1})}


def test_random_combination_recovered():
    rng = random.Random(2)
    for n in (4, 6):
        want = {}
        for lam in partitions(n):
            if rng.random() < 0.5:
                want[lam] = LaurentPoly({rng.randint(-2, 3): rng.randint(1, 4), rng.randint(-2, 3): 1})
        got = schur_expand(from_schur(want))
        assert got == {lam: c for lam, c in want.items() if c}


def test_non_symmetric_rejected():
    with pytest.raises(NotSymmetricError):
        schur_expand(SymFunc(3, {frozenset({1}): 1}))
    with pytest.raises(ValueError):
        SymFunc(2, {frozenset({2}): 1})


def test_monomial_view_gives_kostka_numbers():
    m = schur((2, 1)).monomial_coefficients(3)
    assert m[(2, 1, 0)] == LaurentPoly({0: 1})
    assert m[(1, 1, 1)] == LaurentPoly({0: 2})


def test_lr_products():
    one = {(1,): 1}
    assert schur_product(one, one) == {(2,): 1, (1, 1): 1}
    assert schur_product(one, {(2, 1): 1}) == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}
    assert schur_product({(2, 1): 1}, {(2, 1): 1}) == {
        (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1}


def test_lr_count_conditions():
    assert lr_tableaux_count((2, 1), (3,), (0,)) == 0
    assert lr_tableaux_count((3, 2, 1), (2, 1), (2, 1)) == 2


@pytest.mark.parametrize("outer,inner", [((3, 2, 1), (2, 1)), ((4, 3, 1), (2, 1)), ((3, 3), (1,)),
                                         ((4, 2, 2), (2, 1)), ((3, 3, 2), (2, 1))])
def test_skew_schur_lr_against_skew_tableaux(outer, inner):
    n = sum(outer) - sum(inner)
    q = {}
    for d in _skew_syt_descents(outer, inner):
        q[d] = q.get(d, 0) + 1
    expected = {lam: c[0] for lam, c in schur_expand(SymFunc(n, q)).items()}
    assert skew_schur_expand(outer, inner) == expected


def test_from_words_and_arithmetic():
    f = SymFunc.from_words(2, [((1, 2), 1), ((2, 1), LaurentPoly({1: 1}))])
    assert schur_expand(f) == {(2,): LaurentPoly({0: 1}), (1, 1): LaurentPoly({1: 1})}
    assert (f - f).coeffs == {}
    assert f.substitute_power(-2).divide_monomial(f.at_one()) is None
    g = f.scale(LaurentPoly({3: 1}))
    assert g.divide_monomial(f) == 3
