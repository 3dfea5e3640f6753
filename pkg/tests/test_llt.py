import itertools
import random

import pytest

from ribbon_llt.golden import WORKED_TUPLE
from ribbon_llt.laurent import LaurentPoly
from ribbon_llt.llt import (
    SkewTuple,
    enumerate_W,
    enumerate_W_by_action,
    is_positive,
    llt_polynomial,
    q1_factorization_holds,
    qlr_coefficients,
    qlr_oracle,
    random_skew_tuple,
    ribbon_words,
    spin_inv_exponent,
    spin_llt,
    tileable_pairs,
    tuple_descent_data,
    tuple_from_ribbon_shape,
)
from ribbon_llt.shapes import SkewShape, ribbon_tilings
from ribbon_llt.symfunc import schur_expand
from ribbon_llt.words import des_pair, desi, descent_set, is_nonzero_word, is_ribbon_word, pair_inverse, word


def _sample(seed, count, max_size=6):
    rng = random.Random(seed)
    return [random_skew_tuple(rng, k=3, max_size=max_size) for _ in range(count)]


def test_json_round_trip():
    assert SkewTuple.from_json(WORKED_TUPLE.to_json()) == WORKED_TUPLE


def test_worked_tuple_content_vector():
    assert WORKED_TUPLE.content_vector() == word("12344578")
    assert len(WORKED_TUPLE) == 8 and WORKED_TUPLE.k == 3


def test_single_cell_tuple():
    beta = SkewTuple((SkewShape.from_outer_inner((1,)), SkewShape(frozenset()), SkewShape(frozenset())))
    assert enumerate_W(beta) == {(0,)}
    beta = SkewTuple((SkewShape(frozenset()), SkewShape.from_outer_inner((1,), shift=2), SkewShape(frozenset())))
    assert enumerate_W(beta) == {(7,)}


def test_far_apart_cells_have_no_descents():
    beta = SkewTuple((SkewShape.from_outer_inner((1,)), SkewShape.from_outer_inner((1,), shift=4),
                      SkewShape.from_outer_inner((1,), shift=-5)))
    _, d, dprime = tuple_descent_data(beta)
    assert not d and not dprime


def test_word_set_membership():
    assert word("48714235") in enumerate_W(WORKED_TUPLE)


def test_linear_extensions_match_action():
    for beta in _sample(4, 60):
        assert enumerate_W(beta) == enumerate_W_by_action(beta)


def test_word_set_three_descriptions():
    # linear extensions = inverses of ribbon words with Des = D = nonzero words with Desi = D'
    for beta in _sample(9, 40):
        c, d, dprime = tuple_descent_data(beta)
        w_set = enumerate_W(beta)
        by_ribbon = {pair_inverse(w, c) for w in itertools.permutations(range(1, len(c) + 1))
                     if is_ribbon_word(w, c, 3) and des_pair(w, c, 3) == d}
        by_desi = {v for v in set(itertools.permutations(c)) if is_nonzero_word(v, 3) and desi(v, 3) == dprime}
        assert w_set == by_ribbon == by_desi


def test_llt_polynomial_examples():
    empty = SkewTuple((SkewShape(frozenset()),) * 3)
    g = llt_polynomial(empty)
    assert g.degree == 0 and schur_expand(g) == {(): LaurentPoly({0: 1})}
    coeff = llt_polynomial(WORKED_TUPLE).coeffs[descent_set(word("48714235"))]
    assert coeff[6] > 0


def test_qlr_examples():
    want = LaurentPoly({4: 1, 5: 2})
    assert qlr_coefficients(WORKED_TUPLE, (4, 3, 1)) == {(4, 3, 1): want}
    assert qlr_oracle(WORKED_TUPLE)[(4, 3, 1)] == want
    assert qlr_coefficients(WORKED_TUPLE, (3, 3, 1)) == {}


def test_qlr_formula_matches_oracle_small():
    for beta in _sample(17, 25):
        oracle = qlr_oracle(beta)
        assert qlr_coefficients(beta) == oracle
        assert is_positive(oracle)
        assert q1_factorization_holds(beta)


def test_spin_examples():
    g = spin_llt((2, 1), (2, 1), 3)
    assert g.degree == 0 and schur_expand(g) == {(): LaurentPoly({0: 1})}
    assert spin_llt((3,), (), 3).coeffs == {frozenset(): LaurentPoly({0: 1})}
    assert len(ribbon_words((3, 3), (), 3)) == len(ribbon_tilings((3, 3), (), 3)) == 2


def test_spin_ratio_is_monomial_small():
    for k in (2, 3):
        pairs = tileable_pairs(6, k)
        assert len(pairs) >= 20
        for mu, nu in pairs:
            assert spin_inv_exponent(mu, nu, k) is not None
            assert len(tuple_from_ribbon_shape(mu, nu, k)) == (sum(mu) - sum(nu)) // k


def test_spin_ratio_detects_wrong_substitution():
    # the ratio is a monomial only after q -> qlam^-2
    beta = tuple_from_ribbon_shape((4, 2), (), 2)
    g = llt_polynomial(beta)
    assert g.substitute_power(2).divide_monomial(spin_llt((4, 2), (), 2)) is None


def test_random_tuple_sizes():
    rng = random.Random(1)
    for _ in range(30):
        beta = random_skew_tuple(rng, max_size=5, min_size=2)
        assert 2 <= len(beta) <= 5
    with pytest.raises(Exception):
        SkewTuple.from_json([{"outer": [1], "inner": [2]}])
