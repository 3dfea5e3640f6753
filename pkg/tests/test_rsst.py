import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from ribbon_llt.golden import ARROW_TABLEAU, ARROW_TABLEAU_READINGS, INTRO_TABLEAU, QLR_TABLEAUX, RESTRICTED_TABLEAU
from ribbon_llt.rsst import (
    NW_ARROW,
    SE_ARROW,
    Rsst,
    arrows,
    enumerate_rsst,
    enumerate_rsst_bruteforce,
    fill_rsst,
    has_forbidden_arrows,
    is_square_respecting,
    reading_words,
    reading_words_bruteforce,
    rsst_statistics,
    sqread,
    validate_rsst,
)
from ribbon_llt.shapes import RestrictedShape, partitions_up_to, restricted_shapes
from ribbon_llt.words import desi, invi, word


def _small_rsst(max_cells=5, max_entry=8):
    for cs in restricted_shapes(max_cells):
        ncols = max(c for _, c in cs)
        yield from fill_rsst(cs, col_bounds={c: max_entry for c in range(1, ncols + 1)})


SMALL = list(_small_rsst(4, 7))


def test_validate_examples():
    assert validate_rsst(RESTRICTED_TABLEAU)
    assert validate_rsst(Rsst.from_rows([[5]]))
    # diagonal neighbours need a gap of at least 3
    assert validate_rsst(Rsst.from_rows([[1, 2], [2, 4]]))
    assert not validate_rsst(Rsst.from_rows([[1, 2], [2, 3]]))
    assert not validate_rsst(Rsst.from_rows([[1, 1]]))
    assert not validate_rsst(Rsst.from_rows([[1], [1]]))


def test_validate_rejects_non_restricted_cells():
    assert not validate_rsst({(1, 1): 1, (2, 2): 5})


def test_rows_round_trip():
    assert Rsst.from_json(ARROW_TABLEAU.to_json()) == ARROW_TABLEAU
    assert ARROW_TABLEAU.rows()[0][0] == 1 and ARROW_TABLEAU.rows()[0][1] is None


def test_arrow_examples():
    kinds = Counter(kind for _, _, kind in arrows(ARROW_TABLEAU))
    assert kinds == Counter({NW_ARROW: 4, SE_ARROW: 2})
    assert arrows(Rsst.from_rows([[1, 5], [5, 9]])) == []
    assert [k for _, _, k in arrows(Rsst.from_rows([[1, 2], [3, 4]]))] == [NW_ARROW]
    assert [k for _, _, k in arrows(Rsst.from_rows([[1, 2], [2, 4]]))] == [SE_ARROW]


def test_sqread_examples():
    assert sqread(INTRO_TABLEAU) == word("834152476")
    assert sqread(ARROW_TABLEAU) == ARROW_TABLEAU_READINGS[0][0]
    assert sqread(Rsst.from_rows([[1, 2, 3]])) == (1, 2, 3)


def test_reading_word_membership():
    words = set(reading_words(ARROW_TABLEAU))
    for w, ok in ARROW_TABLEAU_READINGS:
        assert (w in words) == ok
        assert is_square_respecting(ARROW_TABLEAU, w) == ok
        assert is_square_respecting(ARROW_TABLEAU, w, square_respecting=False)


def test_single_column_has_one_reading():
    assert list(reading_words(Rsst.from_rows([[1], [2], [3]]))) == [(3, 2, 1)]


@pytest.mark.parametrize("sr", [True, False])
def test_reading_words_against_permutation_filter(sr):
    rng = random.Random(5)
    for t in rng.sample(SMALL, 150):
        assert set(reading_words(t, sr)) == reading_words_bruteforce(t, sr)


def test_sqread_is_square_respecting():
    for t in SMALL:
        assert is_square_respecting(t, sqread(t))
        assert not has_forbidden_arrows(t)


def test_is_square_respecting_matches_enumeration():
    rng = random.Random(11)
    for t in rng.sample(SMALL, 100):
        good = set(reading_words(t))
        for w in reading_words_bruteforce(t, square_respecting=False):
            assert is_square_respecting(t, w) == (w in good)


def test_statistics_examples():
    assert [rsst_statistics(t)[1] for t, _, _ in QLR_TABLEAUX] == [4, 5, 5]
    assert rsst_statistics(Rsst.from_rows([[1, 5], [5, 9]])) == (Counter(), 0)


def test_statistics_equal_word_statistics_of_sqread():
    for t in SMALL:
        w = sqread(t)
        assert rsst_statistics(t) == (desi(w, 3), invi(w, 3))


def test_enumerate_examples():
    only = enumerate_rsst((1,), flags=(1,))
    assert len(only) == 1 and only[0].mapping == {(1, 1): 1}
    assert enumerate_rsst((2, 2), contents=(1, 2, 3)) == []
    with pytest.raises(ValueError):
        enumerate_rsst((2, 2))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([p for p in partitions_up_to(5) if p]), st.data())
def test_enumerate_against_brute_force(lam, data):
    ncols = lam[0]
    flags = tuple(sorted(data.draw(st.lists(st.integers(0, 6), min_size=ncols, max_size=ncols))))
    fast = sorted(sorted(t.mapping.items()) for t in enumerate_rsst(lam, flags=flags))
    slow = sorted(sorted(t.mapping.items()) for t in enumerate_rsst_bruteforce(lam, flags))
    assert fast == slow


def test_fill_respects_fixed_entries():
    shape = RestrictedShape((3, 2), (0, 1))
    fixed = {(2, 1): 4}
    out = list(fill_rsst(shape.cells(), fixed=fixed, col_bounds={1: 9, 2: 9}))
    assert out and all(t.mapping[(2, 1)] == 4 and validate_rsst(t) for t in out)
