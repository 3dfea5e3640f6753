"""Acceptance suite.  Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""

import itertools
import random

import pytest

from ribbon_llt.conjecture import admissible_instances, check_letter_peeling, peeling_sides
from ribbon_llt.golden import (
    ARROW_TABLEAU,
    ARROW_TABLEAU_READINGS,
    C_EX,
    INTRO_TABLEAU,
    LEAF_WORDS,
    QLR_TABLEAUX,
    W_EX,
    WORKED_TUPLE,
)
from ribbon_llt.laurent import LaurentPoly
from ribbon_llt.llt import (
    is_positive,
    q1_factorization_holds,
    qlr_coefficients,
    qlr_oracle,
    random_skew_tuple,
    spin_inv_exponent,
    tileable_pairs,
    tuple_descent_data,
)
from ribbon_llt.ncsf import (
    FlagSpec,
    commute_elementary,
    commute_elementary_lam,
    flagged_schur,
    flagged_schur_lam,
    reduce_sum_lam,
    verify_equal_columns_commute,
    verify_theorem_main,
)
from ribbon_llt.quotient import (
    AlgebraElement,
    RelationSystem,
    canonical_form_lam,
    equal_in_quotient,
    nonzero_by_ribbon_word,
)
from ribbon_llt.rsst import (
    enumerate_rsst,
    fill_rsst,
    has_forbidden_arrows,
    has_zero_square,
    nearr_maximal_cells,
    reading_words,
    rsst_statistics,
    sqread,
)
from ribbon_llt.shapes import partitions, restricted_shapes
from ribbon_llt.words import des_pair, inv_pair, invi, is_nonzero_word

SAMPLE_SEED = 20240601
SAMPLE_SIZE = 50


def _llt_sample():
    rng = random.Random(SAMPLE_SEED)
    return [random_skew_tuple(rng, k=3, max_size=8) for _ in range(SAMPLE_SIZE)]


def _all_rsst(max_cells: int, max_entry: int):
    for cs in restricted_shapes(max_cells):
        ncols = max(c for _, c in cs)
        yield from fill_rsst(cs, col_bounds={c: max_entry for c in range(1, ncols + 1)})


def test_worked_tuple_coefficient(report):
    lam = (4, 3, 1)
    want = LaurentPoly({4: 1, 5: 2})
    by_rsst = qlr_coefficients(WORKED_TUPLE, lam).get(lam)
    by_oracle = qlr_oracle(WORKED_TUPLE).get(lam)
    _, _, dprime = tuple_descent_data(WORKED_TUPLE)
    found = sorted((sqread(t), rsst_statistics(t)[1])
                   for t in enumerate_rsst(lam, contents=C_EX, desi=dprime, nonzero=True))
    expected = sorted((w, e) for _, w, e in QLR_TABLEAUX)
    ok = by_rsst == want and by_oracle == want and found == expected
    report(1, "worked tuple (2/1, 33/11, 33/21) at (4,3,1) is q^4 + 2q^5 by both routes, three RSST exact",
           ok, f"rsst={by_rsst}, oracle={by_oracle}, tableaux={len(found)}")


@pytest.mark.slow
def test_flagged_schur_equals_rsst_sum(report):
    n = bad = 0
    for size in range(1, 7):
        for lam in partitions(size):
            for flags in itertools.combinations_with_replacement(range(0, 9), lam[0]):
                n += 1
                if verify_theorem_main(lam, flags)["status"] != "ok":
                    bad += 1
    report(2, "J_{lam'}^{flags} equals the sqread sum for |lam| <= 6, flags <= 8", bad == 0,
           f"{n} instances, {bad} mismatches")


def test_inductive_leaves(report):
    lhs = flagged_schur_lam(FlagSpec.flagged((3, 3), (6, 6)), 3)
    rhs = reduce_sum_lam(LEAF_WORDS, 3)
    unit = all(c.is_monomial() and c.at_one() == 1 for c in lhs.values())
    report(3, "J_(3,3) with flags (6,6) reduces to the leaf-word classes with unit coefficients",
           lhs == rhs and len(lhs) == len(LEAF_WORDS) and unit, f"{len(lhs)} classes")


def test_statistics_goldens(report):
    checks = [
        invi((8, 3, 4, 1, 2, 7, 5), 3) == 5,
        des_pair(W_EX, C_EX, 3) == frozenset({(1, 4), (5, 7), (6, 8)}),
        inv_pair(W_EX, C_EX, 3) == 6,
        sqread(INTRO_TABLEAU) == (8, 3, 4, 1, 5, 2, 4, 7, 6),
        sqread(ARROW_TABLEAU) == ARROW_TABLEAU_READINGS[0][0],
        " ".join(map(str, sqread(ARROW_TABLEAU))) == "15 12 13 10 5 11 20 6 3 18 19 4 1 16 17 26 25 32 31 34 33 36",
    ]
    report(4, "invi, Des/inv of the worked ribbon word, and sqread goldens", all(checks),
           f"{sum(checks)}/{len(checks)} exact")


@pytest.mark.slow
def test_square_respecting_readings(report):
    n = words = zero_squares = appends = 0
    bad = []
    for t in _all_rsst(7, 9):
        n += 1
        if has_forbidden_arrows(t):
            bad.append(("forbidden arrows", t))
        ws = list(reading_words(t))
        words += len(ws)
        forms = {canonical_form_lam(w, 3) for w in ws}
        if len(forms) != 1:
            bad.append(("readings differ", t))
            continue
        form = forms.pop()
        if has_zero_square(t):
            zero_squares += 1
            if not form.is_zero:
                bad.append(("zero square", t))
        m = t.mapping
        for z in nearr_maximal_cells(t):
            appends += 1
            if not canonical_form_lam(ws[0] + (m[z],), 3).is_zero:
                bad.append(("append", t))
    report(5, "RSST with <= 7 cells, entries in [9]: readings agree, maximal append and arrow squares give zero",
           not bad, f"{n} tableaux, {words} readings, {zero_squares} zero squares, {appends} appends, "
           f"{len(bad)} failures")


@pytest.mark.slow
def test_rsst_formula_matches_oracle(report):
    bad = 0
    for beta in _llt_sample():
        ours, oracle = qlr_coefficients(beta), qlr_oracle(beta)
        if ours != oracle or not is_positive(oracle):
            bad += 1
    report(6, f"{SAMPLE_SIZE} random 3-tuples with |beta| <= 8: RSST formula equals Schur oracle, all in N[q]",
           bad == 0, f"{bad} mismatches")


def test_q1_factorization(report):
    bad = sum(not q1_factorization_holds(beta) for beta in _llt_sample())
    report(7, "LLT at q = 1 equals the product of skew Schur functions on the same sample", bad == 0,
           f"{bad} mismatches")


def test_spin_inversion_monomial(report):
    n = bad = 0
    for k in (2, 3):
        for mu, nu in tileable_pairs(9, k):
            n += 1
            if spin_inv_exponent(mu, nu, k) is None:
                bad += 1
    report(8, "inversion LLT at q = qlam^-2 over spin LLT is a single power (k = 2, 3, |mu/nu| <= 9)",
           n >= 20 and bad == 0, f"{n} pairs, {bad} failures")


@pytest.mark.slow
def test_algebra_sanity(report):
    failures = []
    # e_i(S) e_j(S) commute
    for k in (2, 3, 4):
        for size in range(1, 7):
            for s in itertools.combinations(range(1, 10), size):
                for i, j in itertools.combinations(range(1, 4), 2):
                    if not commute_elementary_lam(i, j, s, k):
                        failures.append(("lam", k, s, i, j))
    rot = RelationSystem("rot_le", 3)
    for size in range(1, 8):
        for s in itertools.combinations(range(1, 8), size):
            for i, j in itertools.combinations(range(1, 4), 2):
                if i + j <= 7 and not commute_elementary(i, j, s, rot):
                    failures.append(("rot", s, i, j))
    # three characterizations of nonzero words
    words = 0
    for k, alphabet in ((3, 6), (2, 5)):
        for n in range(1, 8):
            for v in itertools.product(range(1, alphabet + 1), repeat=n):
                words += 1
                a = not canonical_form_lam(v, k).is_zero
                if a != is_nonzero_word(v, k) or a != nonzero_by_ribbon_word(v, k):
                    failures.append(("nonzero", k, v))
    # equal columns commute with a large letter
    cols = 0
    for a in range(1, 4):
        for m in range(1, 7):
            for x in range(m + 1, 9):
                cols += 1
                if not verify_equal_columns_commute(a, m, x, 3):
                    failures.append(("columns", a, m, x))
    # letter peeling at t = 0 and t = 1
    peel = 0
    for t, top in ((0, 7), (1, 8)):
        for inst in admissible_instances(t, top):
            peel += 1
            if not check_letter_peeling(*inst):
                failures.append(("peel", inst))
    report(9, "e_i e_j commute, nonzero-word characterizations agree, column and letter-peeling identities hold",
           not failures, f"{words} words, {cols} column instances, {peel} peeling instances, "
           f"{len(failures)} failures")


def test_peeling_negative_control():
    # peeling x off to the right instead of the left must be detected
    rot = RelationSystem("rot_le", 3)
    differs = nonzero = 0
    for m, n, x, y, a in admissible_instances(0, 7):
        lhs, _ = peeling_sides(m, n, x, y, a)
        if not equal_in_quotient(lhs, AlgebraElement(), rot):
            nonzero += 1
            rest = flagged_schur(FlagSpec.flagged((a, a), (m, m)))
            wrong = rest * AlgebraElement.from_word((x,))
            differs += not equal_in_quotient(lhs, wrong, rot)
    assert nonzero > 0 and differs == nonzero


@pytest.mark.slow
def test_readings_equal_in_rotation_quotient(report):
    rot = RelationSystem("rot_le", 3)
    n = pairs = bad = 0
    for t in _all_rsst(6, 9):
        n += 1
        ws = list(reading_words(t))
        first = AlgebraElement.from_word(ws[0])
        for w in ws[1:]:
            pairs += 1
            if not equal_in_quotient(first, AlgebraElement.from_word(w), rot):
                bad += 1
    report(10, "square-respecting readings of RSST with <= 6 cells agree in the rot-le quotient",
           bad == 0, f"{n} tableaux, {pairs} pairs, {bad} failures")
