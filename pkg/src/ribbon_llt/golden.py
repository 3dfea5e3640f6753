"""Published worked values, recomputed and compared exactly.

Each golden is ``(label, thunk)`` where the thunk returns ``(got, expected)``.
"""

from __future__ import annotations

from collections import Counter

from .laurent import LaurentPoly, qpow
from .llt import SkewTuple, enumerate_W, enumerate_W_by_action, llt_polynomial, qlr_coefficients, qlr_oracle
from .llt import standardized_contents, tuple_descent_data
from .ncsf import FlagSpec, flagged_schur_lam, j_expand, pair_with_words, reduce_sum_lam, verify_theorem_main
from .quotient import act_on_tuple, equivalence_class
from .rsst import Rsst, arrows, is_square_respecting, rsst_statistics, sqread, validate_rsst, enumerate_rsst, NW_ARROW
from .words import (
    des_pair,
    desi,
    descent_set,
    inv_pair,
    invi,
    is_nonzero_word,
    is_ribbon_word,
    pair_inverse,
    standardize,
    word,
)
from .conjecture import check_letter_peeling
from .shapes import conjugate

# the 3-tuple (2/1, 33/11, 33/21) used in the worked examples
WORKED_TUPLE = SkewTuple.from_outer_inner([(2,), (3, 3), (3, 3)], [(1,), (1, 1), (2, 1)])
# the tuple (2, 32, 33)/(1, 11, 21) of skew shapes without 2x2 squares
INTRO_TUPLE = SkewTuple.from_outer_inner([(2,), (3, 2), (3, 3)], [(1,), (1, 1), (2, 1)])

INTRO_TABLEAU = Rsst.from_rows([[1, 2, 4, 6], [3, 4, 5, 7], [8]])
RESTRICTED_TABLEAU = Rsst.from_rows([
    [1],
    [3, 4],
    [5, 6, 7, 8, 9, 10],
    [7, 8, 9, 10, 11, 12, 13],
    [8, 10, 12],
    [11],
])
ARROW_TABLEAU = Rsst.from_rows([
    [1],
    [3, 4],
    [5, 6, 16, 17, 25, 31, 33],
    [10, 11, 18, 19, 26, 32, 34, 36],
    [12, 13, 20],
    [15],
])
ARROW_TABLEAU_READINGS = (
    (word("15 12 13 10 5 11 20 6 3 18 19 4 1 16 17 26 25 32 31 34 33 36".split()), True),
    (word("15 12 13 10 5 11 20 6 3 4 1 18 19 16 17 26 25 32 31 34 33 36".split()), True),
    (word("15 12 10 13 11 20 18 19 26 5 6 3 4 1 16 17 25 32 34 36 31 33".split()), False),
)
QLR_TABLEAUX = (
    (Rsst.from_rows([[1, 3, 4, 5], [2, 7, 8], [4]]), word("42173845"), 4),
    (Rsst.from_rows([[1, 2, 4, 5], [3, 7, 8], [4]]), word("43172845"), 5),
    (Rsst.from_rows([[1, 2, 4, 5], [3, 4, 7], [8]]), word("83412745"), 5),
)
# leaves of the inductive computation of J_{(3,3)} with flags (6, 6)
LEAF_WORDS = tuple(word(s) for s in ("563412", "562143", "436152", "426153", "326154"))

W_EX, C_EX, V_EX = word("46715832"), word("12344578"), word("48714235")


def _arrow_corners(t: Rsst):
    """Entries ``a`` of the northwest corners of the arrow squares, by arrow kind."""
    m = t.mapping
    nw = sorted(m[head] for _, head, kind in arrows(t) if kind == NW_ARROW)
    se = sorted(m[tail] for tail, _, kind in arrows(t) if kind != NW_ARROW)
    return nw, se


def goldens() -> list:
    q4_2q5 = LaurentPoly({4: 1, 5: 2})
    out = [
        ("Des_3 and inv_3 of the worked ribbon word",
         lambda: ((des_pair(W_EX, C_EX, 3), inv_pair(W_EX, C_EX, 3)), (frozenset({(1, 4), (5, 7), (6, 8)}), 6))),
        ("invi_3(8341275)", lambda: (invi(word("8341275"), 3), 5)),
        ("Desi_3 and invi_3 of 48714235",
         lambda: ((desi(V_EX, 3), invi(V_EX, 3)), (Counter({(4, 1): 1, (7, 4): 1, (8, 5): 1}), 6))),
        ("standardization of the sorted content vector", lambda: (standardize(sorted(V_EX)), word("12345678"))),
        ("(w, c)^-1 of the worked ribbon word", lambda: (pair_inverse(W_EX, C_EX), V_EX)),
        ("worked pair is a 3-ribbon word", lambda: (is_ribbon_word(W_EX, C_EX, 3), True)),
        ("48714235 is a nonzero 3-word", lambda: (is_nonzero_word(V_EX, 3), True)),
        ("class of 48714235 equals W of the worked tuple",
         lambda: (equivalence_class(V_EX, 3), enumerate_W(WORKED_TUPLE))),
        ("class of 8341275 equals W of the intro tuple (action oracle)",
         lambda: (equivalence_class(word("8341275"), 3), enumerate_W_by_action(INTRO_TUPLE))),
        ("intro tuple inner shapes acted on by 8341275",
         lambda: (act_on_tuple(((1,), (1, 1), (2, 1)), word("8341275"), 3), ((2,), (3, 2), (3, 3)))),
        ("letter-peeling identity, t = 0, in rot-le",
         lambda: (check_letter_peeling(1, (), 2, (), 1) and check_letter_peeling(2, (), 4, (), 2), True)),
        ("restricted tableau is an RSST", lambda: (validate_rsst(RESTRICTED_TABLEAU), True)),
        ("arrow-square corners of the arrow tableau", lambda: (_arrow_corners(ARROW_TABLEAU), ([1, 3, 10, 16], [31, 33]))),
        ("2x2 block a, a+1 / a+2, a+3 has one northwest arrow",
         lambda: ([k for _, _, k in arrows(Rsst.from_rows([[1, 2], [3, 4]]))], [NW_ARROW])),
        ("sqread of the intro tableau", lambda: (sqread(INTRO_TABLEAU), word("834152476"))),
        ("sqread of the arrow tableau", lambda: (sqread(ARROW_TABLEAU), ARROW_TABLEAU_READINGS[0][0])),
        ("square respecting readings of the arrow tableau",
         lambda: ([is_square_respecting(ARROW_TABLEAU, w) for w, _ in ARROW_TABLEAU_READINGS],
                  [ok for _, ok in ARROW_TABLEAU_READINGS])),
        ("invi_3 of the three (4,3,1) tableaux",
         lambda: ([rsst_statistics(t)[1] for t, _, _ in QLR_TABLEAUX], [4, 5, 5])),
        ("nonzero RSST of shape (4,3,1) with the worked c and D'",
         lambda: (sorted(sqread(t) for t in enumerate_rsst((4, 3, 1), contents=C_EX,
                                                          desi=tuple_descent_data(WORKED_TUPLE)[2], nonzero=True)),
                  sorted(w for _, w, _ in QLR_TABLEAUX))),
        ("first j-expansion step of J_(1,2,3,4)([2],[5],[14],[16])", _j_expand_golden),
        ("J_(3,3) with flags (6,6) reduces to the five leaf classes",
         lambda: (flagged_schur_lam(FlagSpec.flagged((3, 3), (6, 6)), 3), reduce_sum_lam(LEAF_WORDS, 3))),
        ("RSST side equals J side for (2,2,2) with flags (6,6)",
         lambda: (verify_theorem_main((2, 2, 2), (6, 6))["status"], "ok")),
        ("pairing of J_(4,3,1) with the worked tuple's LLT word sum", _pairing_golden(q4_2q5)),
        ("worked tuple: 48714235 in W", lambda: (V_EX in enumerate_W(WORKED_TUPLE), True)),
        ("intro tuple: 8341275 in W", lambda: (word("8341275") in enumerate_W(INTRO_TUPLE), True)),
        ("LLT polynomial has a q^6 term at Q_Des(48714235)",
         lambda: (llt_polynomial(WORKED_TUPLE).coeffs[descent_set(V_EX)][6] > 0, True)),
        ("Schur oracle coefficient at (4,3,1)", lambda: (qlr_oracle(WORKED_TUPLE)[(4, 3, 1)], q4_2q5)),
        ("RSST formula coefficient at (4,3,1)",
         lambda: (qlr_coefficients(WORKED_TUPLE, (4, 3, 1)).get((4, 3, 1)), q4_2q5)),
        ("content vector and descent data of the worked tuple",
         lambda: (tuple_descent_data(WORKED_TUPLE),
                  (C_EX, frozenset({(1, 4), (5, 7), (6, 8)}), Counter({(4, 1): 1, (7, 4): 1, (8, 5): 1})))),
        ("standardized shifted contents of the worked tuple",
         lambda: (sorted(standardized_contents(WORKED_TUPLE).items()),
                  sorted({(0, (1, 2)): 3, (1, (1, 2)): 4, (1, (1, 3)): 7, (1, (2, 2)): 1, (1, (2, 3)): 5,
                          (2, (1, 3)): 8, (2, (2, 2)): 2, (2, (2, 3)): 6}.items()))),
    ]
    return out


def _j_expand_golden():
    spec = FlagSpec.flagged((1, 2, 3, 4), (2, 5, 14, 16))
    first, base = j_expand(spec, 4)
    want_first = FlagSpec((1, 2, 3, 3), (tuple(range(1, 3)), tuple(range(1, 6)), tuple(range(1, 15)),
                                         tuple(range(1, 16))), ((), (), (16,)))
    want_base = FlagSpec.flagged((1, 2, 3, 4), (2, 5, 14, 15))
    return (first, base), (want_first, want_base)


def _pairing_golden(expected):
    def run():
        lam = (4, 3, 1)
        n = max(WORKED_TUPLE.content_vector())  # n bounds every letter
        spec = FlagSpec.flagged(conjugate(lam), (n,) * len(conjugate(lam)))
        f = {v: qpow(invi(v, 3)) for v in enumerate_W(WORKED_TUPLE)}
        return pair_with_words(spec, f), expected
    return run


def run_goldens() -> list:
    """``[(label, ok, got, expected)]``."""
    out = []
    for label, thunk in goldens():
        got, expected = thunk()
        out.append((label, got == expected, got, expected))
    return out
