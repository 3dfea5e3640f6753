"""Instance checker for the letter-peeling identity in the rot-le quotient.

For ``alpha = (a, a, a+1, ..., a+t)`` and admissible ``m, x, y, n``::

    J_alpha([m] <x y_1..y_t> [m], [n_1], ..., [n_t])
        == x J_alpha([m] <y_1..y_t> [m], [n_1], ..., [n_t])

The general statement is open; ``t = 0`` and ``t = 1`` are known.  A
``False`` here would be a counterexample.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .ncsf import FlagSpec, flagged_schur
from .quotient import DEFAULT_SPAN_CAP, RelationSystem, ResourceGuardError, equal_in_quotient


def peeling_hypotheses(m: int, n: Sequence[int], x: int, y: Sequence[int], a: int) -> list:
    """Violated hypotheses (empty when admissible)."""
    n, y = tuple(n), tuple(y)
    bad = []
    if len(n) != len(y):
        bad.append("len(n) == len(y)")
    if a < 0 or m < 0:
        bad.append("a, m >= 0")
    chain = (m,) + n
    if any(chain[i] > chain[i + 1] for i in range(len(chain) - 1)):
        bad.append("m <= n_1 <= ... <= n_t")
    if any(ni >= yi for ni, yi in zip(n, y)):
        bad.append("n_i < y_i")
    if not m < x:
        bad.append("m < x")
    if y and y[0] - x < 3:
        bad.append("y_1 - x >= 3")
    if any(y[i + 1] - y[i] < 3 for i in range(len(y) - 1)):
        bad.append("y_{i+1} - y_i >= 3")
    return bad


def peeling_sides(m: int, n: Sequence[int], x: int, y: Sequence[int], a: int) -> tuple:
    """Free-algebra expansions ``(lhs, rhs)``."""
    n, y = tuple(n), tuple(y)
    t = len(y)
    alpha = (a, a) + tuple(a + i for i in range(1, t + 1))
    flags = (m, m) + n
    aug = ((x,) + y,) + ((),) * t
    lhs = flagged_schur(FlagSpec.flagged(alpha, flags, augments=aug))
    rhs = flagged_schur(FlagSpec.flagged(alpha, flags, augments=(y,) + ((),) * t, prefix=(x,)))
    return lhs, rhs


def word_length(m: int, n: Sequence[int], x: int, y: Sequence[int], a: int) -> int:
    t = len(y)
    return 2 * a + sum(a + i for i in range(1, t + 1)) + 1 + t


def check_letter_peeling(m: int, n: Sequence[int], x: int, y: Sequence[int], a: int,
                         span_cap: int = DEFAULT_SPAN_CAP) -> bool:
    """Compare both sides in the rot-le quotient with ``k = 3``."""
    bad = peeling_hypotheses(m, n, x, y, a)
    if bad:
        raise ValueError("hypothesis violated: " + "; ".join(bad))
    if word_length(m, n, x, y, a) > span_cap:
        raise ResourceGuardError(f"words of length {word_length(m, n, x, y, a)} exceed span cap {span_cap}")
    lhs, rhs = peeling_sides(m, n, x, y, a)
    return equal_in_quotient(lhs, rhs, RelationSystem("rot_le", 3), span_cap)


def admissible_instances(t: int, max_letter: int, max_a: int = 3,
                         span_cap: int = DEFAULT_SPAN_CAP) -> Iterator[tuple]:
    """Every admissible ``(m, n, x, y, a)`` with letters at most ``max_letter``
    whose words fit under ``span_cap``.  ``m`` starts at 1."""
    def ys(prev, count):
        if count == 0:
            yield ()
            return
        for v in range(prev + 3, max_letter + 1):
            for rest in ys(v, count - 1):
                yield (v,) + rest

    def ns(prev, yv):
        if not yv:
            yield ()
            return
        for v in range(prev, yv[0]):
            for rest in ns(v, yv[1:]):
                yield (v,) + rest

    for a in range(1, max_a + 1):
        for m in range(1, max_letter + 1):
            for x in range(m + 1, max_letter + 1):
                for y in ys(x, t):
                    for n in ns(m, y):
                        if word_length(m, n, x, y, a) <= span_cap:
                            yield m, n, x, y, a


check_conjecture_5_1 = check_letter_peeling
