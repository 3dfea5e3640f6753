"""Words over the integers and the k-descent / k-inversion statistics.

A word is a tuple of integers; letters may be negative.  ``u_i`` is the
one-letter word ``(i,)``.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

Word = tuple


def word(letters) -> Word:
    if isinstance(letters, str):
        letters = [int(ch) for ch in letters]
    return tuple(int(x) for x in letters)


def descent_set(v: Sequence[int]) -> frozenset:
    """``{i : v_i > v_{i+1}}`` with 1-based positions."""
    return frozenset(i + 1 for i in range(len(v) - 1) if v[i] > v[i + 1])


def _check_pair(w, c):
    if len(w) != len(c):
        raise ValueError("w and c have different lengths")
    if any(c[i] > c[i + 1] for i in range(len(c) - 1)):
        raise ValueError("content vector must be weakly increasing")


def des_pair(w: Sequence[int], c: Sequence[int], k: int) -> frozenset:
    """``Des_k(w, c)``: pairs ``(i, j)``, 1-based, with ``w_i > w_j`` and ``c_j - c_i = k``."""
    _check_pair(w, c)
    n = len(w)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j] and c[j] - c[i] == k
    )


def inv_pair(w: Sequence[int], c: Sequence[int], k: int) -> int:
    _check_pair(w, c)
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j] and 0 < c[j] - c[i] < k)


def desi(v: Sequence[int], k: int) -> Counter:
    """Multiset of letter pairs ``(v_i, v_j)``, ``i < j``, with ``v_i - v_j = k``."""
    out = Counter()
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if v[i] - v[j] == k:
                out[(v[i], v[j])] += 1
    return out


def invi(v: Sequence[int], k: int) -> int:
    n = len(v)
    return sum(1 for i in range(n) for j in range(i + 1, n) if 0 < v[i] - v[j] < k)


def multiset_to_json(m: Counter) -> list:
    """Sorted ``[[item, multiplicity], ...]``; pair items become lists."""
    out = []
    for key in sorted(m):
        item = list(key) if isinstance(key, tuple) else key
        out.append([item, m[key]])
    return out


def standardize(v: Sequence[int]) -> Word:
    """Relabel by ``1..n`` preserving order; equal letters increase left to right."""
    order = sorted(range(len(v)), key=lambda i: (v[i], i))
    out = [0] * len(v)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def inverse_permutation(w: Sequence[int]) -> Word:
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(w)} is not a permutation of 1..{n}")
    out = [0] * n
    for j, x in enumerate(w, start=1):
        out[x - 1] = j
    return tuple(out)


def pair_inverse(w: Sequence[int], c: Sequence[int]) -> Word:
    """``(w, c)^{-1}``: the word with ``v_i = c_j`` where ``w_j = i``."""
    if len(w) != len(c):
        raise ValueError("w and c have different lengths")
    winv = inverse_permutation(w)
    return tuple(c[winv[i] - 1] for i in range(len(w)))


def word_to_pair(v: Sequence[int]) -> tuple:
    """Inverse of :func:`pair_inverse`: ``v -> ((v^stand)^{-1}, sorted v)``."""
    return inverse_permutation(standardize(v)), tuple(sorted(v))


def is_ribbon_word(w: Sequence[int], c: Sequence[int], k: int) -> bool:
    """Check the k-ribbon word condition on a pair ``(w, c)``."""
    _check_pair(w, c)
    n = len(w)
    for i in range(n - 1):
        if c[i] != c[i + 1]:
            continue
        lo, hi = w[i], w[i + 1]
        if not any(c[h] == c[i] - k and lo < w[h] <= hi for h in range(n)):
            return False
        if not any(c[j] == c[i] + k and lo <= w[j] < hi for j in range(n)):
            return False
    return True


def is_nonzero_word(v: Sequence[int], k: int) -> bool:
    """True iff ``v`` is nonzero in the quotient algebra with parameter ``k``.

    Between any two equal letters ``a`` there must be an ``a-k`` and an
    ``a+k`` (in either order).  It suffices to check consecutive
    occurrences of each letter.
    """
    last = {}
    for j, a in enumerate(v):
        i = last.get(a)
        if i is not None:
            between = set(v[i + 1 : j])
            if (a - k) not in between or (a + k) not in between:
                return False
        last[a] = j
    return True
