"""Noncommutative elementary symmetric functions and flagged Schur functions.

``J_alpha(S_1 <w^1> S_2 ... <w^{l-1}> S_l)`` is the signed sum over
permutations ``pi`` of products ``e_{alpha_i + pi(i) - i}(S_i)`` with the
augmentation words interleaved.  We also allow a prefix word (slot 0),
which is how a left factor ``v J`` or a letter peeled into position 0 is
represented.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .laurent import LaurentPoly, ZERO as LZERO
from .quotient import (
    AlgebraElement,
    RelationSystem,
    ResourceGuardError,
    canonical_form_lam,
    equal_in_quotient,
    reduce_lam,
)
from .rsst import Rsst, enumerate_rsst, fill_rsst, sqread, validate_rsst, is_square_respecting
from .shapes import conjugate, partition, RestrictedShape, is_restricted_pair

DEFAULT_MAX_COLUMNS = 8


def elem_sym(d: int, s: Iterable[int]) -> AlgebraElement:
    """Sum of the strictly decreasing ``d``-letter words over ``s``."""
    s = sorted(set(s), reverse=True)
    if d < 0 or d > len(s):
        return AlgebraElement()
    if d == 0:
        return AlgebraElement.one()
    return AlgebraElement.from_words(combinations(s, d))


def _decreasing_words(d: int, s: tuple) -> list:
    if d < 0 or d > len(s):
        return []
    if d == 0:
        return [()]
    return list(combinations(sorted(s, reverse=True), d))


def prefix_set(m: int) -> tuple:
    """``[m] = {1, ..., m}``; ``[0]`` is empty."""
    return tuple(range(1, m + 1))


@dataclass(frozen=True)
class FlagSpec:
    """Data of an augmented column-flagged Schur function.

    ``augments`` has ``l - 1`` words (between consecutive columns);
    ``prefix`` multiplies on the left.  Entries of ``alpha`` may be
    negative: the defining sum makes sense for any integer vector, and
    j-expansion can lower an entry below zero.
    """

    alpha: tuple
    supports: tuple
    augments: tuple = ()
    prefix: tuple = ()

    def __post_init__(self):
        alpha = tuple(int(a) for a in self.alpha)
        supports = tuple(tuple(sorted(set(int(x) for x in s))) for s in self.supports)
        l = len(alpha)
        if l < 1:
            raise ValueError("need at least one column")
        if len(supports) != l:
            raise ValueError("one support per column is required")
        aug = tuple(tuple(int(x) for x in w) for w in self.augments)
        if not aug:
            aug = ((),) * (l - 1)
        if len(aug) != l - 1:
            raise ValueError(f"expected {l - 1} augmentation words, got {len(aug)}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "supports", supports)
        object.__setattr__(self, "augments", aug)
        object.__setattr__(self, "prefix", tuple(int(x) for x in self.prefix))

    @classmethod
    def flagged(cls, alpha, flags, augments=(), prefix=()) -> "FlagSpec":
        return cls(tuple(alpha), tuple(prefix_set(n) for n in flags), augments, prefix)

    @property
    def length(self) -> int:
        return len(self.alpha)

    def slot(self, i: int) -> tuple:
        """Slot 0 is the prefix, slot ``i`` sits between columns ``i`` and ``i+1``."""
        return self.prefix if i == 0 else self.augments[i - 1]

    def with_slot(self, i: int, w: tuple) -> "FlagSpec":
        if i == 0:
            return replace(self, prefix=tuple(w))
        aug = list(self.augments)
        aug[i - 1] = tuple(w)
        return replace(self, augments=tuple(aug))

    def flags(self) -> tuple | None:
        out = []
        for s in self.supports:
            if s != prefix_set(len(s)):
                return None
            out.append(len(s))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "supports": [list(s) for s in self.supports],
            "augments": [list(w) for w in self.augments],
            "prefix": list(self.prefix),
        }


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def flagged_schur(spec: FlagSpec, max_columns: int = DEFAULT_MAX_COLUMNS) -> AlgebraElement:
    """Expand ``J`` in the free algebra (no relations applied)."""
    l = spec.length
    if l > max_columns:
        raise ResourceGuardError(f"{l} columns exceeds the permutation guard {max_columns}")
    total = {}
    for pi in permutations(range(1, l + 1)):
        sign = _perm_sign(pi)
        words = [spec.prefix]
        for i in range(l):
            d = spec.alpha[i] + pi[i] - (i + 1)
            opts = _decreasing_words(d, spec.supports[i])
            if not opts:
                words = []
                break
            words = [w + x + (spec.augments[i] if i < l - 1 else ()) for w in words for x in opts]
        for w in words:
            total[w] = total.get(w, 0) + sign
    return AlgebraElement({w: c for w, c in total.items() if c})


def j_coefficient(spec: FlagSpec, v: Sequence[int]) -> int:
    """Coefficient of the word ``v`` in the free expansion of ``J``.

    Only the permutations whose segment lengths fit ``v`` contribute, so
    this avoids expanding ``J``.
    """
    v = tuple(v)
    l = spec.length
    if v[: len(spec.prefix)] != spec.prefix:
        return 0
    supports = [set(s) for s in spec.supports]
    total = 0

    def rec(i, pos, used, sign):
        nonlocal total
        if i == l:
            if pos == len(v):
                total += sign
            return
        for p in range(1, l + 1):
            if used >> p & 1:
                continue
            d = spec.alpha[i] + p - (i + 1)
            if d < 0:
                continue
            seg = v[pos : pos + d]
            if len(seg) != d or any(x not in supports[i] for x in seg):
                continue
            if any(seg[t] <= seg[t + 1] for t in range(d - 1)):
                continue
            end = pos + d
            aug = spec.augments[i] if i < l - 1 else ()
            if v[end : end + len(aug)] != aug:
                continue
            # sign of pi accumulates as the number of larger values already used
            flips = bin(used >> (p + 1)).count("1")
            rec(i + 1, end + len(aug), used | 1 << p, -sign if flips % 2 else sign)

    rec(0, len(spec.prefix), 0, 1)
    return total


def pair_with_words(spec: FlagSpec, weighted: Mapping) -> LaurentPoly:
    """``<J, sum c_v v>`` for a finite word sum ``{v: c_v}``."""
    out = LZERO
    for v, c in weighted.items():
        a = j_coefficient(spec, v)
        if a:
            out = out + LaurentPoly._coerce(c) * a
    return out


def flagged_schur_lam(spec: FlagSpec, k: int = 3, max_columns: int = DEFAULT_MAX_COLUMNS) -> dict:
    """``J`` reduced in Lam's algebra, as ``{class representative: coefficient}``.

    Column-by-column dynamic programming: a state is the set of values of
    ``pi`` used so far plus the reduced prefix word.  Reducing prefixes is
    sound because the quotient map is an algebra homomorphism.
    """
    l = spec.length
    if l > max_columns:
        raise ResourceGuardError(f"{l} columns exceeds the permutation guard {max_columns}")
    start = canonical_form_lam(spec.prefix, k)
    if start.is_zero:
        return {}
    states = {(0, start.rep): LaurentPoly.monomial(start.power)}
    for i in range(l):
        aug = spec.augments[i] if i < l - 1 else ()
        nxt = {}
        for (used, rep), coeff in states.items():
            for p in range(1, l + 1):
                bit = 1 << (p - 1)
                if used & bit:
                    continue
                d = spec.alpha[i] + p - (i + 1)
                opts = _decreasing_words(d, spec.supports[i])
                if not opts:
                    continue
                # sign of pi grows by the number of used values above p
                flips = bin(used >> p).count("1")
                c = -coeff if flips % 2 else coeff
                for x in opts:
                    nf = canonical_form_lam(rep + x + aug, k)
                    if nf.is_zero:
                        continue
                    key = (used | bit, nf.rep)
                    s = nxt.get(key, LZERO) + c.shift(nf.power)
                    if s:
                        nxt[key] = s
                    else:
                        nxt.pop(key, None)
        states = nxt
    out = {}
    for (_, rep), c in states.items():
        s = out.get(rep, LZERO) + c
        if s:
            out[rep] = s
        else:
            out.pop(rep, None)
    return out


def j_expand(spec: FlagSpec, j: int) -> tuple:
    """Split column ``j`` (1-based) with ``S_j = [m]`` via
    ``e_d([m]) = u_m e_{d-1}([m-1]) + e_d([m-1])``.

    Returns the two specs; the first carries the letter ``m`` at the end of
    slot ``j - 1``.
    """
    if not 1 <= j <= spec.length:
        raise ValueError(f"column {j} out of range")
    s = spec.supports[j - 1]
    m = len(s)
    if m == 0 or s != prefix_set(m):
        raise ValueError(f"column {j} support is not a nonempty [m]")
    supports = list(spec.supports)
    supports[j - 1] = prefix_set(m - 1)
    alpha_minus = list(spec.alpha)
    alpha_minus[j - 1] -= 1
    base = replace(spec, supports=tuple(supports))
    first = replace(base, alpha=tuple(alpha_minus))
    first = first.with_slot(j - 1, first.slot(j - 1) + (m,))
    return first, base


def reduce_sum_lam(words: Iterable, k: int = 3) -> dict:
    """Reduce a sum of words (unit coefficients) in Lam's algebra."""
    out = {}
    for w in words:
        nf = canonical_form_lam(w, k)
        if nf.is_zero:
            continue
        s = out.get(nf.rep, LZERO) + LaurentPoly.monomial(nf.power)
        if s:
            out[nf.rep] = s
        else:
            out.pop(nf.rep, None)
    return out


def _diff(a: dict, b: dict) -> dict:
    keys = set(a) | set(b)
    out = {}
    for w in keys:
        d = a.get(w, LZERO) - b.get(w, LZERO)
        if d:
            out[w] = d
    return out


def _terms_json(d: dict) -> list:
    return [[list(w), c.to_triples()] for w, c in sorted(d.items())]


def verify_theorem_main(lam: Sequence[int], flags: Sequence[int], k: int = 3) -> dict:
    """Compare ``J_{lam'}^{flags}`` with the sum of sqread over flagged RSST of shape ``lam``."""
    lam = partition(lam)
    cols = conjugate(lam)
    flags = tuple(int(n) for n in flags)
    if len(flags) != len(cols):
        raise ValueError(f"need {len(cols)} flags for shape {lam}")
    if any(n < 0 for n in flags) or any(flags[i] > flags[i + 1] for i in range(len(flags) - 1)):
        raise ValueError("flags must be weakly increasing and nonnegative")
    lhs = flagged_schur_lam(FlagSpec.flagged(cols, flags), k)
    rhs = reduce_sum_lam((sqread(t) for t in enumerate_rsst(lam, flags=flags)), k)
    diff = _diff(lhs, rhs)
    return {
        "status": "ok" if not diff else "mismatch",
        "lambda": list(lam),
        "flags": list(flags),
        "lhs_terms": _terms_json(lhs),
        "rhs_terms": _terms_json(rhs),
        "diff": _terms_json(diff),
    }


def _check(cond: bool, msg: str):
    if not cond:
        raise ValueError(f"hypothesis violated: {msg}")


def verify_equal_columns_commute(a: int, m: int, x: int, k: int = 3) -> bool:
    """``J_{(a,a)}([m] <x> [m]) == x J_{(a,a)}([m], [m])`` for ``m < x``."""
    _check(m < x, "m < x")
    lhs = FlagSpec.flagged((a, a), (m, m), augments=((x,),))
    rhs = FlagSpec.flagged((a, a), (m, m), prefix=(x,))
    return flagged_schur_lam(lhs, k) == flagged_schur_lam(rhs, k)


def verify_equal_columns_general(alpha: Sequence[int], flags: Sequence[int], j: int, x: int, k: int = 3) -> bool:
    """Moving ``x`` from slot ``j`` to slot ``j - 1`` when ``alpha_j = alpha_{j+1}``,
    ``n_j = n_{j+1}`` and ``x`` exceeds them."""
    alpha, flags = tuple(alpha), tuple(flags)
    _check(1 <= j < len(alpha), "1 <= j < l")
    _check(alpha[j - 1] == alpha[j], "alpha_j = alpha_{j+1}")
    _check(flags[j - 1] == flags[j], "n_j = n_{j+1}")
    _check(flags[j - 1] < x, "m < x")
    base = FlagSpec.flagged(alpha, flags)
    return flagged_schur_lam(base.with_slot(j, (x,)), k) == flagged_schur_lam(base.with_slot(j - 1, (x,)), k)


def peel_letter_hypotheses(alpha, flags, j, x, w_rest, v, k) -> list:
    """Violated hypotheses (empty when the instance is admissible)."""
    alpha, n = tuple(alpha), tuple(flags)
    bad = []
    l = len(alpha)
    if not 1 <= j < l:
        return ["1 <= j < l"]
    if alpha[j - 1] != alpha[j]:
        bad.append("(a) alpha_j = alpha_{j+1}")
    if any(a < 0 for a in n) or any(n[i] > n[i + 1] for i in range(l - 1)):
        bad.append("(b) flags weakly increasing")
    if j >= 2 and not n[j - 2] < n[j] - 3:
        bad.append("(b) n_{j-1} < n_{j+1} - 3")
    if n[j] != n[j - 1] + 1:
        bad.append("(b) n_{j+1} = n_j + 1")
    if not (x > n[j] and x != n[j] + k):
        bad.append("(c) x > n_{j+1}, x != n_{j+1} + k")
    if not canonical_form_lam(tuple(v) + (n[j],), k).is_zero:
        bad.append("(d) v n_{j+1} = 0")
    if any(y <= n[j] + k for y in w_rest):
        bad.append("(e) letters of w^R exceed n_{j+1} + k")
    return bad


def verify_peel_letter(alpha, flags, j, x, w_rest=(), v=(), k: int = 3) -> bool:
    bad = peel_letter_hypotheses(alpha, flags, j, x, w_rest, v, k)
    if bad:
        raise ValueError("hypothesis violated: " + "; ".join(bad))
    base = FlagSpec.flagged(alpha, flags, prefix=tuple(v))
    lhs = base.with_slot(j, (x,) + tuple(w_rest))
    rhs = base.with_slot(j, tuple(w_rest))
    rhs = rhs.with_slot(j - 1, rhs.slot(j - 1) + (x,))
    return flagged_schur_lam(lhs, k) == flagged_schur_lam(rhs, k)


def commute_elementary_lam(i: int, j: int, s: Iterable[int], k: int) -> bool:
    s = tuple(s)
    f = elem_sym(i, s) * elem_sym(j, s) - elem_sym(j, s) * elem_sym(i, s)
    return not reduce_lam(f, k)


def commute_elementary(i: int, j: int, s: Iterable[int], rs: RelationSystem) -> bool:
    s = tuple(s)
    return equal_in_quotient(elem_sym(i, s) * elem_sym(j, s), elem_sym(j, s) * elem_sym(i, s), rs)


# ---------------------------------------------------------------------------
# the technical flagged statement on restricted shapes


def _restricted_indices(lam: tuple, alpha: tuple) -> tuple:
    l = len(lam)
    a = alpha + (0,)
    j = min([i + 1 for i in range(l) if a[i] > 0 and a[i] >= a[i + 1]] + [l + 1])
    jp = max([i + 1 for i in range(l) if alpha[i] < lam[i]] + [0])
    return j, jp


def _alpha_form_ok(lam: tuple, alpha: tuple, j: int, jp: int) -> bool:
    """Check the shape of ``alpha``: zeros, then a run increasing by one
    (optionally with one repeated value at position ``j``), then
    ``alpha_i = lam_i`` after ``j'``."""
    l = len(lam)
    if any(alpha[i] != lam[i] for i in range(jp, l)):
        return False
    nxt = lam[jp] if jp < l else 0
    if jp >= 1 and not alpha[jp - 1] >= nxt - 1:
        return False
    head = list(alpha[:jp])
    z = 0
    while z < len(head) and head[z] == 0:
        z += 1
    run = head[z:]
    if not run:
        return j in (jp, jp + 1)
    if z > 0 and run[0] != 1:
        return False
    repeats = [i for i in range(1, len(run)) if run[i] == run[i - 1]]
    steps_ok = all(run[i] - run[i - 1] in (0, 1) for i in range(1, len(run)))
    if not steps_ok or len(repeats) > 1:
        return False
    if repeats:
        # top line: j < j' is the position of the first copy of a
        return j == z + repeats[0] and j < jp
    return j in (jp, jp + 1)


def restricted_flag_hypotheses(lam, alpha, R: Rsst, v, w, flags) -> list:
    lam, alpha = tuple(lam), tuple(alpha)
    bad = []
    if len(alpha) != len(lam) or not is_restricted_pair(lam, alpha):
        return ["restricted shape"]
    j, jp = _restricted_indices(lam, alpha)
    if not _alpha_form_ok(lam, alpha, j, jp):
        bad.append("(i) form of alpha")
    shape = RestrictedShape(lam, alpha)
    if set(R.cells) != set(shape.cells()) or not validate_rsst(R):
        bad.append("(ii) R is an RSST of the restricted shape")
        return bad
    m = R.mapping
    r = [m[(alpha[c] + 1, c + 1)] for c in range(jp)]
    rr = lambda c: r[c - 1]
    w = tuple(w)
    vw = tuple(v) + w
    if not is_square_respecting(R, vw):
        bad.append("(iii) vw square respecting")
    border = [rr(c) for c in range(j + 1, jp + 1)]
    it = iter(border)
    if not all(any(x == y for y in it) for x in w):
        bad.append("(iii) w subsequence of r_{j+1}..r_{j'}")
    if j + 1 <= jp and j >= 1 and rr(j + 1) > rr(j) + 1 and rr(j + 1) not in w:
        bad.append("(iii) w contains r_{j+1}")
    n = tuple(flags)
    if len(n) != len(lam) or any(x < 0 for x in n) or any(n[i] > n[i + 1] for i in range(len(n) - 1)):
        bad.append("(iv) flags")
        return bad
    for c in range(1, jp + 1):
        if n[c - 1] == rr(c) - 1:
            continue
        if c == j and n[c - 1] < rr(c) - 1 and (not w or w[0] != rr(j) + 1):
            continue
        bad.append(f"(v) n_{c}")
    return bad


def verify_restricted_flag(lam, alpha, R: Rsst, v, w, flags, k: int = 3) -> dict:
    bad = restricted_flag_hypotheses(lam, alpha, R, v, w, flags)
    if bad:
        raise ValueError("hypothesis violated: " + "; ".join(bad))
    lam, alpha = tuple(lam), tuple(alpha)
    j, _ = _restricted_indices(lam, alpha)
    spec = FlagSpec.flagged(alpha, flags, prefix=tuple(v))
    if j <= len(lam) - 1:
        spec = spec.with_slot(j, tuple(w))
    elif w:
        raise ValueError("w must be empty when j >= l")
    lhs = flagged_schur_lam(spec, k)
    full_cells = RestrictedShape(lam, (0,) * len(lam)).cells()
    bounds = {c + 1: n for c, n in enumerate(flags)}
    rhs_words = []
    for T in fill_rsst(full_cells, fixed=R.mapping, col_bounds=bounds):
        rhs_words.append(sqread(T))
    rhs = reduce_sum_lam(rhs_words, k)
    diff = _diff(lhs, rhs)
    return {"status": "ok" if not diff else "mismatch", "lhs_terms": _terms_json(lhs),
            "rhs_terms": _terms_json(rhs), "diff": _terms_json(diff)}


# names used by the public operation list
verify_lemma_4_1 = verify_equal_columns_commute
verify_corollary_4_3 = verify_peel_letter
