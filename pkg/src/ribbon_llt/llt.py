"""LLT polynomials of tuples of skew shapes, spin LLT, and q-LR coefficients."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .laurent import ZERO as LZERO, qpow
from .quotient import ResourceGuardError, act_on_tuple, class_cap
from .rsst import enumerate_rsst, rsst_statistics
from .shapes import (
    SkewShape,
    add_ribbon,
    addable_ribbon_contents,
    contains,
    content,
    core_and_quotient,
    core_shifts,
    partition,
    partitions,
    searr_le,
)
from .symfunc import SymFunc, from_schur, schur_expand, schur_product, skew_schur_expand
from .words import invi


@dataclass(frozen=True)
class SkewTuple:
    components: tuple

    def __post_init__(self):
        comps = tuple(c if isinstance(c, SkewShape) else SkewShape.from_json(c) for c in self.components)
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_json(cls, obj) -> "SkewTuple":
        if isinstance(obj, dict):
            obj = obj["components"]
        return cls(tuple(SkewShape.from_json(c) for c in obj))

    @classmethod
    def from_outer_inner(cls, outers, inners, shifts=None) -> "SkewTuple":
        shifts = shifts or [0] * len(outers)
        return cls(tuple(SkewShape.from_outer_inner(o, i, s) for o, i, s in zip(outers, inners, shifts)))

    def to_json(self) -> list:
        return [c.to_json() for c in self.components]

    @property
    def k(self) -> int:
        return len(self.components)

    def __len__(self):
        return sum(len(c) for c in self.components)

    def labeled_cells(self) -> list:
        """``(component, cell)`` pairs in a fixed order."""
        return [(i, z) for i, comp in enumerate(self.components) for z in sorted(comp.cells)]

    def shifted_content(self, i: int, z) -> int:
        return self.k * content(z) + i

    def content_vector(self) -> tuple:
        return tuple(sorted(self.shifted_content(i, z) for i, z in self.labeled_cells()))

    def as_partition_pairs(self) -> tuple:
        """``(delta, gamma, d)`` with ``delta o_d v = gamma`` exactly for ``v`` in the W-set."""
        deltas, gammas, d = [], [], []
        for comp in self.components:
            outer, inner, shift = comp.to_outer_inner()
            gammas.append(outer)
            deltas.append(inner)
            d.append(shift)
        return tuple(deltas), tuple(gammas), tuple(d)


def _guard(n: int):
    if n > 12:
        raise ResourceGuardError(f"tuple of size {n} is too large for word enumeration")


def enumerate_W(beta: SkewTuple, k: int | None = None) -> set:
    """Words ``v`` with ``delta o_0 v = gamma``: linear extensions of the cells.

    Within a component a cell must follow its west and north neighbours;
    the letter recorded is the shifted content.  Cells sharing a letter lie
    on one diagonal of one component and are therefore ordered, so distinct
    extensions give distinct words.
    """
    k = beta.k if k is None else k
    if k != beta.k:
        raise ValueError(f"tuple has {beta.k} components, not {k}")
    labeled = beta.labeled_cells()
    n = len(labeled)
    _guard(n)
    index = {lz: j for j, lz in enumerate(labeled)}
    preds = []
    letters = []
    for i, (r, c) in labeled:
        m = 0
        for nb in ((r - 1, c), (r, c - 1)):
            j = index.get((i, nb))
            if j is not None:
                m |= 1 << j
        preds.append(m)
        letters.append(k * (c - r) + i)
    full = (1 << n) - 1
    out = set()
    cap = class_cap()
    memo = {}

    # memoized suffix sets per placed-cell mask
    def rec(mask):
        if mask == full:
            return [()]
        got = memo.get(mask)
        if got is not None:
            return got
        res = []
        for j in range(n):
            if not mask >> j & 1 and preds[j] & mask == preds[j]:
                x = letters[j]
                for tail in rec(mask | 1 << j):
                    res.append((x,) + tail)
                    if len(res) > cap:
                        raise ResourceGuardError(f"W-set exceeds {cap} words")
        memo[mask] = res
        return res

    out.update(rec(0))
    return out


def enumerate_W_by_action(beta: SkewTuple) -> set:
    """Oracle: filter permutations of the content vector through the action."""
    from itertools import permutations

    deltas, gammas, d = beta.as_partition_pairs()
    k = beta.k
    c = beta.content_vector()
    _guard(len(c))
    return {v for v in set(permutations(c)) if act_on_tuple(deltas, v, k, d) == gammas}


def llt_polynomial(beta: SkewTuple, k: int | None = None) -> SymFunc:
    """``sum_{v in W(beta)} q^{invi_k(v)} Q_{Des(v)}``."""
    k = beta.k if k is None else k
    words = enumerate_W(beta, k)
    return SymFunc.from_words(len(beta), ((v, qpow(invi(v, k))) for v in sorted(words)))


def tuple_descent_data(beta: SkewTuple, k: int | None = None) -> tuple:
    """``(c, D, D')`` for the tuple.

    ``D'`` counts pairs ``z <_se z'`` with shifted contents differing by
    ``k``; ``D`` records the same pairs through standardized labels.
    """
    k = beta.k if k is None else k
    labeled = beta.labeled_cells()
    sc = {lz: k * content(lz[1]) + lz[0] for lz in labeled}
    c = tuple(sorted(sc.values()))
    stand = standardized_contents(beta)
    dprime = Counter()
    dset = set()
    for z in labeled:
        for zp in labeled:
            if z[0] == zp[0] and sc[z] == sc[zp] + k and z != zp and searr_le(z[1], zp[1]):
                dprime[(sc[z], sc[zp])] += 1
                dset.add((stand[zp], stand[z]))
    return c, frozenset(dset), dprime


def standardized_contents(beta: SkewTuple) -> dict:
    """Map ``(component, cell)`` to its standardized shifted content."""
    k = beta.k
    labeled = beta.labeled_cells()
    c = beta.content_vector()
    first = {}
    for pos, x in enumerate(c):
        first.setdefault(x, pos + 1)
    out = {}
    groups = {}
    for lz in labeled:
        groups.setdefault(k * content(lz[1]) + lz[0], []).append(lz)
    for x, g in groups.items():
        for off, lz in enumerate(sorted(g, key=lambda t: t[1][0])):
            out[lz] = first[x] + off
    return out


def qlr_coefficients(beta: SkewTuple, lam: Sequence[int] | None = None) -> dict:
    """Schur coefficients of the LLT polynomial of a 3-tuple, via nonzero RSST.

    Sums ``q^{invi3(T)}`` over nonzero RSST of shape ``lam`` whose sorted
    entries are the content vector and whose 3-descent multiset matches.
    """
    if beta.k != 3:
        raise ValueError("the tableau formula is for 3-tuples")
    c, _, dprime = tuple_descent_data(beta, 3)
    n = len(c)
    shapes = [partition(lam)] if lam is not None else list(partitions(n))
    out = {}
    for shape in shapes:
        if sum(shape) != n:
            continue
        total = LZERO
        for t in enumerate_rsst(shape, contents=c, desi=dprime, nonzero=True):
            total = total + qpow(rsst_statistics(t)[1])
        if total:
            out[shape] = total
    return out


def qlr_oracle(beta: SkewTuple) -> dict:
    return schur_expand(llt_polynomial(beta))


def skew_schur_product(beta: SkewTuple) -> dict:
    """Schur expansion of ``prod_i s_{beta^(i)}`` by the LR rule."""
    acc = {(): 1}
    for comp in beta.components:
        outer, inner, _ = comp.to_outer_inner()
        acc = schur_product(acc, skew_schur_expand(outer, inner))
    return acc


def q1_factorization_holds(beta: SkewTuple) -> bool:
    g = llt_polynomial(beta).at_one()
    return g == from_schur(skew_schur_product(beta)) if len(beta) else True


def is_positive(coeffs: dict) -> bool:
    return all(v.is_nonnegative_polynomial() for v in coeffs.values())


# ---------------------------------------------------------------------------
# spin LLT


def ribbon_words(mu: Sequence[int], nu: Sequence[int], k: int) -> list:
    """``(v, total spin)`` over words whose ribbon action takes ``nu`` to ``mu``."""
    mu, nu = partition(mu), partition(nu)
    if not contains(mu, nu):
        raise ValueError(f"{nu} is not contained in {mu}")
    n = sum(mu) - sum(nu)
    if n % k:
        raise ValueError(f"{mu}/{nu} is not tileable by {k}-ribbons")
    out = []

    def rec(cur, word, spin):
        if cur == mu:
            out.append((tuple(word), spin))
            return
        for c in addable_ribbon_contents(cur, k):
            step = add_ribbon(cur, k, c)
            if step is None or not contains(mu, step[0]):
                continue
            word.append(c)
            rec(step[0], word, spin + step[1])
            word.pop()

    rec(nu, [], 0)
    if not out:
        raise ValueError(f"{mu}/{nu} is not tileable by {k}-ribbons")
    return out


def spin_llt(mu: Sequence[int], nu: Sequence[int], k: int) -> SymFunc:
    """``sum qlam^{spin} Q_{Des(v)}`` over ribbon words from ``nu`` to ``mu``."""
    words = ribbon_words(mu, nu, k)
    return SymFunc.from_words(len(words[0][0]), ((v, qpow(s)) for v, s in words))


def tuple_from_ribbon_shape(mu: Sequence[int], nu: Sequence[int], k: int) -> SkewTuple:
    """The tuple attached to ``mu/nu``: quotient skew shapes shifted east by the core offsets."""
    core_mu, quot_mu = core_and_quotient(mu, k)
    core_nu, quot_nu = core_and_quotient(nu, k)
    if core_mu != core_nu:
        raise ValueError(f"{mu}/{nu} is not tileable by {k}-ribbons")
    d = core_shifts(core_mu, k)
    comps = []
    for i in range(k):
        if not contains(quot_mu[i], quot_nu[i]):
            raise ValueError(f"{mu}/{nu} is not tileable by {k}-ribbons")
        comps.append(SkewShape.from_outer_inner(quot_mu[i], quot_nu[i], d[i]))
    return SkewTuple(tuple(comps))


def spin_inv_exponent(mu: Sequence[int], nu: Sequence[int], k: int):
    """``e`` with ``G_beta(q = qlam^-2) = qlam^e G^{(k)}_{mu/nu}``, or None if no such ``e``."""
    beta = tuple_from_ribbon_shape(mu, nu, k)
    g = llt_polynomial(beta).substitute_power(-2)
    return g.divide_monomial(spin_llt(mu, nu, k))


# ---------------------------------------------------------------------------
# sample generators for sweeps


def random_skew_tuple(rng, k: int = 3, max_size: int = 8, max_shift: int = 2, min_size: int = 1) -> SkewTuple:
    """A random ``k``-tuple with between ``min_size`` and ``max_size`` cells in total."""
    from .shapes import partitions_up_to

    while True:
        comps = []
        budget = rng.randint(min_size, max_size)
        for _ in range(k):
            outer = rng.choice(partitions_up_to(min(budget + 2, 6)))
            inners = [p for p in partitions_up_to(sum(outer)) if contains(outer, p)
                      and sum(outer) - sum(p) <= budget]
            inner = rng.choice(inners)
            budget -= sum(outer) - sum(inner)
            comps.append(SkewShape.from_outer_inner(outer, inner, rng.randint(-max_shift, max_shift)))
        beta = SkewTuple(tuple(comps))
        if min_size <= len(beta) <= max_size:
            return beta


def tileable_pairs(max_size: int, k: int) -> list:
    """Every ``(mu, nu)`` with ``nu`` reached from ``mu`` by removing ribbons, ``|mu/nu| <= max_size``."""
    from .shapes import partitions_up_to, removable_ribbon_contents, remove_ribbon

    out = []
    for mu in partitions_up_to(max_size):
        seen = {mu}
        frontier = [mu]
        for _ in range(max_size // k):
            nxt = []
            for p in frontier:
                for c in removable_ribbon_contents(p, k):
                    q = remove_ribbon(p, k, c)[0]
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        out.extend((mu, nu) for nu in sorted(seen) if nu != mu)
    return out
