"""The free algebra on letters ``u_i`` and its quotients.

Four relation systems are supported:

``lam``
    Lam's ribbon algebra with parameter ``k``: ``u_i^2 = 0``,
    ``u_{i+k} u_i u_{i+k} = 0``, ``u_i u_{i+k} u_i = 0``, far commutation
    for ``|i - j| > k`` and ``u_i u_j = q^{-1} u_j u_i`` for ``0 < j - i < k``.
``lam_le``
    Kill every word that vanishes in ``lam``, keep far commutation, and
    replace the q-commutations by ``(ac - ca) b = b (ac - ca)`` for
    ``a < b < c``, ``c - a <= k``.
``rot_le``
    Kill words with a repeated letter; ``acb = cab`` and ``bac = bca`` for
    ``c - a > k``; the same four-term relation for ``c - a <= k``.
``bij``
    ``rot_le`` plus, for each close triple, either the Knuth pair
    ``acb = cab, bac = bca`` or the rotation pair ``acb = bac, cab = bca``.

``lam`` is decided by canonical forms (the basis of nonzero classes is
known explicitly).  The other three are q-free, so membership is decided
one letter multiset at a time by exact elimination.
"""

from __future__ import annotations

import heapq
import os
import threading
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .laurent import LaurentPoly, ONE, ZERO as LZERO
from .linalg import SparseEchelon
from .shapes import add_cell, add_ribbon, partition
from .words import invi, is_nonzero_word, is_ribbon_word, word

DEFAULT_CLASS_CAP = 10**6
DEFAULT_SPAN_CAP = 8


class ResourceGuardError(RuntimeError):
    """An instance exceeded a configured size guard."""


def class_cap() -> int:
    env = os.environ.get("LLT_SCHUR_GUARD_CLASS")
    if env:
        try:
            v = int(env)
        except ValueError:
            raise ValueError(f"LLT_SCHUR_GUARD_CLASS={env!r} is not an integer") from None
        if v <= 0:
            raise ValueError("LLT_SCHUR_GUARD_CLASS must be positive")
        return v
    return DEFAULT_CLASS_CAP


# ---------------------------------------------------------------------------
# elements of the free algebra


class AlgebraElement:
    """A finite sum of words with Laurent polynomial coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping | None = None):
        t = {}
        if terms:
            for w, c in terms.items():
                c = LaurentPoly._coerce(c)
                if c:
                    w = tuple(w)
                    s = t.get(w, LZERO) + c
                    if s:
                        t[w] = s
                    else:
                        t.pop(w, None)
        self._t = t

    @classmethod
    def from_word(cls, w, coeff=1) -> "AlgebraElement":
        return cls({word(w): coeff})

    @classmethod
    def from_words(cls, ws: Iterable) -> "AlgebraElement":
        out = {}
        for w in ws:
            w = word(w)
            out[w] = out.get(w, LZERO) + ONE
        return cls(out)

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({(): 1})

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self._t == other._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        t = dict(self._t)
        for w, c in other._t.items():
            s = t.get(w, LZERO) + c
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        out = AlgebraElement()
        out._t = t
        return out

    def __neg__(self):
        out = AlgebraElement()
        out._t = {w: -c for w, c in self._t.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            t = {}
            for w1, c1 in self._t.items():
                for w2, c2 in other._t.items():
                    w = w1 + w2
                    s = t.get(w, LZERO) + c1 * c2
                    if s:
                        t[w] = s
                    else:
                        t.pop(w, None)
            out = AlgebraElement()
            out._t = t
            return out
        try:
            c = LaurentPoly._coerce(other)
        except TypeError:
            return NotImplemented
        return AlgebraElement({w: v * c for w, v in self._t.items()})

    def __rmul__(self, other):
        try:
            c = LaurentPoly._coerce(other)
        except TypeError:
            return NotImplemented
        return AlgebraElement({w: c * v for w, v in self._t.items()})

    def by_multiset(self) -> dict:
        """Split into letter-multiset-homogeneous components."""
        out = {}
        for w, c in self._t.items():
            key = tuple(sorted(w))
            out.setdefault(key, {})[w] = c
        return {k: AlgebraElement(v) for k, v in out.items()}

    def to_json(self) -> list:
        return [[list(w), c.to_triples()] for w, c in sorted(self._t.items())]

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for w, c in sorted(self._t.items()):
            mono = "u[" + ",".join(map(str, w)) + "]" if w else "1"
            parts.append(mono if c == 1 else f"({c})*{mono}")
        return " + ".join(parts)


def pairing(f: AlgebraElement, g: AlgebraElement) -> LaurentPoly:
    """The bilinear form making distinct words orthonormal."""
    tf, tg = f.terms, g.terms
    if len(tf) > len(tg):
        tf, tg = tg, tf
    out = LZERO
    for w, c in tf.items():
        d = tg.get(w)
        if d is not None:
            out = out + c * d
    return out


# ---------------------------------------------------------------------------
# Lam's algebra: canonical forms


@dataclass(frozen=True)
class CanonicalForm:
    """``v = q**power * rep`` in the quotient; ``rep is None`` means zero."""

    rep: tuple | None
    power: int = 0

    @property
    def is_zero(self) -> bool:
        return self.rep is None

    def to_json(self):
        if self.rep is None:
            return {"zero": True}
        return {"rep": list(self.rep), "power": self.power}


ZERO_FORM = CanonicalForm(None, 0)


def _dependent(a: int, b: int, k: int) -> bool:
    d = abs(a - b)
    return d == 0 or d == k


def lex_least_rep(v: Sequence[int], k: int) -> tuple:
    """Lexicographically least word reachable by swapping adjacent letters
    that differ by neither 0 nor ``k``.

    Such swaps generate a partial commutation, so the reachable words are
    the linear extensions of the dependency order on positions; the
    greedy choice of the smallest available letter gives the least one.
    """
    n = len(v)
    preds = [0] * n
    succ = [[] for _ in range(n)]
    last = {}
    # only the most recent earlier occurrence of each dependent letter is
    # needed: dependencies between equal letters chain the rest
    for j, a in enumerate(v):
        for b in (a, a - k, a + k):
            i = last.get(b)
            if i is not None:
                succ[i].append(j)
                preds[j] += 1
        last[a] = j
    heap = [(v[i], i) for i in range(n) if preds[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        a, i = heapq.heappop(heap)
        out.append(a)
        for j in succ[i]:
            preds[j] -= 1
            if preds[j] == 0:
                heapq.heappush(heap, (v[j], j))
    return tuple(out)


_nf_cache: dict = {}
_nf_lock = threading.Lock()


def canonical_form_lam(v: Sequence[int], k: int) -> CanonicalForm:
    v = tuple(v)
    key = (v, k)
    hit = _nf_cache.get(key)
    if hit is not None:
        return hit
    if not is_nonzero_word(v, k):
        res = ZERO_FORM
    else:
        rep = lex_least_rep(v, k)
        res = CanonicalForm(rep, invi(v, k) - invi(rep, k))
    with _nf_lock:
        if len(_nf_cache) > 2_000_000:
            _nf_cache.clear()
        _nf_cache[key] = res
    return res


def equivalence_class(v: Sequence[int], k: int, cap: int | None = None) -> set:
    """All words reachable from ``v`` by far swaps and q-swaps (breadth first)."""
    cap = class_cap() if cap is None else cap
    v = tuple(v)
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for i in range(len(x) - 1):
            a, b = x[i], x[i + 1]
            if not _dependent(a, b, k):
                y = x[:i] + (b, a) + x[i + 2 :]
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise ResourceGuardError(f"equivalence class exceeds {cap} words")
                    queue.append(y)
    return seen


def reduce_lam(f: AlgebraElement, k: int) -> dict:
    """Coordinates of ``f`` in the basis of nonzero class representatives."""
    out = {}
    for w, c in f.terms.items():
        nf = canonical_form_lam(w, k)
        if nf.is_zero:
            continue
        s = out.get(nf.rep, LZERO) + c.shift(nf.power)
        if s:
            out[nf.rep] = s
        else:
            out.pop(nf.rep, None)
    return out


# ---------------------------------------------------------------------------
# relation systems and span membership

KINDS = ("lam", "lam_le", "rot_le", "bij")


@dataclass(frozen=True)
class RelationSystem:
    kind: str
    k: int
    choices: tuple = ()  # sorted ((a, b, c), "knuth" | "rotation") pairs
    default_choice: str = "rotation"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown relation system {self.kind!r}")
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.default_choice not in ("knuth", "rotation"):
            raise ValueError("choice must be 'knuth' or 'rotation'")
        for _, ch in self.choices:
            if ch not in ("knuth", "rotation"):
                raise ValueError("choice must be 'knuth' or 'rotation'")

    @classmethod
    def bijectivization(cls, k: int, choices: Mapping | None = None, default: str = "rotation"):
        items = tuple(sorted((tuple(t), ch) for t, ch in (choices or {}).items()))
        return cls("bij", k, items, default)

    def choice(self, a: int, b: int, c: int) -> str:
        for t, ch in self.choices:
            if t == (a, b, c):
                return ch
        return self.default_choice

    # -- relation instances on a window ------------------------------------

    def kills(self, w: tuple) -> bool:
        if self.kind in ("lam", "lam_le"):
            return not is_nonzero_word(w, self.k)
        return len(set(w)) != len(w)

    def window_relations(self, x: tuple) -> list:
        """Relations (as lists of ``(coeff, word)``) with ``x`` in their support.

        ``x`` has length 2 or 3.  Two-term relations come back as pairs with
        coefficients ``(1, -1)``.
        """
        k = self.k
        out = []
        if len(x) == 2:
            a, b = x
            if self.kind == "lam_le" and abs(a - b) > k:
                out.append([(1, (a, b)), (-1, (b, a))])
            return out
        if len(x) != 3 or len(set(x)) != 3:
            return out
        a, b, c = sorted(x)
        acb, cab, bac, bca = (a, c, b), (c, a, b), (b, a, c), (b, c, a)
        four = [(1, acb), (-1, cab), (-1, bac), (1, bca)]
        if c - a <= k:
            if x in (acb, cab, bac, bca):
                out.append(four)
            if self.kind == "bij":
                if self.choice(a, b, c) == "knuth":
                    pairs = [(acb, cab), (bac, bca)]
                else:
                    pairs = [(acb, bac), (cab, bca)]
                for p, r in pairs:
                    if x in (p, r):
                        out.append([(1, p), (-1, r)])
        elif self.kind in ("rot_le", "bij"):
            for p, r in ((acb, cab), (bac, bca)):
                if x in (p, r):
                    out.append([(1, p), (-1, r)])
        return out


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent
        root = x
        while p.get(root, root) != root:
            root = p[root]
        while p.get(x, x) != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class _Component:
    """Quotient of the span of all arrangements of one letter multiset."""

    def __init__(self, rs: RelationSystem, letters: tuple, cap: int):
        if len(letters) > cap:
            raise ResourceGuardError(f"{len(letters)} letters exceeds span cap {cap}")
        self.rs = rs
        words = sorted(set(permutations(letters)))
        uf = _UnionFind()
        multi = []
        seen = set()
        for w in words:
            for L in (2, 3):
                for i in range(len(w) - L + 1):
                    x = w[i : i + L]
                    for rel in rs.window_relations(x):
                        pre, post = w[:i], w[i + L :]
                        inst = tuple((cf, pre + y + post) for cf, y in rel)
                        keyi = frozenset(inst)
                        if keyi in seen:
                            continue
                        seen.add(keyi)
                        if len(inst) == 2:
                            uf.union(inst[0][1], inst[1][1])
                        else:
                            multi.append(inst)
        killed_roots = {uf.find(w) for w in words if rs.kills(w)}
        self.uf = uf
        self.killed = killed_roots
        self.ech = SparseEchelon()
        for inst in multi:
            row = self._project(inst)
            if row:
                self.ech.add(row)

    def _project(self, pairs) -> dict:
        row = {}
        for cf, w in pairs:
            r = self.uf.find(w)
            if r in self.killed:
                continue
            s = row.get(r, 0) + cf
            if s:
                row[r] = s
            else:
                row.pop(r, None)
        return row

    def reduce(self, vec: Mapping) -> dict:
        return self.ech.reduce(self._project([(c, w) for w, c in vec.items()]))


_component_cache: dict = {}
_component_lock = threading.Lock()


def _component(rs: RelationSystem, letters: tuple, cap: int) -> _Component:
    key = (rs, letters)
    comp = _component_cache.get(key)
    if comp is None:
        comp = _Component(rs, letters, cap)
        with _component_lock:
            _component_cache.setdefault(key, comp)
            comp = _component_cache[key]
    return comp


def in_ideal(f: AlgebraElement, rs: RelationSystem, span_cap: int = DEFAULT_SPAN_CAP) -> bool:
    """True iff ``f`` vanishes in the quotient selected by ``rs``."""
    if rs.kind == "lam":
        return not reduce_lam(f, rs.k)
    for letters, comp_el in f.by_multiset().items():
        # relations are q-free: test each power of q separately
        by_power = {}
        for w, c in comp_el.terms.items():
            for e, v in c.items():
                by_power.setdefault(e, {})[w] = v
        comp = None
        for vec in by_power.values():
            if all(rs.kills(w) for w in vec):
                continue
            if comp is None:
                comp = _component(rs, letters, span_cap)
            if comp.reduce(vec):
                return False
    return True


def equal_in_quotient(f: AlgebraElement, g: AlgebraElement, rs: RelationSystem,
                      span_cap: int = DEFAULT_SPAN_CAP) -> bool:
    return in_ideal(f - g, rs, span_cap)


# ---------------------------------------------------------------------------
# actions


def act_on_tuple(delta: Sequence, v: Sequence[int], k: int, d: Sequence[int] | None = None):
    """Apply ``delta o_d u_{v_1} ... u_{v_t}``; None if some step vanishes.

    Letter ``i`` adds a cell of content ``(i - r)/k - d_r`` to component
    ``r = i mod k``.
    """
    if len(delta) != k:
        raise ValueError(f"expected {k} components, got {len(delta)}")
    d = tuple(d) if d is not None else (0,) * k
    if len(d) != k:
        raise ValueError(f"offset vector must have length {k}")
    state = [partition(p) for p in delta]
    for i in v:
        r = i % k
        nxt = add_cell(state[r], (i - r) // k - d[r])
        if nxt is None:
            return None
        state[r] = nxt
    return tuple(state)


def act_on_partition_spin(nu: Sequence[int], v: Sequence[int], k: int):
    """Ribbon action ``nu . u_{v_1} ... u_{v_t}``: ``(mu, total spin)`` or None."""
    cur = partition(nu)
    total = 0
    for i in v:
        step = add_ribbon(cur, k, i)
        if step is None:
            return None
        cur, s = step
        total += s
    return cur, total


def nonzero_by_action(v: Sequence[int], k: int) -> bool:
    """Decide nonvanishing by searching for a tuple on which ``v`` acts.

    Each component only sees the boundary of its partition near the
    contents that occur, so it suffices to try every bead configuration on
    that window of the Maya diagram.  Exponential; a test oracle.
    """
    by_comp = {}
    for i in v:
        r = i % k
        by_comp.setdefault(r, []).append((i - r) // k)
    for contents in by_comp.values():
        lo, hi = min(contents) - 1, max(contents)
        width = hi - lo + 1
        ok = False
        for mask in range(1 << width):
            beads = {lo + b for b in range(width) if mask >> b & 1}
            good = True
            for c in contents:
                if (c - 1) in beads and c not in beads:
                    beads.discard(c - 1)
                    beads.add(c)
                else:
                    good = False
                    break
            if good:
                ok = True
                break
        if not ok:
            return False
    return True


def nonzero_by_ribbon_word(v: Sequence[int], k: int) -> bool:
    """Decide nonvanishing by searching for a ribbon-word preimage ``(w, c)``."""
    v = tuple(v)
    c = tuple(sorted(v))
    n = len(v)
    # w^{-1}(i) must index a slot of c holding v_i; try every matching
    slots = {}
    for j, x in enumerate(c):
        slots.setdefault(x, []).append(j)
    positions = {}
    for i, x in enumerate(v):
        positions.setdefault(x, []).append(i)
    letters = sorted(slots)
    choices = [list(permutations(slots[x])) for x in letters]

    def rec(idx, winv):
        if idx == len(letters):
            w = [0] * n
            for i, j in enumerate(winv):
                w[j] = i + 1
            return is_ribbon_word(w, c, k)
        x = letters[idx]
        for perm in choices[idx]:
            for i, j in zip(positions[x], perm):
                winv[i] = j
            if rec(idx + 1, winv):
                return True
        return False

    return rec(0, [None] * n)
