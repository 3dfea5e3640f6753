"""Partitions, cells, skew shapes with contents, restricted shapes and ribbons.

Conventions: cells are ``(row, col)`` pairs, 1-based, English notation
(rows grow southward, columns eastward).  The content of ``(r, c)`` is
``c - r``.  Partitions are plain tuples of positive integers with no
trailing zeros.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Cell = tuple  # (row, col)
Partition = tuple


# ---------------------------------------------------------------------------
# partitions


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize a partition (strips trailing zeros)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    return p


def conjugate(p: Sequence[int]) -> Partition:
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def size(p: Sequence[int]) -> int:
    return sum(p)


def cells(p: Sequence[int]) -> list:
    """Cells of the diagram of ``p`` in row-major order."""
    return [(r + 1, c + 1) for r, row in enumerate(p) for c in range(row)]


def content(cell: Cell) -> int:
    return cell[1] - cell[0]


def contains(big: Sequence[int], small: Sequence[int]) -> bool:
    if len(small) > len(big):
        return False
    return all(big[i] >= small[i] for i in range(len(small)))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> list:
    return [p for m in range(n + 1) for p in partitions(m)]


def partition_from_contents(counts: Counter | dict) -> Partition:
    """Rebuild a straight shape from its content multiset.

    Cell ``(i, j)`` is the ``min(i, j)``-th cell on its diagonal, so it is
    present iff that diagonal has at least that many cells.
    """
    counts = {d: m for d, m in counts.items() if m}
    if not counts:
        return ()
    rows = []
    i = 1
    while True:
        j = 1
        while counts.get(j - i, 0) >= min(i, j):
            j += 1
        if j == 1:
            break
        rows.append(j - 1)
        i += 1
    p = tuple(rows)
    if Counter(content(z) for z in cells(p)) != Counter(counts):
        raise ValueError(f"content multiset {counts} is not that of a partition")
    return p


def addable_cell(p: Sequence[int], c: int) -> Cell | None:
    """The unique addable cell of content ``c`` (or None)."""
    p = tuple(p)
    for r in range(1, len(p) + 2):
        row = p[r - 1] if r <= len(p) else 0
        if row + 1 - r == c:
            above = p[r - 2] if r >= 2 else None
            if above is None or above > row:
                return (r, row + 1)
            return None
    return None


def add_cell(p: Sequence[int], c: int) -> Partition | None:
    """Nil-Temperley-Lieb action: add the cell of content ``c`` if possible."""
    z = addable_cell(p, c)
    if z is None:
        return None
    r = z[0]
    q = list(p) + [0]
    q[r - 1] += 1
    return partition(q)


# ---------------------------------------------------------------------------
# orders on cells

LESS, GREATER, INCOMPARABLE, EQUAL = "less", "greater", "incomparable", "equal"


def searr_le(a: Cell, b: Cell) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def nearr_le(a: Cell, b: Cell) -> bool:
    return a[0] >= b[0] and a[1] <= b[1]


def cell_order(a: Cell, b: Cell, which: str = "searr") -> str:
    """Compare two cells under the southeast or northeast partial order."""
    if which not in ("searr", "nearr"):
        raise ValueError(f"unknown order {which!r}")
    le = searr_le if which == "searr" else nearr_le
    if a == b:
        return EQUAL
    if le(a, b):
        return LESS
    if le(b, a):
        return GREATER
    return INCOMPARABLE


# ---------------------------------------------------------------------------
# skew shapes with contents


def _is_skew_diagram(cs: frozenset) -> bool:
    """A finite cell set is a skew diagram iff it is convex for <=_searr."""
    for a in cs:
        for b in cs:
            if a != b and searr_le(a, b):
                for r in range(a[0], b[0] + 1):
                    for c in range(a[1], b[1] + 1):
                        if (r, c) not in cs:
                            return False
    return True


@dataclass(frozen=True)
class SkewShape:
    """A skew shape with contents, stored as a diagonally normalized cell set.

    Translating along the diagonal, ``(r, c) -> (r + t, c + t)``, keeps
    every content; we fix the representative with minimum row 1.
    """

    cells: frozenset

    def __post_init__(self):
        cs = frozenset((int(r), int(c)) for r, c in self.cells)
        if cs:
            t = 1 - min(r for r, _ in cs)
            cs = frozenset((r + t, c + t) for r, c in cs)
        if not _is_skew_diagram(cs):
            raise ValueError("cell set is not a skew diagram")
        object.__setattr__(self, "cells", cs)

    @classmethod
    def from_outer_inner(cls, outer, inner=(), shift: int = 0) -> "SkewShape":
        outer, inner = partition(outer), partition(inner)
        if not contains(outer, inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        inner_cells = set(cells(inner))
        cs = [(r, c + shift) for r, c in cells(outer) if (r, c) not in inner_cells]
        return cls(frozenset(cs))

    @classmethod
    def from_json(cls, obj) -> "SkewShape":
        if isinstance(obj, dict):
            return cls.from_outer_inner(obj.get("outer", ()), obj.get("inner", ()), obj.get("shift", 0))
        return cls.from_outer_inner(obj)

    def to_outer_inner(self) -> tuple:
        """Return ``(outer, inner, shift)`` with ``from_outer_inner`` inverse."""
        if not self.cells:
            return (), (), 0
        cmin = min(c for _, c in self.cells)
        shift = cmin - 1
        rows = {}
        for r, c in self.cells:
            lo, hi = rows.get(r, (c, c))
            rows[r] = (min(lo, c), max(hi, c))
        nrows = max(rows)
        outer, inner = [], []
        for r in range(1, nrows + 1):
            if r in rows:
                lo, hi = rows[r]
                outer.append(hi - shift)
                inner.append(lo - 1 - shift)
            else:
                x = inner[-1] if inner else 0
                outer.append(x)
                inner.append(x)
        return partition(outer), partition(inner), shift

    def to_json(self) -> dict:
        outer, inner, shift = self.to_outer_inner()
        return {"outer": list(outer), "inner": list(inner), "shift": shift}

    def __len__(self):
        return len(self.cells)

    def contents(self) -> Counter:
        return Counter(content(z) for z in self.cells)

    def sorted_cells(self) -> list:
        return sorted(self.cells)

    def invariant_key(self) -> tuple:
        """Data determining the equivalence class of the skew shape with contents.

        Content multiset, plus for each pair of adjacent diagonals the number
        of southeast-comparable pairs between them.
        """
        cm = self.contents()
        pairs = Counter()
        for z in self.cells:
            for w in self.cells:
                if content(z) == content(w) + 1 and searr_le(z, w):
                    pairs[content(z)] += 1
        return tuple(sorted(cm.items())), tuple(sorted(pairs.items()))


# ---------------------------------------------------------------------------
# restricted shapes


@dataclass(frozen=True)
class RestrictedShape:
    """``lambda' minus alpha'``: column ``c`` holds rows ``alpha_c+1 .. lambda_c``.

    ``outer`` lists column lengths (a partition), ``carved`` the number of
    cells removed from the top of each column.
    """

    outer: tuple
    carved: tuple

    def __post_init__(self):
        outer = partition(self.outer)
        carved = tuple(int(a) for a in self.carved) + (0,) * (len(outer) - len(self.carved))
        if len(carved) > len(outer):
            raise ValueError("more carved entries than columns")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "carved", carved)
        if not is_restricted_pair(outer, carved):
            raise ValueError(f"({outer}, {carved}) does not define a restricted shape")

    @classmethod
    def full(cls, row_partition) -> "RestrictedShape":
        """The partition diagram with the given row lengths."""
        cols = conjugate(row_partition)
        return cls(cols, (0,) * len(cols))

    def cells(self) -> list:
        out = []
        for c, (lam, a) in enumerate(zip(self.outer, self.carved), start=1):
            out.extend((r, c) for r in range(a + 1, lam + 1))
        return sorted(out)

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "carved": list(self.carved)}


def is_restricted_pair(lam: Sequence[int], alpha: Sequence[int]) -> bool:
    l = len(lam)
    if len(alpha) != l:
        return False
    jp = max([i + 1 for i in range(l) if alpha[i] < lam[i]], default=0)
    for i in range(l):
        if i < jp:
            if not (0 <= alpha[i] < lam[i]):
                return False
            if i > 0 and alpha[i] < alpha[i - 1]:
                return False
        elif alpha[i] != lam[i]:
            return False
    return True


def is_restricted_cellset(cs: Iterable[Cell]) -> bool:
    """Lower order ideal (for <_nearr) of the partition diagram it spans."""
    cs = set(cs)
    if not cs:
        return True
    if min(r for r, _ in cs) < 1 or min(c for _, c in cs) < 1:
        return False
    for r, c in cs:
        for r2 in range(r, max(rr for rr, _ in cs) + 1):
            for c2 in range(1, c + 1):
                # (r2, c2) <=_nearr (r, c); it lies in the spanned partition
                # whenever some cell of cs sits weakly southeast of it
                if (r2, c2) not in cs and any(searr_le((r2, c2), w) for w in cs):
                    return False
    return True


def restricted_shapes(max_cells: int) -> list:
    """All restricted shapes with 1..max_cells cells, up to translation.

    Returned as sorted tuples of cells, normalized to touch row 1 and
    column 1.
    """
    seen = set()
    out = []

    def rec_lam(prefix, remaining_cols_budget):
        yield prefix
        if len(prefix) >= max_cells:
            return
        hi = prefix[-1] if prefix else max_cells + 1
        for x in range(1, hi + 1):
            yield from rec_lam(prefix + (x,), remaining_cols_budget)

    def rec_alpha(lam, i, prev, acc, ncells):
        if i == len(lam):
            yield acc
            return
        for a in range(prev, lam[i]):
            n = ncells + lam[i] - a
            if n > max_cells:
                continue
            yield from rec_alpha(lam, i + 1, a, acc + (a,), n)

    # column lengths never need to exceed 2*max_cells for distinct shapes
    def lams():
        def rec(prefix):
            if prefix:
                yield prefix
            if len(prefix) >= max_cells:
                return
            hi = prefix[-1] if prefix else 2 * max_cells
            for x in range(1, hi + 1):
                yield from rec(prefix + (x,))

        yield from rec(())

    for lam in lams():
        for alpha in rec_alpha(lam, 0, 0, (), 0):
            cs = []
            for c, (L, a) in enumerate(zip(lam, alpha), start=1):
                cs.extend((r, c) for r in range(a + 1, L + 1))
            r0 = min(r for r, _ in cs)
            key = tuple(sorted((r - r0 + 1, c) for r, c in cs))
            if key not in seen:
                seen.add(key)
                out.append(key)
    out.sort(key=lambda k: (len(k), k))
    return out


# ---------------------------------------------------------------------------
# ribbons


def is_ribbon(cs: Iterable[Cell], k: int | None = None) -> bool:
    cs = set(cs)
    if not cs or (k is not None and len(cs) != k):
        return False
    for r, c in cs:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cs:
            return False
    # connected via edge adjacency
    start = next(iter(cs))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for z in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if z in cs and z not in seen:
                seen.add(z)
                stack.append(z)
    return len(seen) == len(cs)


@dataclass(frozen=True)
class Ribbon:
    cells: frozenset

    @property
    def content(self) -> int:
        return max(content(z) for z in self.cells)

    @property
    def spin(self) -> int:
        return len({r for r, _ in self.cells}) - 1


def _beta_list(p: Sequence[int], n: int) -> list:
    return [(p[j] if j < len(p) else 0) - (j + 1) for j in range(n)]


def _from_beta(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    return partition(x + j + 1 for j, x in enumerate(b))


def add_ribbon(p: Sequence[int], k: int, c: int):
    """Add the k-ribbon of content ``c`` to ``p``.

    Returns ``(mu, spin)`` or None when no such ribbon exists.  Moving a
    bead of the beta-set from ``c-k`` to ``c`` adds a ribbon whose
    northeast cell has content ``c``; the beads jumped over count its
    rows minus one.
    """
    if k < 1:
        raise ValueError("k must be positive")
    p = partition(p)
    n = max(len(p), k - c, 0) + k + 1
    beta = _beta_list(p, n)
    bs = set(beta)
    if (c - k) not in bs or c in bs:
        return None
    spin = sum(1 for b in beta if c - k < b < c)
    new = [c if b == c - k else b for b in beta]
    return _from_beta(new), spin


def remove_ribbon(p: Sequence[int], k: int, c: int):
    """Remove the k-ribbon of content ``c`` from ``p`` (inverse of add_ribbon)."""
    p = partition(p)
    n = max(len(p), k - c, 0) + k + 1
    beta = _beta_list(p, n)
    bs = set(beta)
    if c not in bs or (c - k) in bs:
        return None
    spin = sum(1 for b in beta if c - k < b < c)
    new = [c - k if b == c else b for b in beta]
    return _from_beta(new), spin


def removable_ribbon_contents(p: Sequence[int], k: int) -> list:
    p = partition(p)
    n = len(p) + k + 1
    beta = _beta_list(p, n)
    bs = set(beta)
    return sorted(b for b in beta if (b - k) not in bs and b - k >= beta[-1])


def addable_ribbon_contents(p: Sequence[int], k: int) -> list:
    p = partition(p)
    n = len(p) + k + 1
    beta = _beta_list(p, n)
    bs = set(beta)
    return sorted(b + k for b in beta if (b + k) not in bs)


def ribbon_cells(nu: Sequence[int], mu: Sequence[int]) -> frozenset:
    inner = set(cells(nu))
    return frozenset(z for z in cells(mu) if z not in inner)


# ---------------------------------------------------------------------------
# cores and quotients


def _abacus(p: Sequence[int], k: int):
    p = partition(p)
    n = k * max(1, -(-len(p) // k))
    positions = [x + n for x in _beta_list(p, n)]
    runners = [sorted(((P - r) // k for P in positions if P % k == r), reverse=True) for r in range(k)]
    return n, runners


def core_and_quotient(p: Sequence[int], k: int):
    """Return ``(core_k(p), quot_k(p))`` computed on the k-runner abacus.

    Component ``i`` of the quotient is indexed so that its cell of content
    ``x`` corresponds to a ribbon of content ``k*x + c_i`` with ``c_i`` the
    content of the ribbon addable to the core in residue class ``i``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n, runners = _abacus(p, k)
    packed = []
    quot = []
    for r, beads in enumerate(runners):
        nr = len(beads)
        packed.extend(k * m + r for m in range(nr))
        quot.append(partition(m - (nr - 1 - j) for j, m in enumerate(beads)))
    core = _from_beta(P - n for P in packed)
    return core, tuple(quot)


def core_offsets(core: Sequence[int], k: int) -> tuple:
    """Contents ``c_0..c_{k-1}`` of the k-ribbons addable to a k-core."""
    out = [None] * k
    for c in addable_ribbon_contents(core, k):
        r = c % k
        if out[r] is None:
            out[r] = c
    return tuple(out)


def core_shifts(core: Sequence[int], k: int) -> tuple:
    """``d_i = (c_i - i) / k`` for the tuple action matching a k-core."""
    return tuple((c - i) // k for i, c in enumerate(core_offsets(core, k)))


def ribbon_removal_sequences(p: Sequence[int], k: int, stop: Sequence[int] | None = None) -> Iterator[list]:
    """All maximal sequences of k-ribbon removals, as lists of (content, partition).

    If ``stop`` is given, sequences end exactly when ``stop`` is reached.
    Exponential; intended as a test oracle.
    """
    p = partition(p)
    stop = partition(stop) if stop is not None else None

    def rec(cur, acc):
        if stop is not None and cur == stop:
            yield acc
            return
        moves = removable_ribbon_contents(cur, k)
        moves = [c for c in moves if remove_ribbon(cur, k, c) is not None]
        if stop is not None:
            moves = [c for c in moves if contains(remove_ribbon(cur, k, c)[0], stop)]
        if not moves:
            if stop is None:
                yield acc
            return
        for c in moves:
            nxt = remove_ribbon(cur, k, c)[0]
            yield from rec(nxt, acc + [(c, nxt)])

    yield from rec(p, [])


def cores_by_removal(p: Sequence[int], k: int) -> set:
    """Every partition reachable by maximal ribbon removal (oracle)."""
    seen = {}
    out = set()

    def rec(cur):
        if cur in seen:
            return
        seen[cur] = True
        moves = [c for c in removable_ribbon_contents(cur, k) if remove_ribbon(cur, k, c) is not None]
        if not moves:
            out.add(cur)
        for c in moves:
            rec(remove_ribbon(cur, k, c)[0])

    rec(partition(p))
    return out


def ribbon_tilings(mu: Sequence[int], nu: Sequence[int], k: int) -> set:
    """All k-ribbon tilings of ``mu/nu`` as frozensets of ribbon cell sets."""
    mu, nu = partition(mu), partition(nu)
    out = set()
    for seq in ribbon_removal_sequences(mu, k, stop=nu):
        tiles = []
        cur = mu
        for _, nxt in seq:
            tiles.append(ribbon_cells(nxt, cur))
            cur = nxt
        out.add(frozenset(tiles))
    return out


def quotient_from_tiling(p: Sequence[int], k: int):
    """Quotient recomputed from one ribbon tiling of ``p / core`` (oracle)."""
    cores = cores_by_removal(p, k)
    if len(cores) != 1:
        raise AssertionError("core depends on removal order")
    core = next(iter(cores))
    offs = core_offsets(core, k)
    tilings = ribbon_tilings(p, core, k)
    tiling = min(tilings, key=lambda t: sorted(sorted(r) for r in t))
    counts = [Counter() for _ in range(k)]
    for tile in tiling:
        c = Ribbon(tile).content
        i = c % k
        counts[i][(c - offs[i]) // k] += 1
    return core, tuple(partition_from_contents(cnt) for cnt in counts)
