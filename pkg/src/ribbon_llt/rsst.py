"""Restricted square strict tableaux (k = 3).

A tableau here is a map from cells ``(row, col)`` to integers whose shape
is a restricted shape: a lower order ideal, for the northeast order, of a
partition diagram.  The tableau is square strict when rows and columns
strictly increase and ``T[z] + 3 <= T[z']`` whenever ``z`` lies strictly
northwest of ``z'`` (different row and column).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .quotient import ResourceGuardError, canonical_form_lam
from .shapes import RestrictedShape, content, is_restricted_cellset, nearr_le, partition

NW_ARROW = "nwarr"  # tail at the southeast cell, head at the northwest cell
SE_ARROW = "searr"  # tail at the northwest cell, head at the southeast cell

DEFAULT_EXTENSION_CAP = 10**6


@dataclass(frozen=True)
class Rsst:
    entries: tuple  # sorted ((row, col), value) pairs

    @classmethod
    def from_mapping(cls, m: Mapping) -> "Rsst":
        return cls(tuple(sorted((tuple(z), int(v)) for z, v in m.items())))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], first_row: int = 1) -> "Rsst":
        """Rows of entries; ``None`` marks an absent cell."""
        m = {}
        for r, row in enumerate(rows, start=first_row):
            for c, v in enumerate(row, start=1):
                if v is not None:
                    m[(r, c)] = v
        return cls.from_mapping(m)

    @classmethod
    def from_json(cls, obj) -> "Rsst":
        t = cls.from_rows(obj["rows"])
        if "shape" in obj and obj["shape"] is not None:
            sh = obj["shape"]
            if isinstance(sh, dict):
                expect = set(RestrictedShape(sh["outer"], sh.get("carved", ())).cells())
            else:
                expect = set(RestrictedShape.full(sh).cells())
            if expect != set(t.cells):
                raise ValueError("rows do not fill the declared shape")
        return t

    @property
    def mapping(self) -> dict:
        return dict(self.entries)

    @property
    def cells(self) -> list:
        return [z for z, _ in self.entries]

    def __len__(self):
        return len(self.entries)

    def rows(self) -> list:
        if not self.entries:
            return []
        m = self.mapping
        R = max(r for r, _ in m)
        C = max(c for _, c in m)
        return [[m.get((r, c)) for c in range(1, C + 1)] for r in range(1, R + 1)]

    def to_json(self) -> dict:
        cols = {}
        for (r, c), _ in self.entries:
            lo, hi = cols.get(c, (r, r))
            cols[c] = (min(lo, r), max(hi, r))
        shape = None
        if cols and sorted(cols) == list(range(1, max(cols) + 1)):
            shape = {"outer": [cols[c][1] for c in sorted(cols)], "carved": [cols[c][0] - 1 for c in sorted(cols)]}
        return {"shape": shape, "rows": self.rows()}

    def sorted_entries(self) -> tuple:
        return tuple(sorted(v for _, v in self.entries))

    def __str__(self):
        rows = self.rows()
        width = max((len(str(v)) for row in rows for v in row if v is not None), default=1)
        return "\n".join(
            " ".join((str(v) if v is not None else ".").rjust(width) for v in row).rstrip() for row in rows
        )


def _diag_pair(z, w) -> bool:
    """``z`` strictly northwest of ``w`` in a different row and column."""
    return z[0] < w[0] and z[1] < w[1]


def validate_rsst(t: Rsst | Mapping) -> bool:
    m = t.mapping if isinstance(t, Rsst) else dict(t)
    if not is_restricted_cellset(m):
        return False
    for (r, c), v in m.items():
        if (r + 1, c) in m and m[(r + 1, c)] <= v:
            return False
        if (r, c + 1) in m and m[(r, c + 1)] <= v:
            return False
    for z, v in m.items():
        for w, x in m.items():
            if _diag_pair(z, w) and v + 3 > x:
                return False
    return True


# ---------------------------------------------------------------------------
# arrows and reading words


def arrows(t: Rsst) -> list:
    """All arrows as ``(tail, head, kind)`` triples, sorted."""
    m = t.mapping
    out = []
    for (r, c), a in m.items():
        sw, se, ne = (r + 1, c), (r + 1, c + 1), (r, c + 1)
        if sw not in m or se not in m:
            continue
        if ne in m and m[ne] not in (a + 1, a + 2):
            continue
        if m[se] != a + 3:
            continue
        if m[sw] == a + 2:
            out.append((se, (r, c), NW_ARROW))
        elif m[sw] == a + 1:
            out.append(((r, c), se, SE_ARROW))
    return sorted(out)


def arrow_tails(t: Rsst, kind: str | None = None) -> set:
    return {tail for tail, _, k in arrows(t) if kind is None or k == kind}


def sqread(t: Rsst) -> tuple:
    """Read diagonals from the southwest; on each, first the northwest-arrow
    tails going northwest, then the other cells going southeast."""
    m = t.mapping
    tails = arrow_tails(t, NW_ARROW)
    diags = {}
    for z in m:
        diags.setdefault(content(z), []).append(z)
    out = []
    for d in sorted(diags):
        cs = sorted(diags[d])
        out.extend(m[z] for z in reversed(cs) if z in tails)
        out.extend(m[z] for z in cs if z not in tails)
    return tuple(out)


def _reading_dag(t: Rsst, square_respecting: bool):
    cells = t.cells
    idx = {z: i for i, z in enumerate(cells)}
    preds = [set() for _ in cells]
    for i, z in enumerate(cells):
        for j, w in enumerate(cells):
            if i != j and nearr_le(z, w):
                preds[j].add(i)
    if square_respecting:
        for tail, head, _ in arrows(t):
            preds[idx[head]].add(idx[tail])
    return cells, preds


def reading_orders(t: Rsst, square_respecting: bool = True, cap: int = DEFAULT_EXTENSION_CAP) -> Iterator[tuple]:
    """Linear extensions as sequences of cells (so repeated entries stay distinguishable)."""
    cells, preds = _reading_dag(t, square_respecting)
    n = len(cells)
    count = [0]
    remaining = [len(p) for p in preds]
    succ = [[] for _ in range(n)]
    for j, p in enumerate(preds):
        for i in p:
            succ[i].append(j)
    used = [False] * n
    order = []

    def rec():
        if len(order) == n:
            count[0] += 1
            if count[0] > cap:
                raise ResourceGuardError(f"more than {cap} reading words")
            yield tuple(cells[i] for i in order)
            return
        for i in range(n):
            if not used[i] and remaining[i] == 0:
                used[i] = True
                order.append(i)
                for j in succ[i]:
                    remaining[j] -= 1
                yield from rec()
                for j in succ[i]:
                    remaining[j] += 1
                order.pop()
                used[i] = False

    yield from rec()


def reading_words(t: Rsst, square_respecting: bool = True, cap: int = DEFAULT_EXTENSION_CAP) -> Iterator[tuple]:
    """Distinct reading words, lazily."""
    m = t.mapping
    seen = set()
    for order in reading_orders(t, square_respecting, cap):
        w = tuple(m[z] for z in order)
        if w not in seen:
            seen.add(w)
            yield w


def reading_words_bruteforce(t: Rsst, square_respecting: bool = True) -> set:
    """Filter every ordering of the cells by the defining conditions (oracle)."""
    m = t.mapping
    cells = t.cells
    arr = arrows(t) if square_respecting else []
    out = set()
    for order in permutations(cells):
        pos = {z: i for i, z in enumerate(order)}
        if any(pos[z] > pos[w] for z in cells for w in cells if z != w and nearr_le(z, w)):
            continue
        if any(pos[tail] > pos[head] for tail, head, _ in arr):
            continue
        out.add(tuple(m[z] for z in order))
    return out


def is_square_respecting(t: Rsst, w: Sequence[int], square_respecting: bool = True) -> bool:
    """Whether ``w`` is a (square respecting) reading word of ``t``.

    Cells holding equal entries are pairwise northeast-comparable, so the
    ``i``-th occurrence of a letter must be read from the ``i``-th such cell
    in that order; the check is then direct.
    """
    w = tuple(w)
    m = t.mapping
    if sorted(w) != sorted(m.values()):
        return False
    by_value = {}
    for z in sorted(m, key=lambda z: (-z[0], z[1])):
        by_value.setdefault(m[z], []).append(z)
    seen = Counter()
    pos = {}
    for i, x in enumerate(w):
        pos[by_value[x][seen[x]]] = i
        seen[x] += 1
    cells = t.cells
    if any(pos[z] > pos[y] for z in cells for y in cells if z != y and nearr_le(z, y)):
        return False
    if square_respecting and any(pos[tail] > pos[head] for tail, head, _ in arrows(t)):
        return False
    return True


def nearr_maximal_cells(t: Rsst) -> list:
    cells = t.cells
    return [z for z in cells if not any(w != z and nearr_le(z, w) for w in cells)]


def nontail_removable_cells(t: Rsst) -> list:
    tails = arrow_tails(t)
    return [z for z in nearr_maximal_cells(t) if z not in tails]


def has_forbidden_arrows(t: Rsst) -> bool:
    """A cell that is the tail of both a northwest and a southeast arrow."""
    return bool(arrow_tails(t, NW_ARROW) & arrow_tails(t, SE_ARROW))


def has_zero_square(t: Rsst) -> bool:
    """Whether ``t`` contains a full arrow square ``a, a+1 / a+1, a+3`` or
    ``a, a+2 / a+2, a+3`` (such tableaux read to zero)."""
    m = t.mapping
    for (r, c), a in m.items():
        ne, sw, se = m.get((r, c + 1)), m.get((r + 1, c)), m.get((r + 1, c + 1))
        if ne is None or sw is None or se is None or se != a + 3:
            continue
        if ne == sw and ne in (a + 1, a + 2):
            return True
    return False


# ---------------------------------------------------------------------------
# statistics


def rsst_statistics(t: Rsst) -> tuple:
    """``(Desi3 multiset, invi3)`` of the tableau."""
    m = t.mapping
    des = Counter()
    inv = 0
    for z, v in m.items():
        for w, x in m.items():
            if z != w and nearr_le(z, w):
                if v - x == 3:
                    des[(v, x)] += 1
                elif 0 < v - x < 3:
                    inv += 1
    for tail, head, kind in arrows(t):
        if kind == NW_ARROW:
            des[(m[tail], m[head])] += 1
    return des, inv


def is_nonzero_rsst(t: Rsst) -> bool:
    return not canonical_form_lam(sqread(t), 3).is_zero


# ---------------------------------------------------------------------------
# enumeration


def _cells_of(shape) -> list:
    if isinstance(shape, RestrictedShape):
        return shape.cells()
    return RestrictedShape.full(partition(shape)).cells()


def fill_rsst(cells: Sequence, fixed: Mapping | None = None, col_bounds: Mapping | None = None,
              pool: Iterable[int] | None = None, lo: int = 1) -> Iterator[Rsst]:
    """Backtracking over fillings of ``cells`` that are RSST.

    ``fixed`` pins some entries.  Free cells in column ``c`` take values in
    ``[lo, col_bounds[c]]`` unless ``pool`` is given, in which case the free
    entries are exactly the multiset ``pool``.  Cells are filled in
    row-major order; the output order is lexicographic in that order.
    """
    fixed = dict(fixed or {})
    cells = sorted(set(cells) | set(fixed))
    if not is_restricted_cellset(cells):
        raise ValueError("cells do not form a restricted shape")
    free = [z for z in cells if z not in fixed]
    if fixed and not _pairwise_ok(fixed):
        return
    pool_counter = Counter(pool) if pool is not None else None
    if pool_counter is not None and sum(pool_counter.values()) != len(free):
        return
    # constraints of each free cell against fixed cells and earlier free cells
    earlier = {}
    for i, z in enumerate(free):
        before = set(free[:i]) | set(fixed)
        earlier[z] = [w for w in before if _related(w, z) or _related(z, w)]
    state = dict(fixed)

    def bounds(z):
        lo_v, hi_v = None, None
        for w in earlier[z]:
            x = state[w]
            gap = _gap(w, z)
            if gap is not None:  # w before z in the strict order
                lo_v = x + gap if lo_v is None else max(lo_v, x + gap)
            gap = _gap(z, w)
            if gap is not None:
                hi_v = x - gap if hi_v is None else min(hi_v, x - gap)
        return lo_v, hi_v

    def rec(i):
        if i == len(free):
            yield Rsst.from_mapping(state)
            return
        z = free[i]
        lo_v, hi_v = bounds(z)
        if pool_counter is not None:
            cands = sorted(v for v, m in pool_counter.items() if m > 0)
        else:
            top = col_bounds.get(z[1], 0) if col_bounds is not None else None
            if top is None:
                raise ValueError("either col_bounds or pool is required")
            start = lo if lo_v is None else max(lo, lo_v)
            cands = range(start, top + 1)
        for v in cands:
            if lo_v is not None and v < lo_v:
                continue
            if hi_v is not None and v > hi_v:
                continue
            state[z] = v
            if pool_counter is not None:
                pool_counter[v] -= 1
            yield from rec(i + 1)
            if pool_counter is not None:
                pool_counter[v] += 1
            del state[z]

    yield from rec(0)


def _gap(z, w):
    """Minimum of ``T[w] - T[z]`` forced by the RSST rules, or None.

    Rows and columns of restricted shapes are contiguous, so strictness
    only needs checking between neighbours.
    """
    if z == w:
        return None
    if z[0] == w[0] and w[1] == z[1] + 1:
        return 1
    if z[1] == w[1] and w[0] == z[0] + 1:
        return 1
    if _diag_pair(z, w):
        return 3
    return None


def _related(z, w) -> bool:
    return _gap(z, w) is not None


def _pairwise_ok(m: Mapping) -> bool:
    for z, v in m.items():
        for w, x in m.items():
            g = _gap(z, w)
            if g is not None and x - v < g:
                return False
    return True


def enumerate_rsst(shape, flags: Sequence[int] | None = None, contents: Sequence[int] | None = None,
                   desi: Counter | Mapping | None = None, nonzero: bool = False) -> list:
    """RSST of a partition (row lengths) or restricted shape.

    With ``flags`` the entries of column ``c`` lie in ``[flags[c-1]]``; with
    ``contents`` the sorted entries must equal ``contents``.  ``desi``
    filters on the 3-descent multiset and ``nonzero`` keeps only tableaux
    whose reading words survive in Lam's algebra with ``k = 3``.
    """
    cells = _cells_of(shape)
    if contents is not None:
        if len(contents) != len(cells):
            return []
        gen = fill_rsst(cells, pool=contents)
    else:
        if flags is None:
            raise ValueError("flags or contents required")
        ncols = max((c for _, c in cells), default=0)
        if len(flags) < ncols:
            raise ValueError(f"need {ncols} flags, got {len(flags)}")
        gen = fill_rsst(cells, col_bounds={c + 1: n for c, n in enumerate(flags)})
    want = Counter(desi) if desi is not None else None
    out = []
    for t in gen:
        if want is not None and rsst_statistics(t)[0] != want:
            continue
        if nonzero and not is_nonzero_rsst(t):
            continue
        out.append(t)
    return out


def enumerate_rsst_bruteforce(shape, flags: Sequence[int]) -> list:
    """Every assignment of column-bounded values, filtered by validity (oracle)."""
    from itertools import product

    cells = _cells_of(shape)
    ranges = [range(1, flags[c - 1] + 1) for _, c in cells]
    out = []
    for vals in product(*ranges):
        m = dict(zip(cells, vals))
        if validate_rsst(m):
            out.append(Rsst.from_mapping(m))
    return out
