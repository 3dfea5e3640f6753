"""Symmetric functions held in Gessel's fundamental quasisymmetric basis.

A homogeneous function of degree ``n`` is a map from descent sets
``D`` (subsets of ``{1, ..., n-1}``) to Laurent polynomials in ``q``.
Schur functions are ``s_lam = sum_{T in SYT(lam)} Q_{Des(T)}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .laurent import LaurentPoly, ZERO as LZERO
from .linalg import SparseEchelon
from .shapes import contains, partition, partitions
from .words import descent_set


class SymFunc:
    __slots__ = ("degree", "_c")

    def __init__(self, degree: int, coeffs: Mapping | None = None):
        self.degree = int(degree)
        c = {}
        for d, v in (coeffs or {}).items():
            d = frozenset(d)
            if any(not 1 <= i < max(self.degree, 1) for i in d):
                raise ValueError(f"descent set {sorted(d)} out of range for degree {degree}")
            v = LaurentPoly._coerce(v)
            if v:
                s = c.get(d, LZERO) + v
                if s:
                    c[d] = s
                else:
                    c.pop(d, None)
        self._c = c

    @classmethod
    def from_words(cls, degree: int, weighted: Iterable) -> "SymFunc":
        """Sum of ``weight * Q_{Des(v)}`` over ``(v, weight)`` pairs."""
        c = {}
        for v, wt in weighted:
            d = descent_set(v)
            c[d] = c.get(d, LZERO) + LaurentPoly._coerce(wt)
        return cls(degree, c)

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self._c and not other._c:
            return True
        return self.degree == other.degree and self._c == other._c

    def __add__(self, other):
        if self.degree != other.degree and self._c and other._c:
            raise ValueError("degree mismatch")
        out = dict(self._c)
        for d, v in other._c.items():
            out[d] = out.get(d, LZERO) + v
        return SymFunc(max(self.degree, other.degree), out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        c = LaurentPoly._coerce(c)
        return SymFunc(self.degree, {d: v * c for d, v in self._c.items()})

    def substitute_power(self, m: int) -> "SymFunc":
        return SymFunc(self.degree, {d: v.substitute_power(m) for d, v in self._c.items()})

    def at_one(self) -> "SymFunc":
        return self.substitute_power(0)

    def divide_monomial(self, other: "SymFunc") -> int | None:
        """``e`` with ``self == q**e * other``, or None."""
        if set(self._c) != set(other._c) or not self._c:
            return None
        e = None
        for d, v in self._c.items():
            x = v.divide_monomial(other._c[d])
            if x is None or (e is not None and x != e):
                return None
            e = x
        return e

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "coeffs": [[sorted(d), v.to_triples()] for d, v in sorted(self._c.items(), key=lambda t: sorted(t[0]))],
        }

    def __repr__(self):
        terms = ", ".join(f"Q{sorted(d)}: {v}" for d, v in sorted(self._c.items(), key=lambda t: sorted(t[0])))
        return f"SymFunc(n={self.degree}, {{{terms}}})"

    def monomial_coefficients(self, nvars: int) -> dict:
        """Debug view: coefficients of monomials ``x^a`` in ``nvars`` variables."""
        out = {}
        n = self.degree
        for d, v in self._c.items():
            for idx in _weakly_increasing(n, nvars):
                if all(idx[i - 1] < idx[i] for i in d):
                    expo = [0] * nvars
                    for i in idx:
                        expo[i] += 1
                    key = tuple(expo)
                    out[key] = out.get(key, LZERO) + v
        return {k: v for k, v in out.items() if v}


def _weakly_increasing(n, m, start=0):
    if n == 0:
        yield ()
        return
    for i in range(start, m):
        for rest in _weakly_increasing(n - 1, m, i):
            yield (i,) + rest


# ---------------------------------------------------------------------------
# standard Young tableaux and Schur functions


@lru_cache(maxsize=None)
def standard_tableaux(lam: tuple) -> tuple:
    """All SYT of shape ``lam`` as tuples of rows."""
    lam = partition(lam)
    n = sum(lam)
    out = []
    rows = [[] for _ in lam]

    def rec(i):
        if i > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(lam)):
            if len(rows[r]) < lam[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(i)
                rec(i + 1)
                rows[r].pop()

    rec(1)
    return tuple(out)


def syt_descents(t: Sequence[Sequence[int]]) -> frozenset:
    """``i`` is a descent when ``i + 1`` lies in a strictly lower row."""
    row_of = {}
    for r, row in enumerate(t):
        for x in row:
            row_of[x] = r
    n = len(row_of)
    return frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])


@lru_cache(maxsize=None)
def schur(lam: tuple) -> SymFunc:
    lam = partition(lam)
    c = {}
    for t in standard_tableaux(lam):
        d = syt_descents(t)
        c[d] = c.get(d, 0) + 1
    return SymFunc(sum(lam), c)


class _SchurSolver:
    def __init__(self, n: int):
        self.n = n
        self.parts = partitions(n)
        self.ech = SparseEchelon(key=self._key)
        for j, lam in enumerate(self.parts):
            row = {("d", d): Fraction(v[0]) for d, v in schur(lam).coeffs.items()}
            row[("x", j)] = Fraction(1)
            self.ech.add(row)

    @staticmethod
    def _key(c):
        if c[0] == "x":
            return (0, c[1], ())
        return (1, len(c[1]), tuple(sorted(c[1])))

    def solve(self, rhs: dict) -> tuple:
        r = self.ech.reduce({("d", d): v for d, v in rhs.items()})
        residual = {c[1]: v for c, v in r.items() if c[0] == "d"}
        sol = {self.parts[c[1]]: -v for c, v in r.items() if c[0] == "x"}
        return sol, residual


@lru_cache(maxsize=None)
def _solver(n: int) -> _SchurSolver:
    return _SchurSolver(n)


class NotSymmetricError(ValueError):
    pass


def schur_expand(f: SymFunc) -> dict:
    """Coefficients of ``f`` in the Schur basis (exact; raises if ``f`` is not symmetric)."""
    if not f.coeffs:
        return {}
    n = f.degree
    if n == 0:
        return {(): f.coeffs.get(frozenset(), LZERO)}
    solver = _solver(n)
    by_power = {}
    for d, v in f.coeffs.items():
        for e, c in v.items():
            by_power.setdefault(e, {})[d] = c
    out = {}
    for e, rhs in by_power.items():
        sol, residual = solver.solve(rhs)
        if residual:
            raise NotSymmetricError(f"q^{e} component is not symmetric")
        for lam, c in sol.items():
            if c:
                out[lam] = out.get(lam, LZERO) + LaurentPoly.monomial(e, c)
    return {lam: v for lam, v in out.items() if v}


def from_schur(coeffs: Mapping) -> SymFunc:
    """Assemble ``sum c_lam s_lam`` in quasisymmetric coordinates."""
    total = None
    for lam, c in coeffs.items():
        term = schur(partition(lam)).scale(c)
        total = term if total is None else total + term
    return total if total is not None else SymFunc(0)


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule


def lr_tableaux_count(outer: Sequence[int], inner: Sequence[int], weight: Sequence[int]) -> int:
    """Number of LR tableaux of shape ``outer/inner`` and content ``weight``.

    Semistandard fillings whose reverse row reading word (right to left,
    top to bottom) is a lattice word.
    """
    outer, inner, weight = partition(outer), partition(inner), partition(weight)
    if not contains(outer, inner) or sum(outer) - sum(inner) != sum(weight):
        return 0
    inner = inner + (0,) * (len(outer) - len(inner))
    rows = []
    count = [0]
    used = [0] * (len(weight) + 1)

    def rec(r, filled):
        if r == len(outer):
            count[0] += 1
            return
        width = outer[r] - inner[r]
        row = [0] * width

        def fill_row(pos):
            # fill right to left so the lattice condition follows reading order
            if pos < 0:
                rows.append(row[:])
                rec(r + 1, filled)
                rows.pop()
                return
            col = inner[r] + pos  # 0-based column
            hi = row[pos + 1] if pos + 1 < width else len(weight)
            lo = 1
            if r > 0 and col < outer[r - 1]:
                above_prev = inner[r - 1]
                if col >= above_prev:
                    lo = rows[r - 1][col - above_prev] + 1
            for v in range(lo, hi + 1):
                if used[v] + 1 > weight[v - 1]:
                    continue
                if v > 1 and used[v] + 1 > used[v - 1]:
                    continue
                used[v] += 1
                row[pos] = v
                fill_row(pos - 1)
                used[v] -= 1

        fill_row(width - 1)

    rec(0, 0)
    return count[0]


def skew_schur_expand(outer: Sequence[int], inner: Sequence[int] = ()) -> dict:
    outer, inner = partition(outer), partition(inner)
    n = sum(outer) - sum(inner)
    out = {}
    for nu in partitions(n):
        c = lr_tableaux_count(outer, inner, nu)
        if c:
            out[nu] = c
    return out


def schur_product(a: Mapping, b: Mapping) -> dict:
    """Product of two Schur expansions via the LR rule."""
    out = {}
    for nu, x in a.items():
        for rho, y in b.items():
            n = sum(nu) + sum(rho)
            for tau in partitions(n):
                if not contains(tau, nu):
                    continue
                c = lr_tableaux_count(tau, nu, rho)
                if c:
                    out[tau] = out.get(tau, 0) + x * y * c
    return {k: v for k, v in out.items() if v}
