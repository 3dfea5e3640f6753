"""Exact Laurent polynomials in a single indeterminate.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing here
ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class LaurentPoly:
    """A finite sum ``sum_e c_e q**e`` with exact rational coefficients.

    Instances are treated as immutable values. Zero coefficients are never
    stored, so ``LaurentPoly()`` is the zero polynomial and equality is
    equality of the coefficient maps.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Coeff] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if not isinstance(v, Rational):
                    raise TypeError(f"coefficient {v!r} is not exact")
                if v:
                    c[int(e)] = _clean(v)
        self._c = c
        self._hash = None

    @classmethod
    def monomial(cls, exp: int = 0, coeff: Coeff = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __iter__(self):
        return iter(sorted(self._c))

    def __getitem__(self, e: int) -> Coeff:
        return self._c.get(e, 0)

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, Rational):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Rational):
            return LaurentPoly({0: other})
        raise TypeError(f"cannot coerce {other!r} to LaurentPoly")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = _clean(s)
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + v1 * v2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return LaurentPoly._raw({e: _clean(v) for e, v in c.items()})

    __rmul__ = __mul__

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by ``q**n``."""
        return LaurentPoly._raw({e + n: v for e, v in self._c.items()})

    def substitute_power(self, m: int) -> "LaurentPoly":
        """Return ``p(q**m)``; ``m`` may be negative (e.g. ``q -> qlam**-2``)."""
        if m == 0:
            return LaurentPoly({0: self.at_one()})
        return LaurentPoly._raw({e * m: v for e, v in self._c.items()})

    def at_one(self) -> Coeff:
        return _clean(sum(self._c.values(), 0))

    def min_degree(self) -> int:
        return min(self._c) if self._c else 0

    def max_degree(self) -> int:
        return max(self._c) if self._c else 0

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_nonnegative_polynomial(self) -> bool:
        """True iff the polynomial lies in N[q] (integer, nonnegative, no negative powers)."""
        return all(
            e >= 0 and v > 0 and (not isinstance(v, Fraction) or v.denominator == 1)
            for e, v in self._c.items()
        )

    def divide_monomial(self, other: "LaurentPoly") -> int | None:
        """If ``self == q**e * other`` for a single integer ``e`` return ``e``."""
        if not self._c or not other._c or len(self._c) != len(other._c):
            return None
        e = self.min_degree() - other.min_degree()
        return e if other.shift(e) == self else None

    def to_triples(self) -> list:
        """Serialize as ``[[exp, num, den], ...]`` sorted by exponent."""
        out = []
        for e, v in sorted(self._c.items()):
            f = Fraction(v)
            out.append([e, f.numerator, f.denominator])
        return out

    @classmethod
    def from_triples(cls, triples: Iterable) -> "LaurentPoly":
        return cls({int(e): Fraction(int(n), int(d)) for e, n, d in triples})

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "q") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            else:
                mono = f"{var}^{e}"
            if mono and v == 1:
                term = mono
            elif mono and v == -1:
                term = "-" + mono
            elif mono:
                term = f"{v}*{mono}"
            else:
                term = str(v)
            parts.append(term)
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


def qpow(e: int) -> LaurentPoly:
    return LaurentPoly._raw({e: 1})
