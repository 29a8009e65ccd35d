"""Truncated noncommutative power series with integer coefficients.

Monomials are tuples of variable indices (``()`` is the constant term);
products drop every monomial longer than the truncation degree.  The
Magnus expansion sends generator ``x_i`` to ``1 + X_i``.
"""

from __future__ import annotations

import os
from collections import defaultdict
from typing import Iterable, Mapping

from .words import GroupWord

DEFAULT_MAX_DEGREE = 8


class DegreeTooLarge(ValueError):
    pass


def max_degree() -> int:
    return int(os.environ.get("SHAKELINK_MAX_DEGREE", DEFAULT_MAX_DEGREE))


def check_degree(q: int) -> None:
    if q < 1:
        raise ValueError(f"truncation degree must be at least 1, got {q}")
    cap = max_degree()
    if q > cap:
        raise DegreeTooLarge(f"truncation degree {q} exceeds the cap {cap} (SHAKELINK_MAX_DEGREE)")


class TruncatedSeries:
    __slots__ = ("q", "terms")

    def __init__(self, q: int, terms: Mapping[tuple, int] | None = None):
        self.q = q
        self.terms = {k: v for k, v in (terms or {}).items() if v and len(k) <= q}

    @classmethod
    def one(cls, q: int) -> "TruncatedSeries":
        return cls(q, {(): 1})

    @classmethod
    def generator(cls, i: int, q: int, e: int = 1) -> "TruncatedSeries":
        """Image of ``x_i^e`` for ``e = +1`` or ``-1``."""
        if e > 0:
            return cls(q, {(): 1, (i,): 1})
        return cls(q, {(i,) * k: (-1) ** k for k in range(q + 1)})

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        q = min(self.q, other.q)
        by_deg: dict[int, list] = defaultdict(list)
        for m2, c2 in other.terms.items():
            by_deg[len(m2)].append((m2, c2))
        acc: dict[tuple, int] = defaultdict(int)
        for m1, c1 in self.terms.items():
            room = q - len(m1)
            for deg in range(room + 1):
                for m2, c2 in by_deg.get(deg, ()):
                    acc[m1 + m2] += c1 * c2
        return TruncatedSeries(q, acc)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        acc = defaultdict(int, self.terms)
        for k, v in other.terms.items():
            acc[k] += v
        return TruncatedSeries(min(self.q, other.q), acc)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + TruncatedSeries(other.q, {k: -v for k, v in other.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        q = min(self.q, other.q)
        a = {k: v for k, v in self.terms.items() if len(k) <= q}
        b = {k: v for k, v in other.terms.items() if len(k) <= q}
        return a == b

    def __repr__(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        body = " + ".join(f"{v}*X{''.join(map(str, k))}" if k else str(v) for k, v in items)
        return f"TruncatedSeries(q={self.q}: {body or 0})"

    def coefficient(self, monomial: Iterable[int]) -> int:
        return self.terms.get(tuple(monomial), 0)

    def truncate(self, q: int) -> "TruncatedSeries":
        return TruncatedSeries(min(q, self.q), self.terms)

    def restrict(self, variables) -> "TruncatedSeries":
        """Set every variable outside ``variables`` to zero."""
        keep = set(variables)
        return TruncatedSeries(self.q, {k: v for k, v in self.terms.items() if set(k) <= keep})


def magnus_expand(w: GroupWord, q: int, variables=None) -> TruncatedSeries:
    """Magnus expansion of ``w`` truncated at degree ``q``.

    With ``variables`` given, generators outside that set map to 1, which is
    a homomorphism and leaves coefficients of monomials in ``variables``
    unchanged.
    """
    check_degree(q)
    out = TruncatedSeries.one(q)
    for g, e in w.letters:
        if variables is not None and g not in variables:
            continue
        out = out * TruncatedSeries.generator(g, q, e)
    return out
