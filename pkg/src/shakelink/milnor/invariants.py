"""Milnor invariants and the crossing-sign linking number."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..pd import DiagramError, LinkDiagram
from .series import check_degree
from .wirtinger import longitude_series

# above this many monomials, longitudes are expanded per index set instead of all at once
_DENSE_LIMIT = 400


@dataclass(frozen=True)
class MultiIndex:
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise ValueError("a multi-index needs at least one entry")

    @classmethod
    def parse(cls, text: str | Sequence[int] | "MultiIndex") -> "MultiIndex":
        if isinstance(text, MultiIndex):
            return text
        if isinstance(text, str):
            if not text.isdigit():
                raise ValueError(f"multi-index must be a string of digits, got {text!r}")
            return cls(tuple(int(ch) for ch in text))
        return cls(tuple(int(i) for i in text))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "".join(map(str, self.entries))

    def count(self, i: int) -> int:
        return self.entries.count(i)


@dataclass(frozen=True)
class MuResult:
    mu: int
    delta: int
    mu_bar: int
    q_used: int


def _coefficient(d: LinkDiagram, J: Sequence[int], q: int, variables: frozenset | None, policy: str) -> int:
    lam = longitude_series(d, q, variables, policy)[J[-1] - 1]
    return lam.coefficient(J[:-1])


def _variables(d: LinkDiagram, I: Sequence[int], q: int) -> frozenset | None:
    n = sum(d.m**k for k in range(q + 1))
    return None if n <= _DENSE_LIMIT else frozenset(I)


def proper_cyclic_subindices(I: Sequence[int]) -> set[tuple[int, ...]]:
    """All cyclic permutations of subsequences of ``I`` obtained by deleting at least one entry, length >= 2."""
    out = set()
    n = len(I)
    for r in range(2, n):
        for pos in itertools.combinations(range(n), r):
            J = tuple(I[p] for p in pos)
            for s in range(r):
                out.add(J[s:] + J[:s])
    return out


def mu(d: LinkDiagram, I, q: int | None = None, policy: str = "lowest") -> MuResult:
    """Milnor invariant of the multi-index ``I`` (length >= 2) with its indeterminacy."""
    if not isinstance(d, LinkDiagram):
        raise DiagramError("Milnor invariants are computed on closed link diagrams")
    idx = MultiIndex.parse(I).entries
    if len(idx) < 2:
        raise ValueError("multi-index must have length at least 2")
    if any(not 1 <= i <= d.m for i in idx):
        raise ValueError(f"multi-index {idx} out of range for {d.m} components")
    q = len(idx) if q is None else q
    if q < len(idx):
        raise ValueError(f"truncation degree {q} is below |I| = {len(idx)}")
    check_degree(q)
    variables = _variables(d, idx, q)
    value = _coefficient(d, idx, q, variables, policy)
    delta = 0
    for J in sorted(proper_cyclic_subindices(idx)):
        delta = math.gcd(delta, _coefficient(d, J, q, variables, policy))
    bar = value % delta if delta else value
    return MuResult(value, delta, bar, q)


def linking_number_oracle(d: LinkDiagram, i: int, j: int) -> int:
    """Half the signed count of crossings between components ``i`` and ``j``."""
    if i == j:
        raise ValueError("linking number needs two distinct components")
    if not (1 <= i <= d.m and 1 <= j <= d.m):
        raise ValueError(f"component index out of range 1..{d.m}")
    comp = d.arc_component()
    total = 0
    for c in d.crossings:
        pair = {comp[c.under_in], comp[c.over_in]}
        if pair == {i, j}:
            total += c.sign
    if total % 2:
        raise DiagramError(f"odd crossing-sign sum {total} between components {i} and {j}")
    return total // 2


def linking_matrix(d: LinkDiagram) -> dict[tuple[int, int], int]:
    return {(i, j): linking_number_oracle(d, i, j) for i in range(1, d.m + 1) for j in range(i + 1, d.m + 1)}


def all_indices(m: int, length: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(1, m + 1), repeat=length)


def first_nonvanishing(d: LinkDiagram, max_len: int) -> list[tuple[MultiIndex, int]]:
    """Nonzero mu-bar values at the shortest length where any occurs (empty if none through ``max_len``).

    Below that length every invariant vanishes, so the indeterminacy there is 0.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    for length in range(2, max_len + 1):
        found = []
        for I in all_indices(d.m, length):
            r = mu(d, I)
            if r.mu_bar:
                found.append((MultiIndex(I), r.mu_bar))
        if found:
            return found
    return []


def format_mu(I, r: MuResult) -> str:
    return f"mu I={MultiIndex.parse(I)} value={r.mu} delta={r.delta} mubar={r.mu_bar} q={r.q_used}"
