"""Signed Gauss codes: the working representation behind every construction.

Each component (or string-link strand) is a sequence of passages
``(crossing_id, is_over)``; every crossing id occurs exactly twice, once
over and once under, and carries a sign.  Arc labels are assigned only
when converting back to a PD diagram: the arc entering passage ``k`` of a
component whose first arc is labelled ``o + 1`` gets label ``o + k + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .pd import Crossing, DiagramError, LinkDiagram, StringLinkDiagram

Passage = tuple[object, bool]


@dataclass(frozen=True)
class Gauss:
    comps: tuple[tuple[Passage, ...], ...]
    signs: dict = field(hash=False)
    closed: bool = True

    @property
    def m(self) -> int:
        return len(self.comps)

    def locate(self) -> dict:
        """crossing id -> {True: (comp, pos) of over passage, False: (comp, pos) of under}."""
        where: dict = {}
        for ci, comp in enumerate(self.comps):
            for k, (x, over) in enumerate(comp):
                where.setdefault(x, {})[over] = (ci, k)
        return where

    def check(self) -> None:
        where = self.locate()
        for x, roles in where.items():
            if set(roles) != {True, False}:
                raise DiagramError(f"crossing {x!r} lacks an over or under passage")
            if x not in self.signs:
                raise DiagramError(f"crossing {x!r} has no sign")
        n = sum(len(c) for c in self.comps)
        if n != 2 * len(where):
            raise DiagramError("a crossing is passed more than twice")

    def component_writhes(self) -> list[int]:
        where = self.locate()
        out = [0] * self.m
        for x, roles in where.items():
            if roles[True][0] == roles[False][0]:
                out[roles[True][0]] += self.signs[x]
        return out

    def crossing_count(self) -> int:
        return sum(len(c) for c in self.comps) // 2


# ---------------------------------------------------------------- conversion

def from_diagram(d) -> Gauss:
    head = {}
    for idx, c in enumerate(d.crossings):
        head[c.under_in] = (idx, False)
        head[c.over_in] = (idx, True)
    signs = {idx: c.sign for idx, c in enumerate(d.crossings)}
    if isinstance(d, LinkDiagram):
        comps = tuple(tuple(head[a] for a in comp if a in head) for comp in d.components)
        return Gauss(comps, signs, True)
    comps = tuple(tuple(head[a] for a in s[:-1]) for s in d.strands)
    return Gauss(comps, signs, False)


def arc_positions(d) -> dict[int, tuple[int, int]]:
    """arc label -> (component index, index of the passage the arc enters)."""
    parts = d.components if isinstance(d, LinkDiagram) else d.strands
    return {a: (ci, k) for ci, comp in enumerate(parts) for k, a in enumerate(comp)}


def to_diagram(g: Gauss):
    g.check()
    order: dict = {}
    for comp in g.comps:
        for x, _ in comp:
            order.setdefault(x, len(order))
    labels: list[list[int]] = []
    offset = 0
    for comp in g.comps:
        n = len(comp)
        count = max(n, 1) if g.closed else n + 1
        labels.append(list(range(offset + 1, offset + count + 1)))
        offset += count
    roles: dict = {}
    for ci, comp in enumerate(g.comps):
        n = len(comp)
        lab = labels[ci]
        for k, (x, over) in enumerate(comp):
            inc = lab[k]
            out = lab[(k + 1) % n] if g.closed else lab[k + 1]
            roles.setdefault(x, {})[over] = (inc, out)
    crossings = []
    for x in sorted(order, key=order.get):
        ui, uo = roles[x][False]
        oi, oo = roles[x][True]
        crossings.append(Crossing.from_roles(ui, uo, oi, oo, g.signs[x]))
    parts = tuple(tuple(lab) for lab in labels)
    if g.closed:
        return LinkDiagram(tuple(crossings), parts)
    return StringLinkDiagram(tuple(crossings), parts)


def relabel(g: Gauss, tag) -> Gauss:
    """Replace crossing ids ``x`` by ``(tag, x)`` so two codes can be merged."""
    comps = tuple(tuple(((tag, x), o) for x, o in comp) for comp in g.comps)
    return Gauss(comps, {(tag, x): s for x, s in g.signs.items()}, g.closed)


def compact(g: Gauss) -> Gauss:
    """Renumber crossings 0, 1, ... in order of first appearance."""
    order: dict = {}
    for comp in g.comps:
        for x, _ in comp:
            order.setdefault(x, len(order))
    comps = tuple(tuple((order[x], o) for x, o in comp) for comp in g.comps)
    return Gauss(comps, {order[x]: s for x, s in g.signs.items() if x in order}, g.closed)


# ---------------------------------------------------------------- braids

def braid(n: int, word, pure: bool = True) -> Gauss:
    """Open Gauss code of an ``n``-strand braid.

    ``word`` holds nonzero integers; ``k`` is the generator in which the strand
    at position ``k`` (1-based, counted left to right) crosses over the strand
    at ``k + 1`` with sign +1, and ``-k`` its inverse (sign -1).  Strand ``i``
    is the one starting at bottom position ``i``.
    """
    at = list(range(n))
    seqs: list[list[Passage]] = [[] for _ in range(n)]
    signs = {}
    for t, gen in enumerate(word):
        k = abs(gen) - 1
        if not 0 <= k < n - 1 or gen == 0:
            raise DiagramError(f"braid generator {gen} out of range for {n} strands")
        left, right = at[k], at[k + 1]
        left_over = gen > 0
        seqs[left].append((t, left_over))
        seqs[right].append((t, not left_over))
        signs[t] = 1 if gen > 0 else -1
        at[k], at[k + 1] = right, left
    if pure and at != list(range(n)):
        raise DiagramError("braid word is not pure")
    return Gauss(tuple(tuple(s) for s in seqs), signs, False)


def braid_permutation(n: int, word) -> list[int]:
    at = list(range(n))
    for gen in word:
        k = abs(gen) - 1
        at[k], at[k + 1] = at[k + 1], at[k]
    return at


# ---------------------------------------------------------------- normalisation

def _neighbours(g: Gauss, ci: int, k: int):
    comp = g.comps[ci]
    n = len(comp)
    if g.closed:
        return (ci, (k + 1) % n) if n > 1 else None
    return (ci, k + 1) if k + 1 < n else None


def _remove(g: Gauss, dead: set) -> Gauss:
    comps = tuple(tuple(p for p in comp if p[0] not in dead) for comp in g.comps)
    return Gauss(comps, {x: s for x, s in g.signs.items() if x not in dead}, g.closed)


def reidemeister_reduce(g: Gauss) -> Gauss:
    """Greedy removal of R1 kinks and R2 bigons until none remain.

    R1: the two passages of a crossing are consecutive on one component.
    R2: crossings x, y of opposite sign whose over passages are consecutive
    on one strand and whose under passages are consecutive on another.
    """
    while True:
        found = None
        for ci, comp in enumerate(g.comps):
            n = len(comp)
            for k in range(n):
                nb = _neighbours(g, ci, k)
                if nb is None:
                    continue
                if comp[k][0] == g.comps[nb[0]][nb[1]][0] and nb[1] != k:
                    found = {comp[k][0]}
                    break
            if found:
                break
        if not found:
            where = g.locate()
            for ci, comp in enumerate(g.comps):
                for k in range(len(comp)):
                    nb = _neighbours(g, ci, k)
                    if nb is None or nb[1] == k:
                        continue
                    (x, ox), (y, oy) = comp[k], g.comps[nb[0]][nb[1]]
                    if not (ox and oy) or x == y or g.signs[x] != -g.signs[y]:
                        continue
                    ux, uy = where[x][False], where[y][False]
                    if ux[0] != uy[0]:
                        continue
                    a = _neighbours(g, *ux)
                    b = _neighbours(g, *uy)
                    if a == uy or b == ux:
                        found = {x, y}
                        break
                if found:
                    break
        if not found:
            return g
        g = _remove(g, found)


def canonical_key(g: Gauss, limit: int = 200_000):
    """Relabelling- and rotation-invariant key for comparing codes.

    Closed components are rotated to the lexicographically smallest encoding;
    crossings are renamed in order of first appearance.
    """
    rotations = []
    for comp in g.comps:
        n = len(comp)
        rotations.append(range(n) if g.closed and n else [0])
    total = 1
    for r in rotations:
        total *= len(r)
    if total > limit:
        raise ValueError("too many rotations to canonicalise")
    best = None
    for choice in itertools.product(*rotations):
        names: dict = {}
        enc = []
        for comp, r in zip(g.comps, choice):
            seq = comp[r:] + comp[:r]
            row = []
            for x, o in seq:
                if x not in names:
                    names[x] = len(names)
                row.append((names[x], o, g.signs[x]))
            enc.append(tuple(row))
        enc = tuple(enc)
        if best is None or enc < best:
            best = enc
    return (g.closed, best)
