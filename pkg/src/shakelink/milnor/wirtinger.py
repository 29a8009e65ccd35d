"""Wirtinger presentations, Chen-Milnor reduction and longitudes.

Conventions: generators are arc labels.  At a crossing of sign ``e`` the
outgoing under-arc is ``over^e * incoming * over^-e``; the two over-arcs of a
crossing are the same generator.  Walking a component from its base arc the
arc words are therefore ``C_k x C_k^-1`` with ``C_k = c_k ... c_1``, and the
longitude is ``C_n`` (which commutes with the base meridian), followed by the
self-writhe correction ``x^-w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from ..pd import DiagramError, LinkDiagram
from .series import TruncatedSeries, check_degree
from .words import GroupWord


class Relation(NamedTuple):
    out_under: int
    over: int
    in_under: int
    sign: int


@dataclass(frozen=True)
class WirtingerPresentation:
    generators: tuple[int, ...]
    relations: tuple[Relation, ...]
    over_pairs: tuple[tuple[int, int], ...]
    base_meridians: tuple[int, ...]
    component: tuple[tuple[int, int], ...]
    m: int

    def component_of(self) -> dict[int, int]:
        return dict(self.component)

    @property
    def arc_classes(self) -> int:
        """Number of over-arcs: edge generators modulo the identifications ``over_pairs``."""
        parent = {a: a for a in self.generators}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.over_pairs:
            parent[find(a)] = find(b)
        return len({find(a) for a in self.generators})


def _base_arc(comp, policy: str) -> int:
    if policy == "lowest":
        return min(comp)
    if policy == "highest":
        return max(comp)
    raise ValueError(f"unknown base-arc policy {policy!r}")


def wirtinger(d: LinkDiagram, policy: str = "lowest") -> WirtingerPresentation:
    if not isinstance(d, LinkDiagram):
        raise DiagramError("Wirtinger presentation needs a closed link diagram")
    rels = tuple(Relation(c.under_out, c.over_in, c.under_in, c.sign) for c in d.crossings)
    pairs = tuple((c.over_in, c.over_out) for c in d.crossings)
    comp = d.arc_component()
    return WirtingerPresentation(
        generators=tuple(sorted(comp)),
        relations=rels,
        over_pairs=pairs,
        base_meridians=tuple(_base_arc(c, policy) for c in d.components),
        component=tuple(sorted(comp.items())),
        m=d.m,
    )


def _walks(p: WirtingerPresentation):
    """Per component: base arc and the steps ``(next_arc, over_arc or None, sign)``."""
    step = {r.in_under: (r.out_under, r.over, r.sign) for r in p.relations}
    step.update({a: (b, None, 0) for a, b in p.over_pairs})
    walks = []
    for base in p.base_meridians:
        seq = []
        a = base
        while a in step:
            nxt = step[a]
            seq.append(nxt)
            a = nxt[0]
            if a == base:
                break
        walks.append((base, seq))
    return walks


def chen_milnor_reduce(p: WirtingerPresentation, q: int) -> dict[int, GroupWord]:
    """Express every arc generator in the base meridians ``x_1..x_m``, correct modulo the
    (q+1)-st lower central series term."""
    check_degree(q)
    comp = p.component_of()
    words = {a: GroupWord.gen(comp[a]) for a in p.generators}
    walks = _walks(p)
    for _ in range(q - 1):
        new = {}
        for i, (base, seq) in enumerate(walks, start=1):
            cur = GroupWord.gen(i)
            new[base] = cur
            for nxt, over, sign in seq:
                if over is not None:
                    cur = cur.conjugate(words[over] ** sign).reduced()
                new.setdefault(nxt, cur)
        words = new
    return words


def longitude_word(d: LinkDiagram, p: WirtingerPresentation, reduction: dict[int, GroupWord], i: int) -> GroupWord:
    """0-framed longitude of component ``i`` in the base meridians."""
    base, seq = _walks(p)[i - 1]
    lam = GroupWord()
    writhe = 0
    comp = p.component_of()
    for nxt, over, sign in seq:
        if over is not None:
            lam = (reduction[over] ** sign) * lam
            if comp[over] == i:
                writhe += sign
    return (lam * GroupWord.gen(i, -writhe)).reduced()


@lru_cache(maxsize=512)
def longitude_series(d: LinkDiagram, q: int, variables: frozenset | None = None, policy: str = "lowest"):
    """Magnus expansions (truncated at ``q``) of all 0-framed longitudes.

    Runs the same Chen-Milnor recursion as :func:`chen_milnor_reduce` but
    directly on series, which keeps the cost polynomial in ``q``.
    """
    check_degree(q)
    p = wirtinger(d, policy)
    comp = p.component_of()

    def gen(i, e=1):
        if variables is not None and i not in variables:
            return TruncatedSeries.one(q)
        return TruncatedSeries.generator(i, q, e)

    ser = {a: (gen(comp[a]), gen(comp[a], -1)) for a in p.generators}
    walks = _walks(p)
    for _ in range(q - 1):
        new = {}
        for i, (base, seq) in enumerate(walks, start=1):
            cur = (gen(i), gen(i, -1))
            new[base] = cur
            for nxt, over, sign in seq:
                if over is not None:
                    s, sinv = ser[over]
                    c, cinv = (s, sinv) if sign > 0 else (sinv, s)
                    cur = (c * cur[0] * cinv, c * cur[1] * cinv)
                new.setdefault(nxt, cur)
        ser = new
    out = []
    for i, (base, seq) in enumerate(walks, start=1):
        lam = TruncatedSeries.one(q)
        writhe = 0
        for nxt, over, sign in seq:
            if over is not None:
                s, sinv = ser[over]
                lam = (s if sign > 0 else sinv) * lam
                if comp[over] == i:
                    writhe += sign
        corr = gen(i, -1 if writhe > 0 else 1)
        for _ in range(abs(writhe)):
            lam = lam * corr
        out.append(lam)
    return tuple(out)
