"""Diagram constructions: closure, unions, mirror/reversal, cabling,
shakings, band fusion and string-link infection.

Every public operation takes and returns immutable PD diagrams; the work
happens on signed Gauss codes.  Band routes and infection splices are
combinatorial, so the composed diagram is not checked for planarity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .gauss import Gauss, arc_positions, braid, compact, from_diagram, relabel, to_diagram
from .pd import DiagramError, LinkDiagram, StringLinkDiagram

log = logging.getLogger(__name__)


class ConstructionError(DiagramError):
    """A construction's preconditions do not hold."""


@dataclass(frozen=True)
class OrientationPattern:
    """Orientations (+1/-1) of the parallel copies replacing one component, in copy order."""

    orientations: tuple[int, ...]

    def __post_init__(self):
        if any(o not in (1, -1) for o in self.orientations):
            raise ConstructionError("copy orientations must be +1 or -1")

    @classmethod
    def from_counts(cls, positive: int, negative: int = 0) -> "OrientationPattern":
        return cls((1,) * positive + (-1,) * negative)

    @classmethod
    def shaking(cls, n: int) -> "OrientationPattern":
        """The 2n+1 copies of a shaking, n+1 of them positive."""
        return cls.from_counts(n + 1, n)

    @property
    def copies(self) -> int:
        return len(self.orientations)

    @property
    def positive(self) -> int:
        return self.orientations.count(1)

    @property
    def negative(self) -> int:
        return self.orientations.count(-1)


@dataclass(frozen=True)
class RouteStep:
    arc: int
    over: bool
    sign: int


@dataclass(frozen=True)
class BandSpec:
    """A band joining two components.

    ``endpoints`` are ``(arc, side)`` pairs with side ``"L"`` or ``"R"`` of the
    arc's direction.  The band leaves the first endpoint, crosses the route
    arcs in order (``sign`` is the sign of the crossing made by the band edge
    running away from the first endpoint), then gets ``half_twists`` half
    twists before reaching the second endpoint.  ``core`` optionally ties the
    band into a 1-strand string link.
    """

    endpoints: tuple[tuple[int, str], tuple[int, str]]
    route: tuple[RouteStep, ...] = ()
    half_twists: int = 0
    core: StringLinkDiagram | None = None


@dataclass(frozen=True)
class MultidiskSpec:
    """Subdisks ``D_1..D_k``; entry ``j`` lists the passages ``(arc, sign)`` through ``D_j``."""

    subdisks: tuple[tuple[tuple[int, int], ...], ...]
    framing: int = 0

    def passage_matrix(self, d: LinkDiagram) -> tuple[list[list[int]], list[list[int]]]:
        """(a, b): a[j][i] positive and b[j][i] negative passages of component i through D_j."""
        comp = d.arc_component()
        k = len(self.subdisks)
        a = [[0] * d.m for _ in range(k)]
        b = [[0] * d.m for _ in range(k)]
        for j, disk in enumerate(self.subdisks):
            for arc, sign in disk:
                if arc not in comp:
                    raise ConstructionError(f"passage arc {arc} is not in the diagram")
                (a if sign > 0 else b)[j][comp[arc] - 1] += 1
        return a, b

    def respects(self, d: LinkDiagram) -> bool:
        if len(self.subdisks) != d.m:
            return False
        a, b = self.passage_matrix(d)
        return all(a[j][i] - b[j][i] == (i == j) for j in range(d.m) for i in range(d.m))

    def strongly_respects(self, d: LinkDiagram) -> bool:
        if not self.respects(d):
            return False
        a, b = self.passage_matrix(d)
        return all(a[j][i] + b[j][i] == 0 for j in range(d.m) for i in range(d.m) if i != j)

    def geometric_counts(self, d: LinkDiagram) -> list[int]:
        return [len(disk) for disk in self.subdisks]


# ---------------------------------------------------------------- simple ops

def closure(s: StringLinkDiagram) -> LinkDiagram:
    g = from_diagram(s)
    return to_diagram(Gauss(g.comps, g.signs, True))


def split_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    return to_diagram(_union(from_diagram(d1), from_diagram(d2)))


def _union(g1: Gauss, g2: Gauss) -> Gauss:
    a, b = relabel(g1, 0), relabel(g2, 1)
    return compact(Gauss(a.comps + b.comps, {**a.signs, **b.signs}, g1.closed))


def mirror(d):
    g = from_diagram(d)
    comps = tuple(tuple((x, not o) for x, o in comp) for comp in g.comps)
    return to_diagram(Gauss(comps, {x: -s for x, s in g.signs.items()}, g.closed))


def reverse(d, i: int):
    if not 1 <= i <= d.m:
        raise ConstructionError(f"component index {i} out of range 1..{d.m}")
    return to_diagram(_reverse(from_diagram(d), i - 1))


def _reverse(g: Gauss, ci: int) -> Gauss:
    where = g.locate()
    signs = dict(g.signs)
    for x, roles in where.items():
        if (roles[True][0] == ci) != (roles[False][0] == ci):
            signs[x] = -signs[x]
    comps = list(g.comps)
    comps[ci] = tuple(reversed(comps[ci]))
    return Gauss(tuple(comps), signs, g.closed)


def transform(d, kind: str, i: int | None = None):
    """``kind`` is ``"mirror"`` or ``"reverse"`` (with component ``i``)."""
    if kind == "mirror":
        return mirror(d)
    if kind == "reverse":
        if i is None:
            raise ConstructionError("reverse needs a component index")
        return reverse(d, i)
    raise ConstructionError(f"unknown transform {kind!r}")


# ---------------------------------------------------------------- cabling

def _full_twists(copies: int, twists: int) -> list[int]:
    """Braid word for ``twists`` full twists on ``copies`` strands."""
    if copies < 2 or twists == 0:
        return []
    one = list(range(1, copies)) * copies
    if twists > 0:
        return one * twists
    return [-g for g in reversed(one)] * (-twists)


def _cable(g: Gauss, ci: int, orientations: Sequence[int], twists: int = 0) -> Gauss:
    """Replace component ``ci`` by parallel copies.

    Copy ``k`` is the blackboard push-off ``k`` units to the left of the
    original, first built with the original orientation; ``twists`` full
    twists are inserted at the start of the bundle, then copies with
    orientation -1 are reversed and crossing signs adjusted.
    """
    C = len(orientations)
    if C == 0:
        raise ConstructionError("a component needs at least one copy")
    where = g.locate()
    new_signs: dict = {}
    new_other: list[list] = [[] for _ in g.comps]
    copies: list[list] = [[] for _ in range(C)]

    def order(n, ascending):
        return list(range(n)) if ascending else list(range(n - 1, -1, -1))

    for cj, comp in enumerate(g.comps):
        for x, over in comp:
            eps = g.signs[x]
            ov, un = where[x][True][0], where[x][False][0]
            if ov != ci and un != ci:
                if cj != ci:
                    new_other[cj].append((x, over))
                    new_signs[x] = eps
                continue
            if ov == ci and un == ci:
                if over:
                    # this passage runs on every copy a; it meets under-copies b
                    for a in range(C):
                        copies[a].extend((("s", x, a, b), True) for b in order(C, eps < 0))
                else:
                    for b in range(C):
                        copies[b].extend((("s", x, a, b), False) for a in order(C, eps > 0))
                for a in range(C):
                    for b in range(C):
                        new_signs[("s", x, a, b)] = eps
                continue
            if cj == ci:
                for k in range(C):
                    copies[k].append((("c", x, k), over))
                    new_signs[("c", x, k)] = eps
            else:
                asc = eps < 0 if over else eps > 0
                new_other[cj].extend((("c", x, k), over) for k in order(C, asc))
    word = _full_twists(C, twists)
    if word:
        tw = braid(C, word)
        # braid position p (left to right) holds copy C-1-p
        for p, seq in enumerate(tw.comps):
            copies[C - 1 - p][:0] = [(("t", x), o) for x, o in seq]
        for x, s in tw.signs.items():
            new_signs[("t", x)] = s
    owner: dict = {}
    for k, seq in enumerate(copies):
        for x, o in seq:
            owner[(x, o)] = k
    for x in list(new_signs):
        r = 1
        for o in (True, False):
            k = owner.get((x, o))
            if k is not None:
                r *= orientations[k]
        new_signs[x] *= r
    for k, o in enumerate(orientations):
        if o < 0:
            copies[k] = list(reversed(copies[k]))
    comps = [tuple(c) for c in new_other]
    comps[ci: ci + 1] = [tuple(c) for c in copies]
    return compact(Gauss(tuple(comps), new_signs, g.closed))


def cable_component(d: LinkDiagram, i: int, pattern: OrientationPattern, r: int = 0) -> LinkDiagram:
    """Replace component ``i`` by ``r``-framed parallel copies oriented per ``pattern``."""
    if not 1 <= i <= d.m:
        raise ConstructionError(f"component index {i} out of range 1..{d.m}")
    if pattern.copies == 0:
        raise ConstructionError("pattern has no copies")
    g = from_diagram(d)
    w = g.component_writhes()[i - 1]
    return to_diagram(_cable(g, i - 1, pattern.orientations, r - w))


def r_shaking(d: LinkDiagram, n: Sequence[int], r: int = 0) -> LinkDiagram:
    """The (2n_1+1, ..., 2n_m+1)-component r-shaking of ``d``."""
    if len(n) != d.m:
        raise ConstructionError(f"shaking vector has length {len(n)}, diagram has {d.m} components")
    if any(k < 0 for k in n):
        raise ConstructionError("shaking entries must be nonnegative")
    g = _shake(from_diagram(d), n, r)
    return to_diagram(g)


def _shake(g: Gauss, n: Sequence[int], r: int = 0) -> Gauss:
    writhes = g.component_writhes()
    offset = 0
    for i, ni in enumerate(n):
        pat = OrientationPattern.shaking(ni)
        g = _cable(g, i + offset, pat.orientations, r - writhes[i])
        offset += pat.copies - 1
    return g


def cable_string_link(J: StringLinkDiagram, pattern: Sequence[OrientationPattern]) -> StringLinkDiagram:
    """0-framed parallel cabling of every strand of ``J``."""
    if len(pattern) != J.m:
        raise ConstructionError(f"pattern has {len(pattern)} entries, string link has {J.m} strands")
    if any(p.copies == 0 for p in pattern):
        raise ConstructionError("every strand needs at least one copy")
    return to_diagram(_cable_all(from_diagram(J), [p.orientations for p in pattern]))


def _cable_all(g: Gauss, orientations: Sequence[Sequence[int]]) -> Gauss:
    """Cable every component (0-framed); empty orientation lists delete the strand."""
    writhes = g.component_writhes()
    keep = [i for i, o in enumerate(orientations) if len(o)]
    if len(keep) < len(orientations):
        g = _drop(g, [i for i in range(g.m) if i not in keep])
        writhes = [writhes[i] for i in keep]
        orientations = [orientations[i] for i in keep]
    offset = 0
    for i, o in enumerate(orientations):
        g = _cable(g, i + offset, o, -writhes[i])
        offset += len(o) - 1
    return g


def _drop(g: Gauss, dead: Sequence[int]) -> Gauss:
    where = g.locate()
    gone = {x for x, roles in where.items() if roles[True][0] in dead or roles[False][0] in dead}
    comps = tuple(
        tuple(p for p in comp if p[0] not in gone) for ci, comp in enumerate(g.comps) if ci not in dead
    )
    return Gauss(comps, {x: s for x, s in g.signs.items() if x not in gone}, g.closed)


def sublink(d: LinkDiagram, keep: Sequence[int]) -> LinkDiagram:
    """Sublink on the (1-based) components ``keep``, in that order."""
    g = from_diagram(d)
    h = _drop(g, [i for i in range(g.m) if i + 1 not in keep])
    kept = sorted(keep)
    comps = tuple(h.comps[kept.index(i)] for i in keep)
    return to_diagram(compact(Gauss(comps, h.signs, True)))


# ---------------------------------------------------------------- band sums

@dataclass
class _Insertions:
    """Passages to insert on edges of a Gauss code, keyed by (comp, edge)."""

    at: dict = field(default_factory=dict)

    def add(self, key, passages):
        self.at.setdefault(key, []).extend(passages)

    def apply(self, g: Gauss, marks=()) -> tuple[list[list], dict]:
        """Return new sequences and the positions of ``marks`` (comp, edge) after insertion.

        A mark sits after everything inserted on its edge, just before the
        original passage.
        """
        out = []
        pos = {}
        for ci, comp in enumerate(g.comps):
            n = len(comp)
            edges = n if g.closed else n + 1
            seq: list = []
            for k in range(max(edges, 1)):
                seq.extend(self.at.get((ci, k), []))
                if (ci, k) in marks:
                    pos[(ci, k)] = len(seq)
                if k < n:
                    seq.append(comp[k])
            out.append(seq)
        return out, pos


def band_sum(d: LinkDiagram, b: BandSpec) -> LinkDiagram:
    """Fuse the two components joined by band ``b``."""
    g, _ = _band_sum(from_diagram(d), arc_positions(d), b)
    return to_diagram(g)


def _band_sum(g: Gauss, arcpos: dict, b: BandSpec):
    (arc_a, side_a), (arc_b, side_b) = b.endpoints
    for arc in (arc_a, arc_b, *(s.arc for s in b.route)):
        if arc not in arcpos:
            raise ConstructionError(f"band arc {arc} is not in the diagram")
    if side_a not in ("L", "R") or side_b not in ("L", "R"):
        raise ConstructionError("band sides must be 'L' or 'R'")
    ea, eb = arcpos[arc_a], arcpos[arc_b]
    if ea[0] == eb[0]:
        raise ConstructionError("band endpoints lie on the same component; only fusions are supported")
    if (side_a == side_b) == (b.half_twists % 2 == 1):
        raise ConstructionError(
            "band attachment is orientation-incoherent: equal sides need an even number of "
            "half twists, opposite sides an odd number"
        )
    signs = dict(g.signs)
    ins = _Insertions()
    edge1: list = []
    edge2: list = []
    edge2_left = side_a == "R"
    for t, step in enumerate(b.route):
        x1, x2 = ("band", t, 1), ("band", t, 2)
        signs[x1], signs[x2] = step.sign, -step.sign
        edge1.append((x1, step.over))
        edge2.insert(0, (x2, step.over))
        cross = step.sign if step.over else -step.sign
        first, second = (x1, x2) if (cross > 0) == edge2_left else (x2, x1)
        ins.add(arcpos[step.arc], [(first, not step.over), (second, not step.over)])
    if b.core is not None:
        core = from_diagram(b.core)
        if core.m != 1:
            raise ConstructionError("band core must be a 1-strand string link")
        # copy 1 is the push-off to the left of copy 0; edge1 runs forward
        orient = (1, -1) if edge2_left else (-1, 1)
        pair = relabel(_cable(core, 0, orient, -core.component_writhes()[0]), "core")
        signs.update(pair.signs)
        fwd = 0 if edge2_left else 1
        edge1.extend(pair.comps[fwd])
        edge2[:0] = pair.comps[1 - fwd]
    sgn = 1 if b.half_twists > 0 else -1
    for t in range(abs(b.half_twists)):
        x = ("twist", t)
        signs[x] = sgn
        edge1.append((x, t % 2 == 0))
        edge2.insert(0, (x, t % 2 == 1))
    seqs, pos = ins.apply(g, marks=(ea, eb))
    A, B = seqs[ea[0]], seqs[eb[0]]
    ia, ib = pos[ea], pos[eb]
    fused = A[:ia] + edge1 + B[ib:] + B[:ib] + edge2 + A[ia:]
    lo, hi = sorted((ea[0], eb[0]))
    comps = []
    for ci, seq in enumerate(seqs):
        if ci == lo:
            comps.append(tuple(fused))
        elif ci != hi:
            comps.append(tuple(seq))
    info = {"fused": lo, "edge1_start": ia, "edge2_start": ia + len(edge1) + len(B)}
    return Gauss(tuple(comps), signs, True), info


# ---------------------------------------------------------------- infection

def infect(d: LinkDiagram, e: MultidiskSpec, J: StringLinkDiagram) -> LinkDiagram:
    """String-link infection of ``d`` by ``J`` along the multidisk ``e``.

    Passages through ``D_j`` are cut and spliced, in listed order, through
    oppositely or equally oriented 0-framed parallel copies of strand ``j``.
    A multidisk that does not respect ``d`` only produces a warning.
    """
    if J.m != len(e.subdisks):
        raise ConstructionError(f"string link has {J.m} strands but multidisk has {len(e.subdisks)} subdisks")
    if e.framing != 0:
        raise ConstructionError("only the 0-framed multidisk is supported")
    arcpos = arc_positions(d)
    for disk in e.subdisks:
        for arc, sign in disk:
            if arc not in arcpos:
                raise ConstructionError(f"passage arc {arc} is not in the diagram")
            if sign not in (1, -1):
                raise ConstructionError("passage signs must be +1 or -1")
    g = _infect(from_diagram(d), arcpos, e, from_diagram(J))
    out = to_diagram(g)
    if not e.respects(d):
        msg = "multidisk does not respect the link"
        log.warning(msg)
        out = LinkDiagram(out.crossings, out.components, warnings=(msg,))
    return out


def _infect(g: Gauss, arcpos: dict, e: MultidiskSpec, J: Gauss) -> Gauss:
    pattern = [[s for _, s in disk] for disk in e.subdisks]
    cabled = relabel(_cable_all(J, pattern), "J")
    ins = _Insertions()
    strand = 0
    for disk in e.subdisks:
        for arc, _ in disk:
            ins.add(arcpos[arc], list(cabled.comps[strand]))
            strand += 1
    seqs, _ = ins.apply(g)
    return Gauss(tuple(tuple(s) for s in seqs), {**g.signs, **cabled.signs}, True)
