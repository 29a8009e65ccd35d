"""Planar-diagram (PD) link and string-link diagrams.

A crossing is stored in planar cyclic form: four arc labels listed
counterclockwise starting from the incoming under-arc, plus the position
(1 or 3) at which the over-strand enters and a stored sign.  The sign that
follows from the cyclic order and the orientation is available as
``Crossing.derived_sign`` so that ``validate`` can detect a mismatch.

Text format::

    # comment
    link m=2
    X 1 2 3 4 sign=+1      # incoming-under outgoing-under incoming-over outgoing-over
    O 3                    # crossingless component number 3
    E bottom 1 5           # string links only: endpoint position and arc
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple, Union


class DiagramError(ValueError):
    """Malformed or inconsistent diagram."""


class PDSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ArcDegreeError(DiagramError):
    pass


class OrientationError(DiagramError):
    pass


@dataclass(frozen=True)
class Crossing:
    pd: tuple[int, int, int, int]
    over_incoming: int
    sign: int

    def __post_init__(self):
        if self.over_incoming not in (1, 3):
            raise DiagramError("over_incoming must be 1 or 3")
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_roles(cls, under_in: int, under_out: int, over_in: int, over_out: int, sign: int) -> "Crossing":
        if sign > 0:
            return cls((under_in, over_out, under_out, over_in), 3, 1)
        return cls((under_in, over_in, under_out, over_out), 1, -1)

    @property
    def under_in(self) -> int:
        return self.pd[0]

    @property
    def under_out(self) -> int:
        return self.pd[2]

    @property
    def over_in(self) -> int:
        return self.pd[self.over_incoming]

    @property
    def over_out(self) -> int:
        return self.pd[4 - self.over_incoming]

    @property
    def roles(self) -> tuple[int, int, int, int]:
        return (self.under_in, self.under_out, self.over_in, self.over_out)

    @property
    def derived_sign(self) -> int:
        return 1 if self.over_incoming == 3 else -1


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented closed link diagram.

    ``components[i]`` lists the arc labels of component ``i + 1`` in
    traversal order.  A crossingless component is a single arc that appears
    in no crossing.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(a for comp in self.components for a in comp)

    def arc_component(self) -> dict[int, int]:
        return {a: i + 1 for i, comp in enumerate(self.components) for a in comp}


@dataclass(frozen=True)
class StringLinkDiagram:
    """Tangle whose strand ``i`` runs from bottom position ``i`` to top position ``i``.

    ``strands[i]`` lists arc labels from the bottom endpoint to the top one.
    """

    crossings: tuple[Crossing, ...]
    strands: tuple[tuple[int, ...], ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def m(self) -> int:
        return len(self.strands)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.strands)

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(s[-1] for s in self.strands)

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(a for s in self.strands for a in s)


Diagram = Union[LinkDiagram, StringLinkDiagram]


class Violation(NamedTuple):
    kind: str
    detail: str


# ---------------------------------------------------------------- parsing

_HEADER = re.compile(r"(link|stringlink)\s+m=(\d+)\s*$")
_CROSSING = re.compile(r"X\s+(\d+)\s+(\d+)\s+(\d+)\s+(\d+)\s+sign=([+-]1)\s*$")
_LOOP = re.compile(r"O\s+(\d+)\s*$")
_ENDPOINT = re.compile(r"E\s+(bottom|top)\s+(\d+)\s+(\d+)\s*$")


def _successors(crossings, labels_open=()) -> dict[int, int]:
    """Map each arc to the arc that follows it through its head crossing."""
    heads: Counter = Counter()
    tails: Counter = Counter()
    nxt = {}
    for c in crossings:
        nxt[c.under_in] = c.under_out
        nxt[c.over_in] = c.over_out
        heads.update((c.under_in, c.over_in))
        tails.update((c.under_out, c.over_out))
    for label in set(heads) | set(tails):
        if heads[label] > 1 or tails[label] > 1:
            raise OrientationError(
                f"arc {label} is entered {heads[label]} times and left {tails[label]} times"
            )
    return nxt


def parse_pd(text: str) -> Diagram:
    kind = None
    m = 0
    crossings: list[Crossing] = []
    loops: list[int] = []
    ends: dict[str, dict[int, int]] = {"bottom": {}, "top": {}}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        if kind is None:
            hit = _HEADER.match(line)
            if not hit:
                raise PDSyntaxError("expected header 'link m=<int>' or 'stringlink m=<int>'", lineno, col)
            kind, m = hit.group(1), int(hit.group(2))
            continue
        if hit := _CROSSING.match(line):
            labels = [int(hit.group(k)) for k in range(1, 5)]
            if min(labels) < 1:
                raise PDSyntaxError("arc labels must be positive integers", lineno, col)
            crossings.append(Crossing.from_roles(*labels, int(hit.group(5))))
        elif hit := _LOOP.match(line):
            if kind != "link":
                raise PDSyntaxError("'O' declarations are only valid in links", lineno, col)
            loops.append(int(hit.group(1)))
        elif hit := _ENDPOINT.match(line):
            if kind != "stringlink":
                raise PDSyntaxError("'E' declarations are only valid in string links", lineno, col)
            side, pos, arc = hit.group(1), int(hit.group(2)), int(hit.group(3))
            if pos in ends[side]:
                raise PDSyntaxError(f"duplicate {side} endpoint {pos}", lineno, col)
            ends[side][pos] = arc
        else:
            raise PDSyntaxError(f"unrecognised line {line!r}", lineno, col)
    if kind is None:
        raise PDSyntaxError("missing header", 1)
    if m < 1:
        raise DiagramError("component count m must be at least 1")
    if kind == "link":
        return _build_link(tuple(crossings), m, loops)
    return _build_string_link(tuple(crossings), m, ends)


def _check_degrees(crossings, allowed_once=frozenset()):
    counts = Counter(a for c in crossings for a in c.pd)
    for label, n in sorted(counts.items()):
        expected = 1 if label in allowed_once else 2
        if n != expected:
            raise ArcDegreeError(f"arc {label} occurs {n} times (expected {expected})")


def _build_link(crossings, m, loops) -> LinkDiagram:
    _check_degrees(crossings)
    nxt = _successors(crossings)
    for a in nxt:
        if a not in set(nxt.values()):
            raise OrientationError(f"arc {a} is never left by a crossing")
    seen: set[int] = set()
    cycles = []
    for start in sorted(nxt):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        a = nxt[start]
        while a != start:
            cyc.append(a)
            seen.add(a)
            a = nxt[a]
        cycles.append(tuple(cyc))
    if len(set(loops)) != len(loops) or any(not 1 <= c <= m for c in loops):
        raise DiagramError("crossingless component indices must be distinct and in 1..m")
    if len(cycles) + len(loops) != m:
        raise DiagramError(f"header declares m={m} but diagram has {len(cycles) + len(loops)} components")
    fresh = max((a for c in crossings for a in c.pd), default=0)
    comps = []
    it = iter(cycles)
    for idx in range(1, m + 1):
        if idx in loops:
            fresh += 1
            comps.append((fresh,))
        else:
            comps.append(next(it))
    return LinkDiagram(crossings, tuple(comps))


def _build_string_link(crossings, m, ends) -> StringLinkDiagram:
    bottoms, tops = ends["bottom"], ends["top"]
    if sorted(bottoms) != list(range(1, m + 1)) or sorted(tops) != list(range(1, m + 1)):
        raise DiagramError("string link needs bottom and top endpoints at positions 1..m")
    used = Counter(a for c in crossings for a in c.pd)
    once = set()
    for i in range(1, m + 1):
        b, t = bottoms[i], tops[i]
        if b == t:
            if used[b]:
                raise ArcDegreeError(f"arc {b} is both endpoints of strand {i} but meets a crossing")
        else:
            once.update((b, t))
    _check_degrees(crossings, frozenset(once))
    nxt = _successors(crossings)
    strands = []
    covered: set[int] = set()
    for i in range(1, m + 1):
        a, path = bottoms[i], [bottoms[i]]
        while a != tops[i]:
            if a not in nxt:
                raise DiagramError(f"strand from bottom {i} does not end at top {i}")
            a = nxt[a]
            if a in covered or a in path:
                raise DiagramError(f"strand {i} revisits arc {a}")
            path.append(a)
        covered.update(path)
        strands.append(tuple(path))
    if set(used) - covered:
        raise DiagramError("string link contains closed components")
    return StringLinkDiagram(crossings, tuple(strands))


# ---------------------------------------------------------------- emission

def emit_pd(d: Diagram) -> str:
    lines = [f"{'link' if isinstance(d, LinkDiagram) else 'stringlink'} m={d.m}"]
    for c in d.crossings:
        a, b, x, y = c.roles
        lines.append(f"X {a} {b} {x} {y} sign={c.sign:+d}")
    if isinstance(d, LinkDiagram):
        in_crossings = {a for c in d.crossings for a in c.pd}
        for i, comp in enumerate(d.components, start=1):
            if len(comp) == 1 and comp[0] not in in_crossings:
                lines.append(f"O {i}")
    else:
        for i, s in enumerate(d.strands, start=1):
            lines.append(f"E bottom {i} {s[0]}")
        for i, s in enumerate(d.strands, start=1):
            lines.append(f"E top {i} {s[-1]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- validation

def validate(d: Diagram) -> list[Violation]:
    """Return every invariant violation; an empty list means the diagram is valid."""
    report: list[Violation] = []
    counts = Counter(a for c in d.crossings for a in c.pd)
    parts = d.components if isinstance(d, LinkDiagram) else d.strands
    if not parts:
        report.append(Violation("component-coverage", "diagram has no components"))
    for i, comp in enumerate(parts, start=1):
        if not comp:
            report.append(Violation("component-coverage", f"component {i} owns no arcs"))
    owned = Counter(a for comp in parts for a in comp)
    for label, n in sorted(owned.items()):
        if n > 1:
            report.append(Violation("component-coverage", f"arc {label} assigned {n} times"))
    for label in sorted(set(counts) - set(owned)):
        report.append(Violation("component-coverage", f"arc {label} belongs to no component"))

    ends: set[int] = set()
    if isinstance(d, StringLinkDiagram):
        for s in d.strands:
            if s and len(s) > 1:
                ends.update((s[0], s[-1]))
    for label, n in sorted(counts.items()):
        expected = 1 if label in ends else 2
        if n != expected:
            report.append(Violation("arc-degree", f"arc {label} occurs {n} times (expected {expected})"))

    heads: Counter = Counter()
    tails: Counter = Counter()
    nxt = {}
    for c in d.crossings:
        heads.update((c.under_in, c.over_in))
        tails.update((c.under_out, c.over_out))
        nxt[c.under_in] = c.under_out
        nxt[c.over_in] = c.over_out
    for label in sorted(set(heads) | set(tails)):
        if heads[label] > 1 or tails[label] > 1:
            report.append(Violation("orientation", f"arc {label} entered {heads[label]}x, left {tails[label]}x"))
    for i, comp in enumerate(parts, start=1):
        closed = isinstance(d, LinkDiagram)
        steps = len(comp) if closed else len(comp) - 1
        for k in range(steps):
            a, b = comp[k], comp[(k + 1) % len(comp)]
            if closed and len(comp) == 1 and a not in counts:
                break
            if nxt.get(a) != b:
                report.append(Violation("orientation", f"component {i}: arc {a} is not followed by {b}"))

    for idx, c in enumerate(d.crossings):
        if c.sign != c.derived_sign:
            report.append(Violation("sign-mismatch", f"crossing {idx}: stored {c.sign:+d}, derived {c.derived_sign:+d}"))
    return report
