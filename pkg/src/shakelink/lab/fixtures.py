"""Named fixture diagrams.

Orientation conventions are fixed here once:

* braid generator ``k`` is a positive crossing, so ``hopf`` (closure of
  the pure braid ``s1^2``) has lk = +1 and ``trefoil`` (closure of
  ``s1^3``) is the right-handed trefoil;
* ``borromean`` is the closure of the pure braid ``(s1 s2^-1)^3`` and has
  mu(123) = +1 with every component oriented upward in the braid;
* knots passed as ``K`` are 1-strand string links ("long knots").
"""

from __future__ import annotations

import random
from typing import Callable

from ..construct import (
    BandSpec,
    RouteStep,
    MultidiskSpec,
    _band_sum,
    _cable,
    _infect,
    closure,
)
from ..gauss import Gauss, braid, braid_permutation, compact, from_diagram, relabel, to_diagram
from ..pd import DiagramError, LinkDiagram, StringLinkDiagram


class UnknownFixture(KeyError):
    pass


# ---------------------------------------------------------------- braids and long knots

def braid_link(n: int, word) -> LinkDiagram:
    """Closure of an arbitrary braid; components follow the cycles of its permutation."""
    g = braid(n, word, pure=False)
    at = braid_permutation(n, word)
    top = {s: t for t, s in enumerate(at)}
    seen: set = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        seq = []
        cur = s
        while cur not in seen:
            seen.add(cur)
            seq.extend(g.comps[cur])
            cur = top[cur]
        comps.append(tuple(seq))
    return to_diagram(compact(Gauss(tuple(comps), g.signs, True)))


def long_knot(n: int, word) -> StringLinkDiagram:
    """Cut the closure of a braid whose closure is a knot into a 1-strand string link."""
    d = braid_link(n, word)
    if d.m != 1:
        raise DiagramError(f"braid closure has {d.m} components, expected a knot")
    g = from_diagram(d)
    return to_diagram(Gauss(g.comps, g.signs, False))


def string_link(n: int, word) -> StringLinkDiagram:
    return to_diagram(braid(n, word))


def trivial_sl(m: int = 1) -> StringLinkDiagram:
    return string_link(m, [])


def trefoil_sl() -> StringLinkDiagram:
    return long_knot(2, [1, 1, 1])


def figure_eight_sl() -> StringLinkDiagram:
    return long_knot(3, [1, -2, 1, -2])


def kinked_unknot_sl() -> StringLinkDiagram:
    """The unknot drawn with one nugatory crossing."""
    return long_knot(2, [1])


def clasp_sl() -> StringLinkDiagram:
    return string_link(2, [1, 1])


def borromean_sl() -> StringLinkDiagram:
    return string_link(3, [1, -2] * 3)


def stack(*parts: StringLinkDiagram) -> StringLinkDiagram:
    """Vertical composition (first part at the bottom); for knots this is the connected sum."""
    m = parts[0].m
    if any(p.m != m for p in parts):
        raise DiagramError("stacked string links need equal strand counts")
    seqs: list[list] = [[] for _ in range(m)]
    signs = {}
    for t, p in enumerate(parts):
        g = relabel(from_diagram(p), t)
        for i, comp in enumerate(g.comps):
            seqs[i].extend(comp)
        signs.update(g.signs)
    return to_diagram(compact(Gauss(tuple(tuple(s) for s in seqs), signs, False)))


def torus_sum_sl(k: int) -> StringLinkDiagram:
    """T_k: connected sum of ``k`` right-handed trefoils (T_0 is the unknot)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return trivial_sl(1)
    return stack(*[trefoil_sl()] * k)


def change_crossing(K: StringLinkDiagram, c: int) -> StringLinkDiagram:
    """Swap over and under at crossing ``c`` (0-based, in diagram order)."""
    if not 0 <= c < len(K.crossings):
        raise DiagramError(f"crossing id {c} out of range 0..{len(K.crossings) - 1}")
    g = from_diagram(K)
    comps = tuple(tuple((x, not o) if x == c else (x, o) for x, o in comp) for comp in g.comps)
    signs = dict(g.signs)
    signs[c] = -signs[c]
    return to_diagram(Gauss(comps, signs, g.closed))


# ---------------------------------------------------------------- links

def unknot() -> LinkDiagram:
    return closure(trivial_sl(1))


def unlink(m: int) -> LinkDiagram:
    if m < 1:
        raise ValueError("an unlink needs at least one component")
    return closure(trivial_sl(m))


def hopf() -> LinkDiagram:
    return closure(clasp_sl())


def trefoil() -> LinkDiagram:
    return closure(trefoil_sl())


def borromean() -> LinkDiagram:
    return closure(borromean_sl())


def _knot_gauss(K: StringLinkDiagram) -> Gauss:
    if not isinstance(K, StringLinkDiagram) or K.m != 1:
        raise DiagramError("K must be a 1-strand string link")
    return from_diagram(K)


def with_meridian(K: StringLinkDiagram, pos: int | None = None) -> Gauss:
    """Closed Gauss code of K plus a meridian placed just before passage ``pos`` (default: the end)."""
    g = _knot_gauss(K)
    seq = list(g.comps[0])
    pos = len(seq) if pos is None else pos
    a, b = ("h", 1), ("h", 2)
    seq[pos:pos] = [(b, True), (a, False)]
    mer = ((a, True), (b, False))
    return Gauss((tuple(seq), mer), {**g.signs, a: 1, b: 1}, True)


def h(K: StringLinkDiagram) -> LinkDiagram:
    """K together with a positively linked meridian (second component)."""
    return to_diagram(compact(with_meridian(K)))


def arc_label(g: Gauss, ci: int, k: int) -> int:
    """PD label (as assigned by ``to_diagram``) of the arc entering passage ``k`` of component ``ci``."""
    if not g.closed:
        raise DiagramError("arc_label is defined for closed codes")
    offset = sum(max(len(c), 1) for c in g.comps[:ci])
    n = len(g.comps[ci])
    return offset + (k % n if n else 0) + 1


def find_passage(g: Gauss, x, over: bool) -> tuple[int, int]:
    for ci, comp in enumerate(g.comps):
        for k, p in enumerate(comp):
            if p == (x, over):
                return ci, k
    raise DiagramError(f"passage {(x, over)!r} not found")


def arc_map(g: Gauss) -> dict:
    return {(ci, k): arc_label(g, ci, k) for ci, comp in enumerate(g.comps) for k in range(max(len(comp), 1))}


def arcpos(g: Gauss) -> dict:
    return {v: k for k, v in arc_map(g).items()}


def hopf_bands(core: StringLinkDiagram | None = None):
    """(3,1)-shaking of the Hopf link fused back to two components by two bands.

    The first Hopf component is replaced by copies 0, 1, 2 with orientations
    (+, +, -); copy ``k`` lies ``k`` units to the left.  Band 2 joins copy 0
    to copy 2 passing over copy 1 at one arc of the bundle; band 1 joins the
    adjacent copies 1 and 2 at the other arc and carries ``core``.

    Returns the shaken diagram, the fused Gauss code, the two band specs (in
    the PD labels of the diagram each band was applied to) and band 1's info.
    """
    shaken = to_diagram(_cable(from_diagram(hopf()), 0, (1, 1, -1), 0))
    g = from_diagram(shaken)
    c1_next = g.comps[1][1]
    c2_next = g.comps[2][1]
    band2 = BandSpec(
        ((arc_label(g, 0, 0), "L"), (arc_label(g, 2, 0), "L")),
        route=(RouteStep(arc_label(g, 1, 0), True, -1),),
    )
    g, _ = _band_sum(g, arcpos(g), band2)
    ci, k = find_passage(g, *c1_next)
    cj, kj = find_passage(g, *c2_next)
    band1 = BandSpec(((arc_label(g, ci, k), "L"), (arc_label(g, cj, kj), "L")), core=core)
    g, info = _band_sum(g, arcpos(g), band1)
    return shaken, g, (band2, band1), info


def L(K: StringLinkDiagram) -> LinkDiagram:
    """The link L(K): both components unknotted, L(U) is the Hopf link.

    Built independently of the band-core mechanism: the bands of
    :func:`hopf_bands` are attached untied, then the band is infected by K
    along a disk that both band edges cross.
    """
    _knot_gauss(K)
    _, g, _, info = hopf_bands()
    ci = info["fused"]
    e1 = arc_label(g, ci, info["edge1_start"])
    e2 = arc_label(g, ci, info["edge2_start"])
    # edge 2 lies to the right of edge 1, so it is listed first (copy 0)
    disk = MultidiskSpec((((e2, -1), (e1, 1)),))
    return to_diagram(compact(_infect(g, arcpos(g), disk, from_diagram(K))))


# ---------------------------------------------------------------- four-component examples

def _borromean_with_meridian() -> Gauss:
    """Borromean rings plus a fourth component that is a meridian of the first."""
    bor = from_diagram(borromean())
    seq = list(bor.comps[0])
    a, b = ("h", 1), ("h", 2)
    seq[0:0] = [(b, True), (a, False)]
    mer = ((a, True), (b, False))
    return Gauss((tuple(seq),) + bor.comps[1:] + (mer,), {**bor.signs, a: 1, b: 1}, True)


def fig11_L() -> LinkDiagram:
    return to_diagram(compact(_borromean_with_meridian()))


# attachment arcs (passage indices on the second component) of the two bands
FIG11_ATTACH = (2, 0)


def fig11_bands():
    """Shake the fourth component into copies (+, +, -) and band copies 0 and 2 into the second component.

    Returns the shaken Gauss code, the fused code and both band specs.
    """
    shaken = _cable(compact(_borromean_with_meridian()), 3, (1, 1, -1), 0)
    ka, kb = FIG11_ATTACH
    b1 = BandSpec(((arc_label(shaken, 3, 0), "L"), (arc_label(shaken, 1, ka), "L")))
    g1, _ = _band_sum(shaken, arcpos(shaken), b1)
    ci, k = find_passage(g1, *shaken.comps[1][kb])
    # copy 2 sits at index 4 once copy 0 has been absorbed
    b2 = BandSpec(((arc_label(g1, 4, 0), "L"), (arc_label(g1, ci, k), "L")))
    g2, _ = _band_sum(g1, arcpos(g1), b2)
    return shaken, g2, (b1, b2)


def fig11_Lprime() -> LinkDiagram:
    return to_diagram(compact(fig11_bands()[1]))


def levine_A() -> LinkDiagram:
    """Stand-in for the four-component link of the link-homotopy example.

    Closure of the pure braid [[s1^2, s2^2], s3^2]: all linking numbers and
    all length-3 invariants vanish.
    """
    a, b, c = [1, 1], [2, 2], [3, 3]
    inv = lambda w: [-x for x in reversed(w)]
    comm = lambda u, v: u + v + inv(u) + inv(v)
    return closure(string_link(4, comm(comm(a, b), c)))


def levine_H() -> LinkDiagram:
    """``levine_A`` with a kink on component 1 and a bigon between components 2 and 3."""
    g = from_diagram(levine_A())
    comps = [list(c) for c in g.comps]
    signs = dict(g.signs)
    k = ("kink", 0)
    comps[0][1:1] = [(k, True), (k, False)]
    signs[k] = -1
    x, y = ("bigon", 0), ("bigon", 1)
    comps[1][0:0] = [(x, True), (y, True)]
    comps[2][0:0] = [(y, False), (x, False)]
    signs[x], signs[y] = 1, -1
    return to_diagram(compact(Gauss(tuple(map(tuple, comps)), signs, True)))


# ---------------------------------------------------------------- random string links

def random_string_link(rng: random.Random, strands: int | None = None, max_crossings: int = 6) -> StringLinkDiagram:
    """A pure braid of at most ``max_crossings`` letters on 2 or 3 strands (rejection sampled)."""
    n = strands or rng.choice((2, 3))
    while True:
        length = rng.randrange(0, max_crossings + 1)
        word = [rng.choice((1, -1)) * rng.randrange(1, n) for _ in range(length)]
        if braid_permutation(n, word) == list(range(n)):
            return string_link(n, word)


# ---------------------------------------------------------------- registry

KNOTS: dict[str, Callable[[], StringLinkDiagram]] = {
    "unknot": lambda: trivial_sl(1),
    "trefoil": trefoil_sl,
    "figure_eight": figure_eight_sl,
    "T2": lambda: torus_sum_sl(2),
    "T3": lambda: torus_sum_sl(3),
}

STRING_LINKS: dict[str, Callable[[], StringLinkDiagram]] = {
    "trivial1": lambda: trivial_sl(1),
    "trivial2": lambda: trivial_sl(2),
    "trivial3": lambda: trivial_sl(3),
    "kinked_unknot": kinked_unknot_sl,
    "clasp": clasp_sl,
    "borromean_sl": borromean_sl,
    **{f"knot:{k}": v for k, v in KNOTS.items()},
}

FIXTURES = (
    "unknot", "unlink", "hopf", "trefoil", "borromean", "borromean_sl",
    "h", "L", "fig11_L", "fig11_Lprime", "levine_A", "levine_H",
)


def knot(name: str) -> StringLinkDiagram:
    try:
        return KNOTS[name]()
    except KeyError:
        raise UnknownFixture(f"unknown knot {name!r}; choose from {sorted(KNOTS)}") from None


def fixture(name: str, K: StringLinkDiagram | str | None = None, m: int | None = None):
    """Look up a fixture by name; ``h`` and ``L`` take a knot ``K``, ``unlink`` takes ``m``."""
    if isinstance(K, str):
        K = knot(K)
    simple = {
        "unknot": unknot,
        "hopf": hopf,
        "trefoil": trefoil,
        "borromean": borromean,
        "borromean_sl": borromean_sl,
        "fig11_L": fig11_L,
        "fig11_Lprime": fig11_Lprime,
        "levine_A": levine_A,
        "levine_H": levine_H,
    }
    if name in simple:
        return simple[name]()
    if name == "unlink":
        return unlink(2 if m is None else m)
    if name in ("h", "L"):
        if K is None:
            raise DiagramError(f"fixture {name} needs a knot K")
        return h(K) if name == "h" else L(K)
    raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")


def all_link_fixtures() -> dict[str, LinkDiagram]:
    """Every closed fixture, with h and L instantiated on each named knot."""
    out = {
        "unknot": unknot(),
        "unlink2": unlink(2),
        "unlink3": unlink(3),
        "hopf": hopf(),
        "trefoil": trefoil(),
        "borromean": borromean(),
        "fig11_L": fig11_L(),
        "fig11_Lprime": fig11_Lprime(),
        "levine_A": levine_A(),
        "levine_H": levine_H(),
    }
    for k in KNOTS:
        out[f"h({k})"] = h(knot(k))
        out[f"L({k})"] = L(knot(k))
    return out
