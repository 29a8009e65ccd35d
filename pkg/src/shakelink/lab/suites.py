"""Seeded verification suites behind ``shakelink verify``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

from ..construct import (
    BandSpec,
    MultidiskSpec,
    OrientationPattern,
    band_sum,
    cable_component,
    closure,
    infect,
    mirror,
    r_shaking,
    reverse,
    split_union,
)
from ..milnor import (
    GroupWord,
    TruncatedSeries,
    chen_milnor_reduce,
    linking_matrix,
    linking_number_oracle,
    longitude_word,
    magnus_expand,
    mu,
    wirtinger,
)
from ..milnor.invariants import all_indices
from ..milnor.wirtinger import longitude_series
from ..pd import LinkDiagram
from . import fixtures as fx
from . import recipes
from .checks import cabled_sum_check, random_multidisk, verify_additivity

SUITES = ("magnus", "oracle", "additivity", "pairs")


@dataclass(frozen=True)
class Outcome:
    id: str
    ok: bool
    values: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    outcomes: tuple[Outcome, ...]

    @property
    def passed(self) -> int:
        return sum(o.ok for o in self.outcomes)

    @property
    def failed(self) -> int:
        return len(self.outcomes) - self.passed

    def lines(self) -> list[str]:
        out = [f"check suite={self.suite} id={o.id} verdict={'pass' if o.ok else 'fail'}" for o in self.outcomes]
        out.append(f"summary suite={self.suite} passed={self.passed} failed={self.failed}")
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "failed": self.failed,
            "checks": [{"id": o.id, "verdict": "pass" if o.ok else "fail", **o.values} for o in self.outcomes],
        }


def _result(suite: str, outcomes) -> SuiteResult:
    return SuiteResult(suite, tuple(sorted(outcomes, key=lambda o: o.id)))


# ---------------------------------------------------------------- magnus

def random_word(rng: random.Random, m: int, max_len: int = 8) -> GroupWord:
    n = rng.randrange(0, max_len + 1)
    return GroupWord(tuple((rng.randrange(1, m + 1), rng.choice((1, -1))) for _ in range(n)))


def _magnus_word_checks(rng: random.Random, count: int):
    for t in range(count):
        m, q = rng.randrange(1, 5), rng.randrange(1, 6)
        u, v = random_word(rng, m), random_word(rng, m)
        mu_, mv = magnus_expand(u, q), magnus_expand(v, q)
        one = TruncatedSeries.one(q)
        hom = magnus_expand(u * v, q) == mu_ * mv
        inv = mu_ * magnus_expand(u.inverse(), q) == one and magnus_expand(u * u.inverse(), q) == one
        red = magnus_expand(u.reduced(), q) == mu_
        yield Outcome(f"word-{t:03d}", hom and inv and red, {"m": m, "q": q, "len_u": len(u), "len_v": len(v)})


# small enough for the uncollapsed word route
_WORD_ROUTE = ("hopf", "borromean", "trefoil", "unlink3", "h(unknot)", "h(trefoil)", "L(unknot)")


def _word_route_checks(fixtures: dict[str, LinkDiagram], q: int = 3):
    for name in _WORD_ROUTE:
        d = fixtures[name]
        p = wirtinger(d)
        red = chen_milnor_reduce(p, q)
        series = longitude_series(d, q)
        ok = all(magnus_expand(longitude_word(d, p, red, i), q) == series[i - 1] for i in range(1, d.m + 1))
        yield Outcome(f"route-{name}", ok)


def _truncation_checks(fixtures: dict[str, LinkDiagram]):
    for name, d in fixtures.items():
        ok = True
        for n in (2, 3):
            for I in all_indices(d.m, n):
                if mu(d, I).mu != mu(d, I, n + 2).mu:
                    ok = False
        yield Outcome(f"truncation-{name}", ok)


def magnus_suite(seed: int = 0, words: int = 200) -> SuiteResult:
    rng = random.Random(seed)
    fixtures = fx.all_link_fixtures()
    outcomes = [*_magnus_word_checks(rng, words), *_word_route_checks(fixtures), *_truncation_checks(fixtures)]
    return _result("magnus", outcomes)


# ---------------------------------------------------------------- linking-number oracle

def _random_band(rng: random.Random, d: LinkDiagram) -> BandSpec:
    comp = d.arc_component()
    i, j = rng.sample(range(1, d.m + 1), 2)
    a = rng.choice([x for x, c in sorted(comp.items()) if c == i])
    b = rng.choice([x for x, c in sorted(comp.items()) if c == j])
    twists = rng.choice((0, 1, -1, 2))
    s = rng.choice("LR")
    t = s if twists % 2 == 0 else ("L" if s == "R" else "R")
    return BandSpec(((a, s), (b, t)), half_twists=twists)


def random_product(rng: random.Random) -> tuple[str, LinkDiagram]:
    """One seeded random band/cable/shaking/infection product, with a short recipe tag."""
    base = closure(fx.random_string_link(rng))
    op = rng.choice(("band", "cable", "shake", "union", "mirror", "reverse", "infect"))
    if op == "band":
        d = base if base.m > 2 else split_union(base, fx.hopf())
        return op, band_sum(d, _random_band(rng, d))
    if op == "cable":
        pattern = OrientationPattern(tuple(rng.choice((1, -1)) for _ in range(rng.randrange(1, 4))))
        return op, cable_component(base, rng.randrange(1, base.m + 1), pattern, rng.randrange(-1, 2))
    if op == "shake":
        n = [0] * base.m
        n[rng.randrange(base.m)] = 1
        return op, r_shaking(base, n, rng.randrange(-1, 2))
    if op == "union":
        return op, split_union(base, closure(fx.random_string_link(rng, 2)))
    if op == "mirror":
        return op, mirror(base)
    if op == "reverse":
        return op, reverse(base, rng.randrange(1, base.m + 1))
    m = rng.choice((2, 3))
    return op, infect(fx.unlink(m), random_multidisk(rng, m), fx.random_string_link(rng, m))


def oracle_suite(seed: int = 0, randoms: int = 40) -> SuiteResult:
    rng = random.Random(seed)
    diagrams = dict(fx.all_link_fixtures())
    for t in range(randoms):
        op, d = random_product(rng)
        diagrams[f"random-{t:03d}-{op}"] = d
    outcomes = []
    for name, d in diagrams.items():
        pairs = [(i, j) for i, j in itertools.permutations(range(1, d.m + 1), 2)]
        bad = [(i, j) for i, j in pairs if mu(d, (i, j)).mu != linking_number_oracle(d, i, j)]
        outcomes.append(Outcome(name, not bad, {"components": d.m, "pairs": len(pairs), "mismatches": len(bad)}))
    return _result("oracle", outcomes)


# ---------------------------------------------------------------- additivity

def _fixed_instances():
    snake = MultidiskSpec((((1, 1), (1, -1), (1, 1)), ((2, 1),), ((3, 1),)))
    single3 = MultidiskSpec((((1, 1),), ((2, 1),), ((3, 1),)))
    single2 = MultidiskSpec((((1, 1),), ((2, 1),)))
    finger = MultidiskSpec((((1, 1),), ((2, 1), (1, 1), (1, -1))))
    yield "fixed-borromean", fx.unlink(3), fx.borromean_sl(), single3, (1, 2, 3)
    yield "fixed-borromean-snake", fx.unlink(3), fx.borromean_sl(), snake, (1, 2, 3)
    yield "fixed-clasp", fx.unlink(2), fx.clasp_sl(), single2, (1, 2)
    yield "fixed-clasp-finger", fx.unlink(2), fx.clasp_sl(), finger, (2, 1)
    yield "fixed-trivial", fx.unlink(2), fx.trivial_sl(2), finger, (1, 2)


def _random_instance(rng: random.Random):
    m = rng.choice((2, 3))
    pick = rng.random()
    if m == 2 and pick < 0.3:
        J = fx.clasp_sl()
    elif m == 3 and pick < 0.3:
        J = fx.borromean_sl()
    else:
        J = fx.random_string_link(rng, m)
    e = random_multidisk(rng, m)
    lk_zero = all(v == 0 for v in linking_matrix(closure(J)).values())
    if m == 3 and lk_zero:
        I = tuple(rng.sample(range(1, 4), 3))
    else:
        I = tuple(rng.sample(range(1, m + 1), 2))
    return fx.unlink(m), J, e, I


def additivity_instances(seed: int = 0, count: int = 24):
    rng = random.Random(seed)
    out = list(_fixed_instances())
    for t in range(count):
        out.append((f"random-{t:03d}", *_random_instance(rng)))
    return out


def additivity_suite(seed: int = 0, count: int = 24) -> SuiteResult:
    outcomes = []
    for name, L, J, e, I in additivity_instances(seed, count):
        a = verify_additivity(L, J, e, I)
        c = cabled_sum_check(L, J, e, I)
        # both checks share hypotheses, so they are applicable together or not at all
        ok = a.verdict == c.verdict and a.verdict != "fail"
        values = {"I": "".join(map(str, I)), "additivity_verdict": a.verdict, "cabled_sum_verdict": c.verdict, **a.values, **c.values}
        outcomes.append(Outcome(name, ok, values))
    return _result("additivity", outcomes)


# ---------------------------------------------------------------- concordance pairs

def lemma41_instances(seed: int = 0):
    rng = random.Random(seed)
    single2 = MultidiskSpec((((1, 1),), ((2, 1),)))
    single3 = MultidiskSpec((((1, 1),), ((2, 1),), ((3, 1),)))
    snake3 = MultidiskSpec((((1, 1), (1, -1), (1, 1)), ((2, 1),), ((3, 1),)))
    yield "clasp", fx.unlink(2), fx.clasp_sl(), single2
    yield "borromean", fx.unlink(3), fx.borromean_sl(), single3
    yield "borromean-snake", fx.unlink(3), fx.borromean_sl(), snake3
    yield "trivial", fx.unlink(2), fx.trivial_sl(2), MultidiskSpec((((1, 1), (1, -1), (1, 1)), ((2, 1),)))
    for t in range(2):
        m = rng.choice((2, 3))
        own = MultidiskSpec(tuple(((i, 1), (i, -1), (i, 1)) if rng.random() < 0.5 else ((i, 1),) for i in range(1, m + 1)))
        yield f"random-{t}", fx.unlink(m), fx.random_string_link(rng, m), own


def pair_reports(seed: int = 0) -> list[tuple[str, recipes.ConcordancePairReport]]:
    out = []
    for name in fx.KNOTS:
        K = fx.knot(name)
        # the crossingless unknot has nothing to change; use its one-kink diagram
        C = K if K.crossings else fx.kinked_unknot_sl()
        for c in range(len(C.crossings)):
            out.append((f"crossing_change-{name}-c{c}", recipes.crossing_change_recipe(C, c)))
        out.append((f"crossing_change-{name}-c0-t1", recipes.crossing_change_recipe(C, 0, 1)))
        out.append((f"strong_shake_hopf-{name}", recipes.strong_shake_hopf_recipe(K)))
    for name, S, J, e in lemma41_instances(seed):
        out.append((f"lemma41-{name}", recipes.lemma41_recipe(S, J, e)))
    out.append(("fig11", recipes.fig11_recipe()))
    return out


def pairs_suite(seed: int = 0) -> SuiteResult:
    outcomes = []
    for name, rep in pair_reports(seed):
        values = {"profile": rep.profile_text(), "lk_agree": rep.lk_agree, "first_agree": rep.first_agree}
        outcomes.append(Outcome(name, rep.passed, values))
    return _result("pairs", outcomes)


RUNNERS: dict[str, Callable[[int], SuiteResult]] = {
    "magnus": magnus_suite,
    "oracle": oracle_suite,
    "additivity": additivity_suite,
    "pairs": pairs_suite,
}


def run(suite: str, seed: int = 0) -> list[SuiteResult]:
    if suite == "all":
        return [RUNNERS[s](seed) for s in SUITES]
    if suite not in RUNNERS:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join((*SUITES, 'all'))}")
    return [RUNNERS[suite](seed)]
