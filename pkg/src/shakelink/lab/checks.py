"""Additivity of mu-bar under string-link infection, checked two independent ways."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from ..construct import MultidiskSpec, OrientationPattern, cable_string_link, closure, infect
from ..milnor import MultiIndex, mu
from ..milnor.invariants import all_indices
from ..pd import LinkDiagram, StringLinkDiagram


@dataclass(frozen=True)
class CheckResult:
    name: str
    applicable: bool
    passed: bool
    values: dict = field(default_factory=dict)
    message: str = ""

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "inapplicable"
        return "pass" if self.passed else "fail"


def _shorter_vanish(d: LinkDiagram, length: int) -> bool:
    return all(mu(d, J).mu_bar == 0 for n in range(2, length) for J in all_indices(d.m, n))


def _hypotheses(L: LinkDiagram, J: StringLinkDiagram, e: MultidiskSpec, I: MultiIndex) -> str:
    if J.m != L.m:
        return f"string link has {J.m} strands, link has {L.m} components"
    if not e.respects(L):
        return "multidisk does not respect the link"
    if not _shorter_vanish(L, len(I)):
        return "the link has a nonzero invariant shorter than I"
    if not _shorter_vanish(closure(J), len(I)):
        return "the closure of J has a nonzero invariant shorter than I"
    return ""


def verify_additivity(L: LinkDiagram, J: StringLinkDiagram, e: MultidiskSpec, I) -> CheckResult:
    """mu-bar of the infected link at I against mu-bar(L) + mu-bar(closure J)."""
    I = MultiIndex.parse(I)
    why = _hypotheses(L, J, e, I)
    if why:
        return CheckResult("additivity", False, False, message=why)
    infected = infect(L, e, J)
    lhs = mu(infected, I)
    base, hat = mu(L, I), mu(closure(J), I)
    shorter = _shorter_vanish(infected, len(I))
    ok = shorter and lhs.mu_bar == base.mu_bar + hat.mu_bar
    values = {"infected": lhs.mu_bar, "link": base.mu_bar, "closure": hat.mu_bar, "shorter_vanish": shorter}
    return CheckResult("additivity", True, ok, values)


def copy_labels(L: LinkDiagram, e: MultidiskSpec) -> tuple[list[int], list[int], list[int]]:
    """Per copy of the cabled string link (in passage order): h = owning link component,
    g = source strand, and the copy orientation."""
    comp = L.arc_component()
    h, g, o = [], [], []
    for j, disk in enumerate(e.subdisks, start=1):
        for arc, sign in disk:
            h.append(comp[arc])
            g.append(j)
            o.append(sign)
    return h, g, o


def product_identity(L: LinkDiagram, e: MultidiskSpec, I) -> tuple[int, int]:
    """(prod over i in I of (a_ii - b_ii)^{k_i}, the same number by enumerating copy multi-indices)."""
    I = MultiIndex.parse(I)
    a, b = e.passage_matrix(L)
    closed_form = math.prod((a[i - 1][i - 1] - b[i - 1][i - 1]) ** I.count(i) for i in set(I))
    h, g, o = copy_labels(L, e)
    choices = [[t for t in range(len(h)) if h[t] == i and g[t] == i] for i in I]
    enumerated = sum(math.prod(o[t] for t in pick) for pick in itertools.product(*choices))
    return closed_form, enumerated


def cabled_sum_check(L: LinkDiagram, J: StringLinkDiagram, e: MultidiskSpec, I) -> CheckResult:
    """Sum of mu-bar of the cabled closure over copy indices lying over I, against the infection difference."""
    I = MultiIndex.parse(I)
    why = _hypotheses(L, J, e, I)
    if why:
        return CheckResult("cabled-sum", False, False, message=why)
    patterns = [OrientationPattern(tuple(s for _, s in disk)) for disk in e.subdisks]
    if any(p.copies == 0 for p in patterns):
        return CheckResult("cabled-sum", False, False, message="empty subdisk")
    Jc = closure(cable_string_link(J, patterns))
    h, _, _ = copy_labels(L, e)
    fibres = [[t + 1 for t in range(len(h)) if h[t] == i] for i in I]
    total = 0
    for pick in itertools.product(*fibres):
        total += mu(Jc, pick).mu_bar
    diff = mu(infect(L, e, J), I).mu_bar - mu(L, I).mu_bar
    closed_form, enumerated = product_identity(L, e, I)
    ok = total == diff and closed_form == enumerated == 1
    values = {"cabled_sum": total, "difference": diff, "product": closed_form, "product_enumerated": enumerated}
    return CheckResult("cabled-sum", True, ok, values)


# ---------------------------------------------------------------- random instances

def random_multidisk(rng: random.Random, m: int, max_passages: int = 3) -> MultidiskSpec:
    """A random respecting multidisk on the m-component crossingless unlink (component i is arc i).

    With at most three passages, a respecting subdisk D_j is crossed once by
    component j, or by component j three times (two positive), or by j once
    and another component i once each way.  Passages are shuffled.
    """
    disks = []
    for j in range(1, m + 1):
        shape = "own" if max_passages < 3 else rng.choice(("own", "snake", "finger"))
        if shape == "own":
            passages = [(j, 1)]
        elif shape == "snake":
            passages = [(j, 1), (j, 1), (j, -1)]
        else:
            i = rng.choice([k for k in range(1, m + 1) if k != j])
            passages = [(j, 1), (i, 1), (i, -1)]
        rng.shuffle(passages)
        disks.append(tuple(passages))
    return MultidiskSpec(tuple(disks))
