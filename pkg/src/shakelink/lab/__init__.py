"""Fixtures, shake-concordance recipes and verification suites."""

from .checks import CheckResult, cabled_sum_check, verify_additivity
from .fixtures import fixture, h, knot
from .recipes import (
    ConcordancePairReport,
    crossing_change_recipe,
    fig11_recipe,
    lemma41_recipe,
    strong_shake_hopf_recipe,
)

__all__ = [
    "CheckResult",
    "ConcordancePairReport",
    "cabled_sum_check",
    "crossing_change_recipe",
    "fig11_recipe",
    "fixture",
    "h",
    "knot",
    "lemma41_recipe",
    "strong_shake_hopf_recipe",
    "verify_additivity",
]
