import random

import pytest
from hypothesis import given, strategies as st

from shakelink.construct import MultidiskSpec
from shakelink.lab import fixtures as fx
from shakelink.lab.checks import cabled_sum_check, product_identity, random_multidisk, verify_additivity

SINGLE2 = MultidiskSpec((((1, 1),), ((2, 1),)))
SINGLE3 = MultidiskSpec((((1, 1),), ((2, 1),), ((3, 1),)))
SNAKE3 = MultidiskSpec((((1, 1), (1, -1), (1, 1)), ((2, 1),), ((3, 1),)))


def test_additivity_examples():
    r = verify_additivity(fx.unlink(3), fx.borromean_sl(), SINGLE3, "123")
    assert r.verdict == "pass" and (r.values["link"], r.values["closure"], r.values["infected"]) == (0, 1, 1)
    r = verify_additivity(fx.unlink(2), fx.clasp_sl(), SINGLE2, "12")
    assert r.verdict == "pass" and r.values["infected"] == 1
    r = verify_additivity(fx.unlink(2), fx.trivial_sl(2), SINGLE2, "12")
    assert r.verdict == "pass" and r.values["infected"] == 0


def test_inapplicable_instances():
    # clasp has lk 1, so length-3 hypotheses fail
    r = verify_additivity(fx.unlink(2), fx.clasp_sl(), SINGLE2, "112")
    assert r.verdict == "inapplicable"
    r = cabled_sum_check(fx.unlink(2), fx.clasp_sl(), MultidiskSpec((((1, 1),), ((1, 1),))), "12")
    assert r.verdict == "inapplicable"


def test_cabled_sum_examples():
    r = cabled_sum_check(fx.unlink(3), fx.borromean_sl(), SNAKE3, "123")
    assert r.verdict == "pass" and r.values["cabled_sum"] == 1
    assert product_identity(fx.unlink(3), SNAKE3, "123") == (1, 1)
    r = cabled_sum_check(fx.unlink(2), fx.trivial_sl(2), SINGLE2, "12")
    assert r.verdict == "pass" and r.values["cabled_sum"] == 0


@given(st.integers(0, 10_000))
def test_checks_agree_on_random_instances(seed):
    rng = random.Random(seed)
    m = rng.choice((2, 3))
    J = fx.random_string_link(rng, m)
    e = random_multidisk(rng, m)
    assert e.respects(fx.unlink(m))
    I = tuple(rng.sample(range(1, m + 1), m if m == 3 else 2))
    a = verify_additivity(fx.unlink(m), J, e, I)
    c = cabled_sum_check(fx.unlink(m), J, e, I)
    assert a.verdict == c.verdict
    assert a.verdict != "fail"


@pytest.mark.parametrize("m", [2, 3])
def test_random_multidisk_is_respecting(m):
    rng = random.Random(m)
    for _ in range(20):
        e = random_multidisk(rng, m)
        assert e.respects(fx.unlink(m))
        assert all(len(d) <= 3 for d in e.subdisks)
