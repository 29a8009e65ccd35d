import pytest
from hypothesis import given, strategies as st

from shakelink.construct import (
    BandSpec,
    ConstructionError,
    MultidiskSpec,
    OrientationPattern,
    band_sum,
    cable_component,
    cable_string_link,
    closure,
    infect,
    mirror,
    r_shaking,
    reverse,
    split_union,
    sublink,
    transform,
)
from shakelink.lab import fixtures as fx
from shakelink.milnor import linking_matrix, linking_number_oracle, mu
from shakelink.pd import validate

from strategies import links, pure_string_links

P = OrientationPattern


def lk(d, i=1, j=2):
    return linking_number_oracle(d, i, j)


# ---------------------------------------------------------------- closure / union / transforms

def test_closure_examples():
    assert closure(fx.trivial_sl(1)).m == 1 and closure(fx.trivial_sl(1)).crossings == ()
    hopf = closure(fx.clasp_sl())
    assert hopf.m == 2 and lk(hopf) == 1 and [c.sign for c in hopf.crossings] == [1, 1]
    bor = closure(fx.borromean_sl())
    assert len(bor.crossings) == 6
    assert set(linking_matrix(bor).values()) == {0}


def test_split_union():
    assert split_union(fx.unknot(), fx.unknot()).m == 2
    d = split_union(fx.hopf(), fx.unknot())
    assert linking_matrix(d) == {(1, 2): 1, (1, 3): 0, (2, 3): 0}
    assert len(d.crossings) == len(fx.hopf().crossings)


def test_mirror_and_reverse():
    assert lk(mirror(fx.hopf())) == -1
    assert lk(reverse(fx.hopf(), 2)) == -1
    assert reverse(reverse(fx.hopf(), 1), 1) == fx.hopf()
    assert transform(fx.hopf(), "mirror") == mirror(fx.hopf())
    with pytest.raises(ConstructionError):
        reverse(fx.hopf(), 3)
    with pytest.raises(ConstructionError):
        transform(fx.hopf(), "flip")


# ---------------------------------------------------------------- cabling and shaking

def test_single_positive_copy_with_writhe_framing_is_identity():
    d = fx.trefoil()
    w = sum(c.sign for c in d.crossings)
    assert cable_component(d, 1, P((1,)), w) == d


def test_three_copies_of_unknot():
    d = cable_component(fx.unknot(), 1, P((1, 1, -1)), 0)
    assert d.m == 3 and set(linking_matrix(d).values()) == {0}
    twisted = cable_component(fx.unknot(), 1, P((1, 1, 1)), 1)
    assert set(linking_matrix(twisted).values()) == {1}


def test_shaking_examples():
    assert r_shaking(fx.hopf(), (1, 1), 0).m == 6
    three = r_shaking(fx.unknot(), (1,), 0)
    assert three.m == 3 and set(linking_matrix(three).values()) == {0}
    d = fx.hopf()
    assert r_shaking(d, (0, 0), 0) == d


def test_cabling_errors():
    with pytest.raises(ConstructionError):
        cable_component(fx.unknot(), 1, P(()), 0)
    with pytest.raises(ConstructionError):
        P((1, 2))
    with pytest.raises(ConstructionError):
        r_shaking(fx.hopf(), (1,), 0)
    with pytest.raises(ConstructionError):
        cable_string_link(fx.clasp_sl(), [P((1,))])


def test_cable_string_link_examples():
    J = fx.clasp_sl()
    assert cable_string_link(J, [P((1,)), P((1,))]) == J
    triv = cable_string_link(fx.trivial_sl(2), [P((1, -1)), P((1,))])
    assert triv.m == 3 and triv.crossings == ()
    c = closure(cable_string_link(J, [P((1,)), P((1, -1))]))
    assert lk(c, 1, 2) + lk(c, 1, 3) == 0


@given(links(), st.lists(st.sampled_from((1, -1)), min_size=1, max_size=3), st.data())
def test_cabling_linking_law(d, orientations, data):
    i = data.draw(st.integers(1, d.m))
    out = cable_component(d, i, P(tuple(orientations)), 0)
    assert validate(out) == []
    k = len(orientations)
    others = [j for j in range(1, d.m + 1) if j != i]
    # copies of component i sit at i..i+k-1, later components shift by k-1
    new_index = {j: (j if j < i else j + k - 1) for j in others}
    for j in others:
        lam = lk(d, i, j)
        for t, o in enumerate(orientations):
            assert lk(out, i + t, new_index[j]) == o * lam


@given(links(), st.data())
def test_shaking_component_count(d, data):
    n = data.draw(st.lists(st.integers(0, 1), min_size=d.m, max_size=d.m))
    out = r_shaking(d, n, data.draw(st.integers(-1, 1)))
    assert out.m == sum(2 * k + 1 for k in n)
    assert validate(out) == []


# ---------------------------------------------------------------- band sums

def test_band_sum_of_two_unknots_is_unknot():
    d = split_union(fx.unknot(), fx.unknot())
    out = band_sum(d, BandSpec(((1, "L"), (2, "L"))))
    assert out.m == 1 and validate(out) == []


def test_band_sum_errors():
    with pytest.raises(ConstructionError, match="same component"):
        band_sum(fx.hopf(), BandSpec(((1, "L"), (2, "L"))))
    d = split_union(fx.unknot(), fx.unknot())
    with pytest.raises(ConstructionError, match="incoherent"):
        band_sum(d, BandSpec(((1, "L"), (2, "R"))))
    with pytest.raises(ConstructionError, match="incoherent"):
        band_sum(d, BandSpec(((1, "L"), (2, "L")), half_twists=1))
    with pytest.raises(ConstructionError):
        band_sum(d, BandSpec(((1, "L"), (9, "L"))))


@given(links(strands=(3,)), st.data())
def test_band_sum_drops_one_component(d, data):
    if d.m < 2:
        d = split_union(d, fx.hopf())
    comp = d.arc_component()
    i, j = data.draw(st.permutations(range(1, d.m + 1)))[:2]
    a = data.draw(st.sampled_from(sorted(x for x, c in comp.items() if c == i)))
    b = data.draw(st.sampled_from(sorted(x for x, c in comp.items() if c == j)))
    twists = data.draw(st.integers(-2, 2))
    side = data.draw(st.sampled_from("LR"))
    other = side if twists % 2 == 0 else {"L": "R", "R": "L"}[side]
    out = band_sum(d, BandSpec(((a, side), (b, other)), half_twists=twists))
    assert out.m == d.m - 1
    assert validate(out) == []


# ---------------------------------------------------------------- infection

SINGLE2 = MultidiskSpec((((1, 1),), ((2, 1),)))
SINGLE3 = MultidiskSpec((((1, 1),), ((2, 1),), ((3, 1),)))


def test_infection_examples():
    assert lk(infect(fx.unlink(2), SINGLE2, fx.clasp_sl())) == 1
    assert mu(infect(fx.unlink(3), SINGLE3, fx.borromean_sl()), "123").mu_bar == 1


def test_infection_errors_and_warning():
    with pytest.raises(ConstructionError):
        infect(fx.unlink(2), SINGLE3, fx.borromean_sl())
    with pytest.raises(ConstructionError):
        infect(fx.unlink(2), MultidiskSpec((((1, 1),), ((7, 1),))), fx.clasp_sl())
    with pytest.raises(ConstructionError, match="0-framed"):
        infect(fx.unlink(2), MultidiskSpec(SINGLE2.subdisks, framing=1), fx.clasp_sl())
    out = infect(fx.unlink(2), MultidiskSpec((((1, 1),), ((1, 1),))), fx.clasp_sl())
    assert out.warnings


def test_respects():
    d = fx.unlink(2)
    assert SINGLE2.respects(d) and SINGLE2.strongly_respects(d)
    finger = MultidiskSpec((((1, 1),), ((2, 1), (1, 1), (1, -1))))
    assert finger.respects(d) and not finger.strongly_respects(d)
    assert finger.geometric_counts(d) == [1, 3]


@given(pure_string_links(strands=(2,)))
def test_trivial_infection_preserves_invariants(J):
    d = closure(J)
    if d.m != 2:
        return
    comp = d.arc_component()
    arcs = [min(a for a, c in comp.items() if c == i) for i in (1, 2)]
    e = MultidiskSpec((((arcs[0], 1),), ((arcs[1], 1),)))
    out = infect(d, e, fx.trivial_sl(2))
    assert linking_matrix(out) == linking_matrix(d)
    for I in ("12", "112", "122"):
        assert mu(out, I).mu_bar == mu(d, I).mu_bar


def test_sublink_of_negative_control_is_borromean():
    s = sublink(fx.fig11_L(), [1, 2, 3])
    assert s.m == 3
    assert mu(s, "123").mu_bar == mu(fx.borromean(), "123").mu_bar == 1
