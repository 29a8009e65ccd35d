"""Hypothesis strategies for small diagrams."""

from hypothesis import strategies as st

from shakelink.lab import fixtures as fx


@st.composite
def braid_words(draw, strands=(2, 3), max_len=6):
    n = draw(st.sampled_from(strands))
    letters = st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k)))
    return n, draw(st.lists(letters, max_size=max_len))


@st.composite
def links(draw, strands=(2, 3), max_len=6):
    n, word = draw(braid_words(strands, max_len))
    return fx.braid_link(n, word)


@st.composite
def pure_string_links(draw, strands=(2, 3), max_len=6):
    n, word = draw(braid_words(strands, max_len))
    # bubble-sort the strand permutation back to the identity
    cur = fx.braid_permutation(n, word)
    tail = []
    for i in range(n):
        j = cur.index(i)
        while j > i:
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            tail.append(j)
            j -= 1
    return fx.string_link(n, word + tail)
