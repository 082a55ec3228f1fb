import random

import pytest
from hypothesis import strategies as st

from ksbraid.braid_functors import BraidWord


@st.composite
def braid_words(draw, m_values=(1, 2, 3, 4), max_len=6):
    m = draw(st.sampled_from(m_values))
    n = draw(st.integers(0, max_len))
    letters = draw(st.lists(st.integers(1, m).flatmap(lambda k: st.sampled_from((k, -k))), min_size=n, max_size=n))
    return BraidWord(m, tuple(letters))


def seeded_words(seed, m, count, max_len):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(0, max_len)
        out.append(BraidWord(m, tuple(rng.choice((1, -1)) * rng.randint(1, m) for _ in range(n))))
    return out
