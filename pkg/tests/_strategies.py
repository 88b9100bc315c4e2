"""Hypothesis strategy for small random graded posets."""
from __future__ import annotations

from hypothesis import strategies as st

from gradpos.poset import GradedPoset


@st.composite
def graded_posets(draw, max_elements=10, max_levels=4):
    """Covers only join consecutive levels, so the Hasse diagram is reduced;
    every non-top element gets an upper cover so all maximal elements sit
    on the top level."""
    levels = draw(st.lists(st.integers(1, 3), min_size=1, max_size=max_levels))
    while sum(levels) > max_elements:
        levels.pop()
    starts = [sum(levels[:k]) for k in range(len(levels))]
    covers = set()
    for k in range(1, len(levels)):
        below = list(range(starts[k - 1], starts[k - 1] + levels[k - 1]))
        above = list(range(starts[k], starts[k] + levels[k]))
        for b in above:
            chosen = draw(st.lists(st.sampled_from(below), min_size=1, max_size=len(below), unique=True))
            covers.update((a, b) for a in chosen)
        for a in below:
            if not any(c[0] == a for c in covers):
                covers.add((a, draw(st.sampled_from(above))))
    return GradedPoset(sum(levels), covers)
