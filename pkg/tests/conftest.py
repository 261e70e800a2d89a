from functools import lru_cache

import pytest
from hypothesis import strategies as st

from falsetheta import partitions as pt

# (criterion, passed, detail) lines collected by test_acceptance
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name} -- {detail}")


@lru_cache(maxsize=None)
def cached_pairs(n, family):
    return tuple(pt.enumerate_pairs(n, family))


@st.composite
def general_pairs(draw, family=pt.FQ4, max_k=6, max_parts=8):
    """Valid pairs of a General family, built from levels so they always validate."""
    m, r = family.m, family.r
    k = draw(st.integers(0, max_k))
    levels = sorted(draw(st.lists(st.integers(0, k), max_size=max_parts)), reverse=True)
    entries = []
    seen = set()
    for j in levels:
        first = j not in seen
        seen.add(j)
        over = first and j <= k - 1 and draw(st.booleans())
        entries.append((m * j + r, over))
    return pt.BoxedPair(k, pt.make_overpartition(entries), family)


@pytest.fixture
def fq4():
    return pt.FQ4
