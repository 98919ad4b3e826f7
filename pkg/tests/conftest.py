from __future__ import annotations

from itertools import product

import pytest
from hypothesis import strategies as st

from urep.graphs import LabeledGraph, all_pairs
from urep.words import Pattern


def valid_patterns(lo: int, hi: int) -> list[Pattern]:
    """Every reduced pattern over {1, 2} with length in [lo, hi]."""
    return [Pattern(p) for k in range(lo, hi + 1) for p in product((1, 2), repeat=k) if 1 in p]


def order_isomorphic(a, b) -> bool:
    """Brute-force reduction check that never calls ``reduce``."""
    if len(a) != len(b):
        return False
    for x in range(len(a)):
        for y in range(len(a)):
            if (a[x] < a[y]) != (b[x] < b[y]) or (a[x] == a[y]) != (b[x] == b[y]):
                return False
    return True


def brute_verify(w, g: LabeledGraph, u: Pattern) -> bool:
    """Representation check straight from the definition, window by window."""
    if set(w) != set(range(1, g.n + 1)):
        return False
    k = len(u)
    for x, y in all_pairs(g.n):
        r = [z for z in w if z in (x, y)]
        matched = any(order_isomorphic(r[p : p + k], u.letters) for p in range(len(r) - k + 1))
        if matched == g.has_edge(x, y):
            return False
    return True


@st.composite
def patterns(draw, min_len: int = 2, max_len: int = 5) -> Pattern:
    k = draw(st.integers(min_len, max_len))
    letters = draw(st.lists(st.sampled_from((1, 2)), min_size=k, max_size=k).filter(lambda l: 1 in l))
    return Pattern(tuple(letters))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6) -> LabeledGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = all_pairs(n)
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph(n, frozenset(p for p, b in zip(pairs, mask) if b))


@st.composite
def full_words(draw, n: int, max_extra: int = 8) -> tuple[int, ...]:
    """Words over [n] that use every letter."""
    extra = draw(st.lists(st.integers(1, n), max_size=max_extra))
    letters = list(range(1, n + 1)) + extra
    return tuple(draw(st.permutations(letters)))


words = st.lists(st.integers(1, 9), max_size=14).map(tuple)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
