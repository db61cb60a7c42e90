"""Shared strategies and independent oracles for the test suite.

The oracles here share no code with the package: they work directly from
the raw crossing tuples.
"""
from __future__ import annotations

import itertools
import sys

from hypothesis import strategies as st

from pretzel_braid.braid import BraidWord, word_from_seq
from pretzel_braid.laurent import LaurentPoly
from pretzel_braid.pretzel import Pretzel

NONZERO = [v for v in range(-5, 6) if v]


def naive_bracket(crossings, free_loops: int = 0) -> LaurentPoly:
    """Bracket by literal enumeration of all 2^c states.

    Each state joins edge ids pairwise; the loops are the connected
    components of that graph, counted with a plain depth-first search.
    """
    c = len(crossings)
    edges = sorted({e for x in crossings for e in x})
    acc: dict[int, int] = {}
    d = LaurentPoly({2: -1, -2: -1})
    total = LaurentPoly()
    for state in itertools.product((0, 1), repeat=c):
        adj: dict[int, list[int]] = {e: [] for e in edges}
        for (i, j, k, l), a in zip(crossings, state):
            pairs = ((i, j), (k, l)) if a else ((i, l), (j, k))
            for u, v in pairs:
                adj[u].append(v)
                adj[v].append(u)
        seen: set[int] = set()
        loops = 0
        for e in edges:
            if e in seen:
                continue
            loops += 1
            stack = [e]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                stack.extend(adj[u])
        na = sum(state)
        key = (2 * na - c, loops + free_loops - 1)
        acc[key] = acc.get(key, 0) + 1
    for (e, p), v in acc.items():
        total = total + LaurentPoly.monomial(e, v) * (d ** p if p >= 0 else 1)
    return total


def naive_seifert_count(crossings, orientation) -> int:
    """Seifert circles by following oriented edges and switching strands at every crossing."""
    where: dict[int, list[tuple[int, int]]] = {}
    for x, cr in enumerate(crossings):
        for s, e in enumerate(cr):
            where.setdefault(e, []).append((x, s))
    # the edge entering crossing x at slot s is incoming iff its head is there
    def head(e):
        (x0, s0), (x1, s1) = where[e]
        ends = [(x0, s0), (x1, s1)]
        # orientation[e] true: runs from the lower-indexed half-edge to the other
        ends.sort(key=lambda t: 4 * t[0] + t[1])
        return ends[1] if orientation[e] else ends[0]

    incoming = {}
    for e in where:
        x, s = head(e)
        incoming[4 * x + s] = e
    seen = set()
    circles = 0
    for e0 in where:
        if e0 in seen:
            continue
        circles += 1
        e = e0
        while e not in seen:
            seen.add(e)
            x, s = head(e)
            # oriented smoothing: leave along the outgoing slot adjacent to s
            cr = crossings[x]
            for t in ((s + 1) % 4, (s - 1) % 4):
                if 4 * x + t not in incoming:
                    e = cr[t]
                    break
    return circles


@st.composite
def braid_words(draw, max_strands: int = 6, max_len: int = 12) -> BraidWord:
    s = draw(st.integers(1, max_strands))
    if s == 1:
        return word_from_seq((), 1)
    gen = st.integers(1, s - 1).flatmap(lambda g: st.sampled_from((g, -g)))
    letters = draw(st.lists(gen, max_size=max_len))
    return word_from_seq(letters, s)


@st.composite
def pretzels(draw, max_n: int = 4, max_abs: int = 5) -> Pretzel:
    entries = draw(st.lists(
        st.integers(-max_abs, max_abs).filter(bool), min_size=1, max_size=max_n))
    return Pretzel(tuple(entries))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
