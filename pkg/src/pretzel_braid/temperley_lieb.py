"""Temperley-Lieb diagram basis on ``s`` strands.

A basis diagram is a noncrossing perfect matching of ``2s`` boundary points
listed in circular order: top points ``0..s-1`` left to right, then bottom
points right to left, so bottom position ``j`` is point ``2s-1-j``.

>>> b = tl_basis(3)
>>> len(b)                      # Catalan number
5
>>> int(b.trace_loops[b.identity])
3
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

Matching = tuple[int, ...]


def noncrossing_matchings(m: int) -> list[Matching]:
    """All noncrossing perfect matchings of points ``0..m-1`` as partner arrays."""
    if m % 2:
        return []
    out: list[Matching] = []
    partner = [-1] * m

    def fill(lo: int, hi: int):
        # yield once for every way to match the interval [lo, hi)
        if lo >= hi:
            yield
            return
        for k in range(lo + 1, hi, 2):
            partner[lo], partner[k] = k, lo
            for _ in fill(lo + 1, k):
                yield from fill(k + 1, hi)

    for _ in fill(0, m):
        out.append(tuple(partner))
    return out


@dataclass(frozen=True)
class TLBasis:
    strands: int
    matchings: tuple[Matching, ...]
    identity: int
    #: ``targets[i][b]`` is the index of ``b . e_i`` (generator ``i`` is 1-based)
    targets: tuple[np.ndarray, ...]
    #: ``loops[i][b]`` is 1 when ``b . e_i`` closes a loop (then the target is ``b``)
    loops: tuple[np.ndarray, ...]
    #: number of loops in the closure of each basis diagram
    trace_loops: np.ndarray

    def __len__(self) -> int:
        return len(self.matchings)


def _times_e(m: Matching, s: int, i: int) -> tuple[Matching, bool]:
    p, q = 2 * s - i, 2 * s - 1 - i       # bottom positions i-1 and i
    if m[p] == q:
        return m, True
    new = list(m)
    x, y = m[p], m[q]
    new[x], new[y] = y, x
    new[p], new[q] = q, p
    return tuple(new), False


def _closure_loops(m: Matching, s: int) -> int:
    seen = [False] * (2 * s)
    loops = 0
    for start in range(2 * s):
        if seen[start]:
            continue
        loops += 1
        x = start
        while not seen[x]:
            seen[x] = True
            y = m[x]
            seen[y] = True
            x = 2 * s - 1 - y        # closure arc joins top j with bottom j
    return loops


@lru_cache(maxsize=None)
def tl_basis(s: int) -> TLBasis:
    if s < 1:
        raise ValueError("need at least one strand")
    mats = noncrossing_matchings(2 * s)
    index = {m: k for k, m in enumerate(mats)}
    ident = tuple(2 * s - 1 - x for x in range(2 * s))
    targets: list[np.ndarray] = [np.zeros(0, dtype=np.int64)]
    loops: list[np.ndarray] = [np.zeros(0, dtype=np.uint8)]
    for i in range(1, s):
        t = np.empty(len(mats), dtype=np.int64)
        lp = np.empty(len(mats), dtype=np.uint8)
        for k, m in enumerate(mats):
            r, closed = _times_e(m, s, i)
            t[k] = index[r]
            lp[k] = closed
        targets.append(t)
        loops.append(lp)
    trace = np.array([_closure_loops(m, s) for m in mats], dtype=np.int64)
    return TLBasis(s, tuple(mats), index[ident], tuple(targets), tuple(loops), trace)
