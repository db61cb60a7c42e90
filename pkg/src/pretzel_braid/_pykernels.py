"""Pure-Python kernels.

``state_histogram`` and ``tl_apply`` mirror the compiled versions in
``_kernels.pyx`` exactly (same algorithm, same output).  ``contract_histogram``
reaches the same histogram by contracting crossings one at a time while
tracking how the open edge ends are paired, which keeps pure-Python runs
fast on pretzel and braid diagrams.
"""
from __future__ import annotations

import sys
from collections import defaultdict

import numpy as np


def state_histogram(crossings, n_edges: int) -> np.ndarray:
    """``hist[a, l]``: states with ``a`` A-smoothings whose smoothing has ``l`` loops.

    Depth-first over the ``2^c`` states with a rollback union-find, so each
    state costs two unions on top of its parent's.
    """
    c = len(crossings)
    hist = np.zeros((c + 1, n_edges + 1), dtype=np.int64)
    if c == 0:
        hist[0, 0] = 1
        return hist
    parent = list(range(n_edges))
    size = [1] * n_edges
    undo: list[int] = []
    counts: dict[tuple[int, int], int] = defaultdict(int)

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a: int, b: int) -> int:
        ra, rb = find(a), find(b)
        if ra == rb:
            return 0
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        undo.append(rb)
        return 1

    def walk(k: int, na: int, comps: int) -> None:
        if k == c:
            counts[na, comps] += 1
            return
        x0, x1, x2, x3 = crossings[k]
        for choice in (0, 1):
            mark = len(undo)
            if choice:
                merged = union(x0, x1) + union(x2, x3)
            else:
                merged = union(x0, x3) + union(x1, x2)
            walk(k + 1, na + choice, comps - merged)
            while len(undo) > mark:
                rb = undo.pop()
                size[parent[rb]] -= size[rb]
                parent[rb] = rb

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, c + 100))
    try:
        walk(0, 0, n_edges)
    finally:
        sys.setrecursionlimit(limit)
    for (na, loops), v in counts.items():
        hist[na, loops] = v
    return hist


def _join(ends: dict[int, int], x: int, y: int) -> int:
    """Add an arc from edge end ``x`` to ``y``; return 1 if it closes a loop."""
    if x == y:
        return 1
    if ends.get(x) == y:
        del ends[x], ends[y]
        return 1
    a = ends.pop(x, None)
    if a is None:
        a = x
    else:
        del ends[a]
    b = ends.pop(y, None)
    if b is None:
        b = y
    else:
        del ends[b]
    ends[a] = b
    ends[b] = a
    return 0


def contract_histogram(crossings, n_edges: int) -> np.ndarray:
    """Same histogram as :func:`state_histogram`, by boundary contraction."""
    c = len(crossings)
    hist = np.zeros((c + 1, n_edges + 1), dtype=np.int64)
    states: dict[tuple, dict[tuple[int, int], int]] = {(): {(0, 0): 1}}
    for i, j, k, l in crossings:
        nxt: dict[tuple, dict[tuple[int, int], int]] = defaultdict(lambda: defaultdict(int))
        for key, tally in states.items():
            for is_a, (p, q) in ((1, ((i, j), (k, l))), (0, ((i, l), (j, k)))):
                ends = dict(key)
                closed = _join(ends, *p) + _join(ends, *q)
                bucket = nxt[tuple(sorted(ends.items()))]
                for (na, loops), v in tally.items():
                    bucket[na + is_a, loops + closed] += v
        states = nxt
    (key, tally), = states.items()
    assert key == ()
    for (na, loops), v in tally.items():
        hist[na, loops] = v
    return hist


def tl_apply(V: np.ndarray, target: np.ndarray, loop: np.ndarray, positive: bool) -> np.ndarray:
    """Right-multiply a coefficient matrix by one braid letter.

    Row ``b`` of ``V`` holds the coefficient of basis diagram ``b`` as a
    Laurent polynomial sampled every second exponent.  The result is three
    columns wider; its lowest exponent is three below the input's.
    Works for int64 and object (arbitrary precision) arrays.
    """
    B, W = V.shape
    out = np.zeros((B, W + 3), dtype=V.dtype)
    idc, ec = (2, 1) if positive else (1, 2)
    l1, l2 = (2, 0) if positive else (3, 1)
    out[:, idc:idc + W] += V
    loop = loop.astype(bool)
    plain = ~loop
    np.add.at(out[:, ec:ec + W], target[plain], V[plain])
    rows = np.flatnonzero(loop)      # b . e_i = d b, so these targets are the rows themselves
    out[rows, l1:l1 + W] -= V[rows]
    out[rows, l2:l2 + W] -= V[rows]
    return out
