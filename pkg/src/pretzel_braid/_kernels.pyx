# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference implementations."""
import numpy as np

from libc.stdlib cimport free, malloc


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef inline int _union(int* parent, int* size, int* undo, int* top, int a, int b) noexcept nogil:
    cdef int ra = _find(parent, a)
    cdef int rb = _find(parent, b)
    cdef int t
    if ra == rb:
        return 0
    if size[ra] < size[rb]:
        t = ra
        ra = rb
        rb = t
    parent[rb] = ra
    size[ra] += size[rb]
    undo[top[0]] = rb
    top[0] += 1
    return 1


cdef void _walk(int k, int na, int comps, int c, const int* X, int* parent, int* size,
                int* undo, int* top, long long* hist, int width) noexcept nogil:
    cdef int choice, mark, merged, rb
    cdef const int* x
    if k == c:
        hist[na * width + comps] += 1
        return
    x = X + 4 * k
    for choice in range(2):
        mark = top[0]
        if choice:
            merged = _union(parent, size, undo, top, x[0], x[1]) + _union(parent, size, undo, top, x[2], x[3])
        else:
            merged = _union(parent, size, undo, top, x[0], x[3]) + _union(parent, size, undo, top, x[1], x[2])
        _walk(k + 1, na + choice, comps - merged, c, X, parent, size, undo, top, hist, width)
        while top[0] > mark:
            top[0] -= 1
            rb = undo[top[0]]
            size[parent[rb]] -= size[rb]
            parent[rb] = rb


def state_histogram(crossings, int n_edges):
    """``hist[a, l]``: states with ``a`` A-smoothings whose smoothing has ``l`` loops."""
    cdef int c = len(crossings)
    arr = np.ascontiguousarray(np.asarray(crossings, dtype=np.int32).reshape(c * 4))
    cdef int[::1] X = arr
    hist = np.zeros((c + 1, n_edges + 1), dtype=np.int64)
    cdef long long[:, ::1] H = hist
    if c == 0:
        H[0, 0] = 1
        return hist
    cdef int* parent = <int*> malloc(n_edges * sizeof(int))
    cdef int* size = <int*> malloc(n_edges * sizeof(int))
    cdef int* undo = <int*> malloc((2 * c + 1) * sizeof(int))
    cdef int top = 0
    cdef int i
    if parent == NULL or size == NULL or undo == NULL:
        free(parent)
        free(size)
        free(undo)
        raise MemoryError()
    for i in range(n_edges):
        parent[i] = i
        size[i] = 1
    with nogil:
        _walk(0, 0, n_edges, c, &X[0], parent, size, undo, &top, &H[0, 0], n_edges + 1)
    free(parent)
    free(size)
    free(undo)
    return hist


def tl_apply(const long long[:, ::1] V, const long long[::1] target,
             const unsigned char[::1] loop, bint positive):
    """Right-multiply a coefficient matrix by one braid letter (int64 only)."""
    cdef Py_ssize_t B = V.shape[0]
    cdef Py_ssize_t W = V.shape[1]
    out = np.zeros((B, W + 3), dtype=np.int64)
    cdef long long[:, ::1] O = out
    cdef Py_ssize_t b, j, t
    cdef long long v
    cdef int idc = 2 if positive else 1
    cdef int ec = 1 if positive else 2
    cdef int l1 = 2 if positive else 3
    cdef int l2 = 0 if positive else 1
    with nogil:
        for b in range(B):
            t = target[b]
            for j in range(W):
                v = V[b, j]
                if v == 0:
                    continue
                O[b, j + idc] += v
                if loop[b]:
                    O[t, j + l1] -= v
                    O[t, j + l2] -= v
                else:
                    O[t, j + ec] += v
    return out
