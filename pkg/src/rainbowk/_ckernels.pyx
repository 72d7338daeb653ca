# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``rainbowk._pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t

cnp.import_array()


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def two_color_table(const signed char[:, :] col):
    # rows as 64-bit bitsets of colour-1 and colour-2 neighbours; a midpoint
    # y counts when it lies in ones[u] & twos[v] or twos[u] & ones[v]
    cdef Py_ssize_t n = col.shape[0]
    cdef Py_ssize_t words = (n + 63) // 64
    cdef Py_ssize_t u, v, y, w
    cdef int k
    cdef signed char c
    ones_arr = np.zeros((n, max(words, 1)), dtype=np.uint64)
    twos_arr = np.zeros((n, max(words, 1)), dtype=np.uint64)
    cdef uint64_t[:, :] ones = ones_arr
    cdef uint64_t[:, :] twos = twos_arr
    out = np.zeros((n, n), dtype=np.int32)
    cdef int[:, :] res = out
    with nogil:
        for u in range(n):
            for y in range(n):
                c = col[u, y]
                if c == 1:
                    ones[u, y >> 6] |= (<uint64_t>1) << (y & 63)
                elif c == 2:
                    twos[u, y >> 6] |= (<uint64_t>1) << (y & 63)
        for u in range(n):
            for v in range(u + 1, n):
                k = 1 if col[u, v] != 0 else 0
                for w in range(words):
                    k += __builtin_popcountll((ones[u, w] & twos[v, w]) | (twos[u, w] & ones[v, w]))
                res[u, v] = k
                res[v, u] = k
    return out


cdef void _extend(const signed char[:, :] col, int[:, :] nbrs, int[:] deg,
                  int x, int target, int depth, int max_len, uint64_t used,
                  int[:] path, char[:] on_path, list found):
    cdef int i, y
    cdef uint64_t bit
    for i in range(deg[x]):
        y = nbrs[x, i]
        if on_path[y]:
            continue
        bit = (<uint64_t>1) << col[x, y]
        if used & bit:
            continue
        if y == target:
            found.append(tuple([path[t] for t in range(depth + 1)]) + (target,))
            continue
        if depth + 1 < max_len:
            path[depth + 1] = y
            on_path[y] = 1
            _extend(col, nbrs, deg, y, target, depth + 1, max_len, used | bit,
                    path, on_path, found)
            on_path[y] = 0


def rainbow_paths(const signed char[:, :] col, int u, int v, int max_len):
    cdef Py_ssize_t n = col.shape[0]
    cdef Py_ssize_t x, y
    nbrs_arr = np.zeros((n, max(n, 1)), dtype=np.int32)
    deg_arr = np.zeros(n, dtype=np.int32)
    cdef int[:, :] nbrs = nbrs_arr
    cdef int[:] deg = deg_arr
    for x in range(n):
        for y in range(n):
            if col[x, y] != 0:
                nbrs[x, deg[x]] = y
                deg[x] += 1
    path_arr = np.zeros(max(max_len, 1) + 1, dtype=np.int32)
    on_arr = np.zeros(n, dtype=np.int8)
    cdef int[:] path = path_arr
    cdef char[:] on_path = on_arr
    found = []
    path[0] = u
    on_path[u] = 1
    if max_len >= 1:
        _extend(col, nbrs, deg, u, v, 0, max_len, 0, path, on_path, found)
    found.sort()
    return found
