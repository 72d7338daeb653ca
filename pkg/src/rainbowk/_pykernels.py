"""Pure-Python kernels; used when the compiled extension is unavailable."""

from __future__ import annotations

import numpy as np


def two_color_table(col: np.ndarray) -> np.ndarray:
    """Per-pair maximum number of internally disjoint rainbow paths, <= 2 colours.

    ``col[u, v]`` is the colour of ``uv`` (0 for a non-edge). Every rainbow
    path has length <= 2, so a pair's count is ``[uv in E]`` plus the number of
    midpoints ``y`` with ``col[u, y] != col[y, v]`` (both non-zero).
    """
    n = col.shape[0]
    rows = col.tolist()
    ones = [0] * n
    twos = [0] * n
    for u, row in enumerate(rows):
        m1 = m2 = 0
        for y, c in enumerate(row):
            if c == 1:
                m1 |= 1 << y
            elif c == 2:
                m2 |= 1 << y
        ones[u], twos[u] = m1, m2
    out = np.zeros((n, n), dtype=np.int32)
    for u in range(n):
        o_u, t_u = ones[u], twos[u]
        for v in range(u + 1, n):
            k = ((o_u & twos[v]) | (t_u & ones[v])).bit_count()
            if rows[u][v]:
                k += 1
            out[u, v] = out[v, u] = k
    return out


def rainbow_paths(col: np.ndarray, u: int, v: int, max_len: int) -> list[tuple[int, ...]]:
    """All rainbow ``u``-``v`` paths with at most ``max_len`` edges, sorted."""
    rows = col.tolist()
    nbrs = [[y for y, c in enumerate(row) if c] for row in rows]
    found: list[tuple[int, ...]] = []
    path = [u]
    on_path = {u}

    def extend(x: int, used: int) -> None:
        for y in nbrs[x]:
            if y in on_path:
                continue
            bit = 1 << rows[x][y]
            if used & bit:
                continue
            if y == v:
                found.append(tuple(path) + (v,))
                continue
            if len(path) < max_len:
                path.append(y)
                on_path.add(y)
                extend(y, used | bit)
                path.pop()
                on_path.discard(y)

    if max_len >= 1:
        extend(u, 0)
    found.sort()
    return found
