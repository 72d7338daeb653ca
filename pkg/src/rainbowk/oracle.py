"""Brute-force ground truth for tiny graphs.

``exact_rck`` enumerates every colouring ``E -> {1..j}`` for increasing ``j``.
``exhaustive_pair_table`` recounts disjoint rainbow paths without the
verifier's enumerator or its branch and bound, so the two can be compared.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Any

import numpy as np

from rainbowk import kernels
from rainbowk.graph import EdgeColoring, Graph
from rainbowk.verifier import _max_disjoint

DEFAULT_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class OracleResult:
    k: int
    rck: int
    witness: EdgeColoring
    colorings_examined: int
    examined_by_colors: dict[int, int] = field(default_factory=dict)
    symmetry_pruning: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "rck": self.rck,
            "witness": [list(t) for t in self.witness.triples()],
            "colorings_examined": self.colorings_examined,
            "examined_by_colors": {str(j): c for j, c in self.examined_by_colors.items()},
            "symmetry_pruning": self.symmetry_pruning,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"


def _colorings_needed(m: int, max_colors: int, symmetry: bool) -> int:
    free = m - 1 if symmetry and m > 0 else m
    return sum(j ** free for j in range(1, max_colors + 1))


def _meets(mat: np.ndarray, j: int, k: int) -> bool:
    n = mat.shape[0]
    if j <= 2:
        table = kernels.two_color_table(mat)
        return n < 2 or int(table[np.triu_indices(n, 1)].min()) >= k
    for a, b in combinations(range(n), 2):
        if len(_max_disjoint(mat, j, a, b, target=k)) < k:
            return False
    return True


def exact_rck(g: Graph, k: int, max_colors: int, budget: int = DEFAULT_BUDGET,
              symmetry: bool = True) -> OracleResult:
    """Least ``j`` admitting a ``j``-colouring with ``k`` disjoint rainbow paths per pair.

    Colourings are visited as base-``j`` counters over the sorted edge list;
    the witness is the first one that passes. With ``symmetry`` the first
    edge is pinned to colour 1, which loses nothing because permuting colours
    preserves rainbow paths.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if max_colors < 1:
        raise ValueError("max_colors must be >= 1")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    edges = g.edges
    m = len(edges)
    needed = _colorings_needed(m, max_colors, symmetry)
    if needed > budget:
        raise BudgetExceeded(f"{needed} colourings exceed the budget of {budget}")
    n = g.vertex_count
    rows = np.array([e[0] for e in edges], dtype=np.intp)
    cols = np.array([e[1] for e in edges], dtype=np.intp)
    examined = 0
    by_colors: dict[int, int] = {}
    for j in range(1, max_colors + 1):
        head: tuple[int, ...] = (1,) if symmetry and m else ()
        seen = 0
        for tail in product(range(1, j + 1), repeat=m - len(head)):
            seen += 1
            colors = np.array(head + tail, dtype=np.int8)
            mat = np.zeros((n, n), dtype=np.int8)
            mat[rows, cols] = colors
            mat[cols, rows] = colors
            if _meets(mat, j, k):
                examined += seen
                by_colors[j] = seen
                return OracleResult(k, j, EdgeColoring(g, mat, j), examined,
                                    by_colors, symmetry)
        examined += seen
        by_colors[j] = seen
    raise ValueError(f"no colouring with at most {max_colors} colours reaches k={k}")


def _rainbow_paths_bruteforce(adj: np.ndarray, col: np.ndarray, a: int, b: int,
                              max_len: int) -> list[tuple[int, ...]]:
    others = [x for x in range(adj.shape[0]) if x not in (a, b)]
    found = []
    for inner in range(0, max_len):
        for mid in permutations(others, inner):
            path = (a, *mid, b)
            steps = list(zip(path, path[1:]))
            if not all(adj[x, y] for x, y in steps):
                continue
            colors = [col[x, y] for x, y in steps]
            if len(set(colors)) == len(colors):
                found.append(path)
    return found


def exhaustive_pair_table(g: Graph, c: EdgeColoring, budget: int = 10 ** 7) -> np.ndarray:
    """Per-pair maxima by trying every subfamily of rainbow paths, smallest first.

    For each pair the family size grows until no disjoint family of that size
    exists; families cannot grow past ``min(deg u, deg v)``.
    """
    n = g.vertex_count
    adj = g.adjacency
    col = c.matrix
    out = np.zeros((n, n), dtype=np.int64)
    spent = 0
    for a, b in combinations(range(n), 2):
        paths = _rainbow_paths_bruteforce(adj, col, a, b, c.color_count)
        interiors = [set(p[1:-1]) for p in paths]
        cap = min(int(adj[a].sum()), int(adj[b].sum()), len(paths))
        best = 0
        for size in range(1, cap + 1):
            hit = False
            for family in combinations(range(len(paths)), size):
                spent += 1
                if spent > budget:
                    raise BudgetExceeded(f"more than {budget} families examined")
                if all(not (interiors[x] & interiors[y]) for x, y in combinations(family, 2)):
                    hit = True
                    break
            if not hit:
                break
            best = size
        out[a, b] = out[b, a] = best
    return out
