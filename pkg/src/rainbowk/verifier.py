"""Exact counting of internally disjoint rainbow paths, and certificates.

With at most two colours a rainbow path has at most two edges, so the best
family for a pair is the direct edge plus every midpoint ``y`` whose two edges
differ in colour. For more colours the rainbow paths are enumerated (length
capped at the palette size) and the largest internally disjoint subfamily is
found by branch and bound.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Sequence

import numpy as np

from rainbowk import kernels
from rainbowk.constructions import ConstructionParams, PairCase, case_classify
from rainbowk.graph import EdgeColoring, Graph, Vertex

Path = tuple[int, ...]


@dataclass(frozen=True)
class DisjointPathCertificate:
    u: int
    v: int
    paths: tuple[Path, ...]

    def __len__(self) -> int:
        return len(self.paths)

    def to_dict(self) -> dict[str, Any]:
        return {"u": self.u, "v": self.v, "paths": [list(p) for p in self.paths]}

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "DisjointPathCertificate":
        return cls(int(doc["u"]), int(doc["v"]),
                   tuple(tuple(int(x) for x in p) for p in doc["paths"]))


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _pair(g: Graph, u: Vertex, v: Vertex) -> tuple[int, int]:
    a, b = g.index(u), g.index(v)
    if a == b:
        raise ValueError("endpoints must be distinct")
    return a, b


def _check_host(g: Graph, c: EdgeColoring) -> None:
    if c.graph.vertex_count != g.vertex_count or not np.array_equal(
            c.graph.adjacency, g.adjacency):
        raise ValueError("colouring does not belong to this graph")


def rainbow_paths_between(g: Graph, c: EdgeColoring, u: Vertex, v: Vertex,
                          max_len: int | None = None) -> list[Path]:
    """Every rainbow ``u``-``v`` path with at most ``max_len`` edges, in lexicographic order."""
    a, b = _pair(g, u, v)
    _check_host(g, c)
    if max_len is None:
        max_len = c.color_count
    if max_len > c.color_count:
        raise ValueError(f"max_len={max_len} exceeds the {c.color_count} colours available")
    paths = kernels.rainbow_paths(c.matrix, a, b, max_len)
    for p in paths:
        assert 1 <= len(p) - 1 <= c.color_count
    return paths


def count_disjoint_two_color(g: Graph, c: EdgeColoring, u: Vertex, v: Vertex) -> int:
    if c.color_count != 2:
        raise ValueError(f"two-colour count needs color_count == 2, got {c.color_count}")
    a, b = _pair(g, u, v)
    mat = c.matrix
    ra, rb = mat[a], mat[b]
    mids = ((ra == 1) & (rb == 2)) | ((ra == 2) & (rb == 1))
    return int(mids.sum()) + int(mat[a, b] != 0)


def two_color_counts(c: EdgeColoring) -> np.ndarray:
    """Symmetric matrix of per-pair counts for a colouring with at most two colours."""
    if c.color_count > 2:
        raise ValueError("two_color_counts needs at most 2 colours")
    return kernels.two_color_table(c.matrix)


def _pack(paths: Sequence[Path], upper: int, target: int | None = None) -> list[Path]:
    """Largest pairwise internally disjoint subfamily of ``paths``.

    ``paths`` must not contain the direct edge. Search stops early at
    ``upper`` (a proven bound) or once ``target`` paths are found.
    """
    masks = []
    kept: list[Path] = []
    seen: set[int] = set()
    for p in sorted(paths, key=lambda p: (len(p), p)):
        m = 0
        for x in p[1:-1]:
            m |= 1 << x
        # identical interiors are interchangeable
        if m in seen:
            continue
        seen.add(m)
        masks.append(m)
        kept.append(p)
    # a path whose interior strictly contains another's is never needed
    order = [i for i, m in enumerate(masks)
             if not any(o != m and (o & m) == o for o in masks)]
    stop = upper if target is None else min(upper, target)

    best: list[int] = []
    used = 0
    for i in order:
        if not masks[i] & used:
            best.append(i)
            used |= masks[i]
    if len(best) >= stop:
        return [kept[i] for i in best]

    def bound(rem: list[int]) -> int:
        firsts = {kept[i][1] for i in rem}
        lasts = {kept[i][-2] for i in rem}
        return min(len(rem), len(firsts), len(lasts))

    chosen: list[int] = []

    def branch(rem: list[int]) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if len(best) >= stop:
                return True
        if not rem or len(chosen) + bound(rem) <= len(best):
            return False
        first = rem[0]
        chosen.append(first)
        done = branch([j for j in rem[1:] if not masks[j] & masks[first]])
        chosen.pop()
        if done:
            return True
        return branch(rem[1:])

    branch(order)
    return [kept[i] for i in sorted(best, key=lambda i: (len(kept[i]), kept[i]))]


def _max_disjoint(mat: np.ndarray, color_count: int, a: int, b: int,
                  target: int | None = None) -> list[Path]:
    paths = kernels.rainbow_paths(mat, a, b, color_count)
    direct = [p for p in paths if len(p) == 2]
    rest = [p for p in paths if len(p) > 2]
    deg_a = int(np.count_nonzero(mat[a]))
    deg_b = int(np.count_nonzero(mat[b]))
    upper = min(deg_a, deg_b) - len(direct)
    need = None if target is None else max(target - len(direct), 0)
    return direct + _pack(rest, upper, need)


def max_disjoint_rainbow_paths(g: Graph, c: EdgeColoring, u: Vertex,
                               v: Vertex) -> tuple[int, DisjointPathCertificate]:
    """Exact maximum number of internally disjoint rainbow ``u``-``v`` paths."""
    a, b = _pair(g, u, v)
    _check_host(g, c)
    family = _max_disjoint(c.matrix, c.color_count, a, b)
    return len(family), DisjointPathCertificate(a, b, tuple(family))


def _two_color_certificate(mat: np.ndarray, a: int, b: int) -> DisjointPathCertificate:
    paths: list[Path] = [(a, b)] if mat[a, b] else []
    ra, rb = mat[a], mat[b]
    for y in np.flatnonzero(((ra == 1) & (rb == 2)) | ((ra == 2) & (rb == 1))).tolist():
        paths.append((a, y, b))
    return DisjointPathCertificate(a, b, tuple(paths))


def check_certificate(g: Graph, c: EdgeColoring,
                      cert: DisjointPathCertificate) -> CheckResult:
    """Independent witness check; never calls the path enumerator or the solver."""
    n = g.vertex_count
    adj = g.adjacency
    col = c.matrix
    u, v = cert.u, cert.v
    if not (0 <= u < n and 0 <= v < n):
        return CheckResult(False, "endpoint out of range")
    if u == v:
        return CheckResult(False, "endpoints coincide")
    interiors: dict[int, int] = {}
    seen_paths = set()
    for idx, path in enumerate(cert.paths):
        if len(path) < 2:
            return CheckResult(False, f"path {idx} has no edge")
        if path[0] != u or path[-1] != v:
            return CheckResult(False, f"path {idx} does not join {u} and {v}")
        if any(not (0 <= x < n) for x in path):
            return CheckResult(False, f"path {idx} leaves the vertex range")
        if len(set(path)) != len(path):
            return CheckResult(False, f"path {idx} repeats a vertex")
        if len(path) - 1 > c.color_count:
            return CheckResult(False, f"path {idx} is longer than the palette")
        colors = []
        for x, y in zip(path, path[1:]):
            if not adj[x, y]:
                return CheckResult(False, f"path {idx} uses non-edge ({x}, {y})")
            colors.append(int(col[x, y]))
        if len(set(colors)) != len(colors):
            return CheckResult(False, f"path {idx} repeats a colour")
        if path in seen_paths:
            return CheckResult(False, f"path {idx} is listed twice")
        seen_paths.add(path)
        for x in path[1:-1]:
            if x in interiors:
                return CheckResult(
                    False, f"paths {interiors[x]} and {idx} share interior vertex {x}")
            interiors[x] = idx
    return CheckResult(True)


@dataclass
class VerificationReport:
    k: int
    n: int
    counts: np.ndarray
    per_case: dict[str, int] | None = None
    certificates: list[DisjointPathCertificate] | None = None
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def global_min(self) -> int | None:
        if self.n < 2:
            return None
        return int(self.counts[np.triu_indices(self.n, 1)].min())

    @property
    def verdict(self) -> bool:
        gm = self.global_min
        return gm is None or gm >= self.k

    def count(self, u: int, v: int) -> int:
        return int(self.counts[u, v])

    def per_pair(self) -> list[list[int]]:
        """Row ``u`` holds the counts for ``v = u+1 .. n-1``."""
        return [self.counts[u, u + 1:].tolist() for u in range(self.n - 1)]

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "verdict": self.verdict,
            "k": self.k,
            "n": self.n,
            "global_min": self.global_min,
            "per_pair": self.per_pair(),
        }
        if self.per_case is not None:
            doc["per_case"] = dict(sorted(self.per_case.items()))
        if self.certificates is not None:
            doc["certificates"] = [cert.to_dict() for cert in self.certificates]
        if self.meta:
            doc["meta"] = self.meta
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"


def verify_rck(g: Graph, c: EdgeColoring, k: int, want_certificates: bool = False,
               params: ConstructionParams | None = None, workers: int = 1,
               meta: dict[str, Any] | None = None) -> VerificationReport:
    """Exact per-pair counts and the verdict ``min count >= k``.

    The report is identical for every ``workers`` value.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _check_host(g, c)
    n = g.vertex_count
    mat = c.matrix
    pairs = list(combinations(range(n), 2))
    certs: list[DisjointPathCertificate] | None = None
    if c.color_count <= 2:
        counts = kernels.two_color_table(mat).astype(np.int64)
        if want_certificates:
            certs = [_two_color_certificate(mat, a, b) for a, b in pairs]
    else:
        def solve(pair: tuple[int, int]) -> list[Path]:
            return _max_disjoint(mat, c.color_count, *pair)

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                families = list(pool.map(solve, pairs))
        else:
            families = [solve(p) for p in pairs]
        counts = np.zeros((n, n), dtype=np.int64)
        for (a, b), fam in zip(pairs, families):
            counts[a, b] = counts[b, a] = len(fam)
        if want_certificates:
            certs = [DisjointPathCertificate(a, b, tuple(f))
                     for (a, b), f in zip(pairs, families)]

    per_case = None
    if params is not None:
        if params.vertex_count != n:
            raise ValueError("construction parameters do not match the graph size")
        per_case = {}
        for a, b in pairs:
            name = case_classify(params, a, b).value
            cnt = int(counts[a, b])
            per_case[name] = min(per_case.get(name, cnt), cnt)
    return VerificationReport(k, n, counts, per_case, certs, dict(meta or {}))


def per_case_minima(report: VerificationReport) -> dict[PairCase, int]:
    return {PairCase(name): v for name, v in (report.per_case or {}).items()}
