"""Complete multipartite graphs, vertex coordinates and edge colourings.

Vertices carry 1-based coordinates ``Main(part, layer)`` for ``u_{s,j}`` and
``Remainder(index)`` for the extra part ``w_j``. Internally every vertex is a
dense 0-based integer; main vertices are numbered part-major, remainder
vertices come last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

import numpy as np


@dataclass(frozen=True, order=True)
class Main:
    part: int
    layer: int

    def label(self) -> str:
        return f"u{self.part},{self.layer}"


@dataclass(frozen=True, order=True)
class Remainder:
    index: int

    def label(self) -> str:
        return f"w{self.index}"


VertexId = Union[Main, Remainder]
Vertex = Union[Main, Remainder, int]


@dataclass(frozen=True)
class MultipartiteSpec:
    """Sizes of the main parts ``V_1..V_m`` plus an optional remainder part."""

    part_sizes: tuple[int, ...]
    remainder_size: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "part_sizes", tuple(int(s) for s in self.part_sizes))
        if not self.part_sizes:
            raise ValueError("a multipartite spec needs at least one part")
        if any(s < 1 for s in self.part_sizes):
            raise ValueError(f"part sizes must be >= 1, got {list(self.part_sizes)}")
        if self.remainder_size < 0:
            raise ValueError("remainder size must be >= 0")

    @classmethod
    def equal(cls, ell: int, r: int, p: int = 0) -> "MultipartiteSpec":
        return cls((r,) * ell, p)

    @property
    def vertex_count(self) -> int:
        return sum(self.part_sizes) + self.remainder_size

    @property
    def expected_edge_count(self) -> int:
        n = self.vertex_count
        missing = sum(s * (s - 1) // 2 for s in self.part_sizes)
        missing += self.remainder_size * (self.remainder_size - 1) // 2
        return n * (n - 1) // 2 - missing


class Graph:
    """Simple undirected graph on dense ids ``0..n-1``.

    Immutable after construction; the adjacency matrix is a read-only
    ``uint8`` array so it can be handed straight to the kernels.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u, v] = adj[v, u] = 1
        adj.setflags(write=False)
        self._n = n
        self._adj = adj
        rows, cols = np.nonzero(np.triu(adj))
        self._edges = tuple(zip(rows.tolist(), cols.tolist()))

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(min, max)`` pairs in lexicographic order."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    def index(self, v: Vertex) -> int:
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            v = int(v)
            if not 0 <= v < self._n:
                raise ValueError(f"vertex {v} out of range")
            return v
        raise TypeError(f"{type(self).__name__} has no coordinates for {v!r}")

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return bool(self._adj[self.index(u), self.index(v)])

    def neighbors(self, u: Vertex) -> list[int]:
        return np.flatnonzero(self._adj[self.index(u)]).tolist()

    def degree(self, u: Vertex) -> int:
        return int(self._adj[self.index(u)].sum())

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self._n

    def label(self, v: int) -> str:
        return f"v{v}"

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count})"


class MultipartiteGraph(Graph):
    """Complete multipartite graph with ``u_{s,j}`` / ``w_j`` coordinates."""

    def __init__(self, spec: MultipartiteSpec):
        self.spec = spec
        offsets = [0]
        for size in spec.part_sizes:
            offsets.append(offsets[-1] + size)
        self._offsets = tuple(offsets)
        self._main_count = offsets[-1]
        n = spec.vertex_count
        part = np.empty(n, dtype=np.int64)
        for s, size in enumerate(spec.part_sizes):
            part[offsets[s]:offsets[s + 1]] = s
        # remainder vertices form one extra part
        part[self._main_count:] = len(spec.part_sizes)
        self._part = part
        super().__init__(n, _cross_pairs(part))

    @property
    def part_count(self) -> int:
        return len(self.spec.part_sizes)

    def index(self, v: Vertex) -> int:
        if isinstance(v, Main):
            if not 1 <= v.part <= self.part_count:
                raise ValueError(f"no part {v.part} (have {self.part_count})")
            if not 1 <= v.layer <= self.spec.part_sizes[v.part - 1]:
                raise ValueError(f"part {v.part} has no layer {v.layer}")
            return self._offsets[v.part - 1] + v.layer - 1
        if isinstance(v, Remainder):
            if not 1 <= v.index <= self.spec.remainder_size:
                raise ValueError(f"no remainder vertex w{v.index}")
            return self._main_count + v.index - 1
        return super().index(v)

    def vertex(self, i: int) -> VertexId:
        i = super().index(i)
        if i >= self._main_count:
            return Remainder(i - self._main_count + 1)
        s = int(self._part[i])
        return Main(s + 1, i - self._offsets[s] + 1)

    def vertices(self) -> Iterator[VertexId]:
        return (self.vertex(i) for i in range(self.vertex_count))

    def part_of(self, v: Vertex) -> int:
        """1-based part index; the remainder part is ``part_count + 1``."""
        return int(self._part[self.index(v)]) + 1

    def layer_members(self, j: int) -> list[int]:
        """Dense ids of ``U_j``: the ``j``-th vertex of every main part holding one."""
        return [self._offsets[s] + j - 1
                for s, size in enumerate(self.spec.part_sizes) if j <= size]

    def part_members(self, s: int) -> list[int]:
        return list(range(self._offsets[s - 1], self._offsets[s]))

    def label(self, v: int) -> str:
        return self.vertex(v).label()

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        sizes = list(self.spec.part_sizes)
        return f"MultipartiteGraph(parts={sizes}, remainder={self.spec.remainder_size})"


def _cross_pairs(part: np.ndarray) -> list[tuple[int, int]]:
    rows, cols = np.nonzero(np.triu(part[:, None] != part[None, :]))
    return list(zip(rows.tolist(), cols.tolist()))


def build_multipartite(spec: MultipartiteSpec) -> MultipartiteGraph:
    return MultipartiteGraph(spec)


def are_adjacent(g: Graph, u: Vertex, v: Vertex) -> bool:
    return g.has_edge(u, v)


class EdgeColoring:
    """Total map from the edges of a host graph to colours ``1..color_count``.

    Colours live in a read-only ``int8`` matrix where 0 marks a non-edge.
    """

    def __init__(self, graph: Graph, colors: dict[tuple[int, int], int] | np.ndarray,
                 color_count: int):
        if color_count < 1:
            raise ValueError("color_count must be >= 1")
        if color_count > 63:
            raise ValueError("at most 63 colours are supported")
        n = graph.vertex_count
        if isinstance(colors, np.ndarray):
            mat = np.array(colors, dtype=np.int8)
            if mat.shape != (n, n) or not np.array_equal(mat, mat.T):
                raise ValueError("colour matrix must be symmetric and n x n")
        else:
            mat = np.zeros((n, n), dtype=np.int8)
            for (u, v), c in colors.items():
                u, v = graph.index(u), graph.index(v)
                if not graph.adjacency[u, v]:
                    raise ValueError(f"colour given for non-edge ({u}, {v})")
                if mat[u, v] and mat[u, v] != c:
                    raise ValueError(f"conflicting colours for edge ({u}, {v})")
                mat[u, v] = mat[v, u] = c
        edge_mask = graph.adjacency.astype(bool)
        if np.any(mat[~edge_mask] != 0):
            raise ValueError("colouring assigns a colour to a non-edge")
        on_edges = mat[edge_mask]
        if np.any(on_edges == 0):
            raise ValueError("colouring is not total: some edge has no colour")
        if np.any((on_edges < 1) | (on_edges > color_count)):
            raise ValueError(f"colours must lie in 1..{color_count}")
        mat.setflags(write=False)
        self.graph = graph
        self.color_count = int(color_count)
        self._mat = mat

    @classmethod
    def uniform(cls, graph: Graph, color: int = 1, color_count: int | None = None):
        mat = graph.adjacency.astype(np.int8) * color
        return cls(graph, mat, color_count or color)

    @property
    def matrix(self) -> np.ndarray:
        return self._mat

    def color(self, u: Vertex, v: Vertex) -> int:
        i, j = self.graph.index(u), self.graph.index(v)
        c = int(self._mat[i, j])
        if c == 0:
            raise ValueError(f"({u}, {v}) is not an edge")
        return c

    def colors_used(self) -> set[int]:
        return set(np.unique(self._mat[self._mat > 0]).tolist())

    def triples(self) -> list[tuple[int, int, int]]:
        return [(u, v, int(self._mat[u, v])) for u, v in self.graph.edges]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (self.color_count == other.color_count
                and self.graph == other.graph
                and np.array_equal(self._mat, other._mat))

    def __hash__(self) -> int:
        return hash((self.color_count, self._mat.tobytes()))

    def __repr__(self) -> str:
        return f"EdgeColoring(colors={self.color_count}, edges={self.graph.edge_count})"
