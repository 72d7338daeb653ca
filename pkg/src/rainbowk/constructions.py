"""Explicit 2-edge-colourings of complete multipartite graphs.

Layout shared by every family. The ``ell`` main parts are split into
``ell1**2`` base parts plus ``q = ell - ell1**2`` new parts, ``ell1 =
isqrt(ell)``. Base part ``s = (i-1)*ell1 + t`` sits in block ``i`` at offset
``t``. New part ``P_i`` sits in block ``i`` (first batch, ``i <= ell1``) or
block ``i - ell1`` (second batch) at offset ``ell1 + 1`` or ``ell1 + 2``.

Within a layer the colour of a pair of parts is 1 when they share a block or
an offset, 2 otherwise; new-to-base pairs follow ``vu_rule``. An edge between
different layers takes ``3 -`` the colour of the same pair of parts inside a
layer. Remainder vertex ``w_j`` gets colour 2 to every vertex of layer ``j``
and colour 1 to the rest of the main vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import isqrt
from typing import Any, Iterator

import numpy as np

from rainbowk import bounds
from rainbowk.graph import (
    EdgeColoring,
    Graph,
    Main,
    MultipartiteGraph,
    MultipartiteSpec,
    Remainder,
    Vertex,
    VertexId,
)

VU_RULES = ("block", "color2", "aligned")
DEFAULT_VU_RULE = "block"


class PairCase(enum.Enum):
    SAME_PART = "SamePart"
    SAME_LAYER_GROUP = "SameLayerGroup"
    SAME_SUPER_GROUP = "SameSuperGroup"
    CROSS_GROUP_ALIGNED = "CrossGroupAligned"
    CROSS_GROUP_GENERAL = "CrossGroupGeneral"
    REMAINDER_PAIR = "RemainderPair"


@dataclass(frozen=True)
class ConstructionParams:
    """``ell`` main parts of size ``r`` plus a remainder part of size ``p``."""

    ell: int
    r: int
    p: int = 0

    def __post_init__(self) -> None:
        if self.ell < 2:
            raise ValueError(f"ell must be >= 2, got {self.ell}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.p < 0 or (self.p > 0 and self.p >= self.r):
            raise ValueError(f"need 0 <= p < r, got p={self.p}, r={self.r}")

    @property
    def ell1(self) -> int:
        return isqrt(self.ell)

    @property
    def q(self) -> int:
        return self.ell - self.ell1 ** 2

    @property
    def vertex_count(self) -> int:
        return self.ell * self.r + self.p

    def spec(self) -> MultipartiteSpec:
        return MultipartiteSpec.equal(self.ell, self.r, self.p)

    def position(self, part: int) -> tuple[int, int]:
        """(block, offset) of a 1-based main part."""
        l1 = self.ell1
        if not 1 <= part <= self.ell:
            raise ValueError(f"no main part {part}")
        if part <= l1 * l1:
            return (part - 1) // l1 + 1, (part - 1) % l1 + 1
        i = part - l1 * l1
        if i <= l1:
            return i, l1 + 1
        return i - l1, l1 + 2

    def is_new_part(self, part: int) -> bool:
        return part > self.ell1 ** 2

    def vertex(self, v: Vertex) -> VertexId:
        if isinstance(v, (Main, Remainder)):
            return v
        v = int(v)
        main = self.ell * self.r
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex {v} out of range")
        if v >= main:
            return Remainder(v - main + 1)
        return Main(v // self.r + 1, v % self.r + 1)


@dataclass(frozen=True)
class Construction:
    """A coloured graph plus the parameters that produced it.

    Unpacks as ``graph, coloring``.
    """

    graph: Graph
    coloring: EdgeColoring
    params: ConstructionParams
    meta: dict[str, Any] = field(default_factory=dict)

    def __iter__(self) -> Iterator[Any]:
        return iter((self.graph, self.coloring))


def part_colors(params: ConstructionParams, vu_rule: str = DEFAULT_VU_RULE) -> np.ndarray:
    """``ell x ell`` within-layer colour of each pair of main parts (0-based).

    Diagonal entries are 0.
    """
    if vu_rule not in VU_RULES:
        raise ValueError(f"unknown vu_rule {vu_rule!r}; choose from {VU_RULES}")
    ell = params.ell
    pos = np.array([params.position(s) for s in range(1, ell + 1)])
    block, offset = pos[:, 0], pos[:, 1]
    new = np.array([params.is_new_part(s) for s in range(1, ell + 1)])
    same_block = block[:, None] == block[None, :]
    same_offset = offset[:, None] == offset[None, :]
    both_base = ~new[:, None] & ~new[None, :]
    both_new = new[:, None] & new[None, :]
    mixed = ~both_base & ~both_new

    one = both_base & (same_block | same_offset)
    # a batch of new parts shares one offset column
    one |= both_new & same_offset
    if vu_rule == "block":
        one |= mixed & same_block
    elif vu_rule == "aligned":
        base_offset = np.where(new[:, None], offset[None, :], offset[:, None])
        one |= mixed & ~same_block & (base_offset == 1)
    colors = np.where(one, 1, 2).astype(np.int8)
    np.fill_diagonal(colors, 0)
    return colors


def _color_matrix(params: ConstructionParams, vu_rule: str) -> np.ndarray:
    ell, r, p = params.ell, params.r, params.p
    pc = part_colors(params, vu_rule)
    ids = np.arange(ell * r)
    part, layer = ids // r, ids % r
    base = pc[part[:, None], part[None, :]]
    same_layer = layer[:, None] == layer[None, :]
    main = np.where(same_layer, base, np.where(base > 0, 3 - base, 0)).astype(np.int8)
    if p == 0:
        return main
    n = params.vertex_count
    mat = np.zeros((n, n), dtype=np.int8)
    mat[: ell * r, : ell * r] = main
    for j in range(p):
        w = ell * r + j
        row = np.where(layer == j, 2, 1).astype(np.int8)
        mat[w, : ell * r] = row
        mat[: ell * r, w] = row
    return mat


def _build(params: ConstructionParams, vu_rule: str, family: str) -> Construction:
    graph = MultipartiteGraph(params.spec())
    coloring = EdgeColoring(graph, _color_matrix(params, vu_rule), 2)
    meta = {"family": family, "ell": params.ell, "r": params.r, "p": params.p,
            "ell1": params.ell1, "q": params.q}
    if family != "square":
        meta["vu_rule"] = vu_rule
    return Construction(graph, coloring, params, meta)


def color_square_multipartite(ell: int, r: int) -> Construction:
    """Colouring of ``K_{ell^2[r]}``: ``ell**2`` parts of size ``r``."""
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    c = _build(ConstructionParams(ell * ell, r), DEFAULT_VU_RULE, "square")
    c.meta["ell_root"] = ell
    return c


def color_general_multipartite(ell: int, r: int, vu_rule: str = DEFAULT_VU_RULE) -> Construction:
    """Colouring of ``K_{ell[r]}`` built on ``K_{ell1^2[r]}`` plus ``q`` new parts.

    ``vu_rule`` picks the within-layer colour of new-part/base-part pairs:
    ``"block"`` gives colour 1 inside the new part's block, ``"color2"`` makes
    all of them colour 2, ``"aligned"`` gives colour 1 to offset-1 base parts
    of other blocks. With ``"color2"`` two new parts of the same batch are
    joined only by their direct edge inside a layer once ``q >= 2``.
    """
    if ell < 4:
        raise ValueError(f"ell must be >= 4, got {ell}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return _build(ConstructionParams(ell, r), vu_rule, "general")


def color_with_remainder_part(ell: int, r: int, p: int,
                              vu_rule: str = DEFAULT_VU_RULE) -> Construction:
    """Colouring of the ``(ell+1)``-partite graph with an extra part of size ``p < r``."""
    if ell < 4:
        raise ValueError(f"ell must be >= 4, got {ell}")
    if p < 1:
        raise ValueError("p must be >= 1; use color_general_multipartite for p = 0")
    if p >= r:
        raise ValueError(f"need p < r, got p={p}, r={r}")
    return _build(ConstructionParams(ell, r, p), vu_rule, "remainder")


def decompose_complete(n: int, k: int) -> ConstructionParams:
    """Write ``n = ell3 * r0 + p`` with ``0 <= p < r0`` for ``n >= f(k)``."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    row = bounds.f_of_k(k)
    if n < row.f_k:
        raise ValueError(f"n={n} is below f({k})={row.f_k}")
    ell3, p = divmod(n, row.r0)
    assert ell3 >= row.ell0 ** 2
    return ConstructionParams(ell3, row.r0, p)


def color_complete(n: int, k: int, extend: bool = False,
                   vu_rule: str = DEFAULT_VU_RULE) -> Construction:
    """Colouring certifying ``rc_k(K_n) = 2`` for ``n >= f(k)``.

    By default the result is the spanning complete multipartite subgraph.
    With ``extend=True`` the graph is ``K_n`` itself and the missing
    intra-part edges get colour 1.
    """
    params = decompose_complete(n, k)
    if params.p:
        c = color_with_remainder_part(params.ell, params.r, params.p, vu_rule)
    else:
        c = color_general_multipartite(params.ell, params.r, vu_rule)
    meta = dict(c.meta, family="complete", n=n, k=k, extended=extend)
    if not extend:
        return Construction(c.graph, c.coloring, params, meta)
    full = Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    mat = np.array(c.coloring.matrix)
    mat[(mat == 0) & ~np.eye(n, dtype=bool)] = 1
    return Construction(full, EdgeColoring(full, mat, 2), params, meta)


def case_classify(params: ConstructionParams, u: Vertex, v: Vertex) -> PairCase:
    """Proof case of a vertex pair, up to the symmetries of the colouring."""
    a, b = params.vertex(u), params.vertex(v)
    if a == b:
        raise ValueError("case_classify needs two distinct vertices")
    if isinstance(a, Remainder) or isinstance(b, Remainder):
        return PairCase.REMAINDER_PAIR
    if a.part == b.part:
        return PairCase.SAME_PART
    if a.layer == b.layer:
        return PairCase.SAME_LAYER_GROUP
    block_a, offset_a = params.position(a.part)
    block_b, offset_b = params.position(b.part)
    if block_a == block_b:
        return PairCase.SAME_SUPER_GROUP
    if offset_a == offset_b:
        return PairCase.CROSS_GROUP_ALIGNED
    return PairCase.CROSS_GROUP_GENERAL


def case_lower_bound(case: PairCase, ell: int, r: int) -> int:
    """Path count the case analysis guarantees; ``ell`` is the block size (the square root).

    For remainder pairs this is the smallest of the three counts derived for
    ``w`` vertices (same layer, other layer, another ``w``).
    """
    if case is PairCase.SAME_PART:
        return 2 * (ell * ell - 1)
    if case is PairCase.SAME_LAYER_GROUP:
        return r * (ell - 2) + 1
    if case in (PairCase.SAME_SUPER_GROUP, PairCase.CROSS_GROUP_ALIGNED):
        return 1 + (2 * ell + r - 2) * (ell - 2)
    if case is PairCase.CROSS_GROUP_GENERAL:
        return 5 + (2 * ell + r - 6) * (ell - 2)
    if case is PairCase.REMAINDER_PAIR:
        return min(1 + 2 * r * (ell - 1),
                   1 + (ell - 1) * (2 * ell + 2 * r - 6),
                   2 * ell * ell)
    raise ValueError(f"unknown case {case!r}")
