"""Rainbow k-connectivity of complete multipartite graphs."""

from rainbowk.graph import (
    EdgeColoring,
    Graph,
    Main,
    MultipartiteGraph,
    MultipartiteSpec,
    Remainder,
    are_adjacent,
    build_multipartite,
)
from rainbowk.kernels import BACKEND

__all__ = [
    "BACKEND",
    "EdgeColoring",
    "Graph",
    "Main",
    "MultipartiteGraph",
    "MultipartiteSpec",
    "Remainder",
    "are_adjacent",
    "build_multipartite",
]
