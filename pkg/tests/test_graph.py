from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rainbowk.graph import (
    EdgeColoring,
    Main,
    MultipartiteSpec,
    Remainder,
    are_adjacent,
    build_multipartite,
)

specs = st.builds(
    MultipartiteSpec,
    st.lists(st.integers(1, 4), min_size=1, max_size=12).map(tuple),
    st.integers(0, 3),
)


@pytest.mark.parametrize("sizes, n, m", [
    ((1, 1, 1), 3, 3),
    ((2, 2), 4, 4),
    ((2,) * 9, 18, 144),
])
def test_build_counts(sizes, n, m):
    g = build_multipartite(MultipartiteSpec(sizes))
    assert g.vertex_count == n
    assert g.edge_count == m


def test_edge_count_matches_pair_scan():
    spec = MultipartiteSpec((3, 1, 2, 2), 2)
    g = build_multipartite(spec)
    brute = sum(1 for u in range(g.vertex_count) for v in range(u + 1, g.vertex_count)
                if g.part_of(u) != g.part_of(v))
    assert g.edge_count == brute == spec.expected_edge_count
    assert g.edge_count == comb(10, 2) - 3 - 0 - 1 - 1 - 1


@pytest.mark.parametrize("sizes", [(), (2, 0), (1, -1)])
def test_bad_specs(sizes):
    with pytest.raises(ValueError):
        MultipartiteSpec(sizes)


def test_adjacency_examples():
    g = build_multipartite(MultipartiteSpec((2, 2)))
    assert not are_adjacent(g, Main(1, 1), Main(1, 2))
    assert are_adjacent(g, Main(1, 1), Main(2, 1))
    h = build_multipartite(MultipartiteSpec((2, 2), 1))
    assert are_adjacent(h, Remainder(1), Main(1, 1))


def test_remainder_part_is_independent():
    g = build_multipartite(MultipartiteSpec((3, 3, 3), 2))
    assert not are_adjacent(g, Remainder(1), Remainder(2))
    assert all(are_adjacent(g, Remainder(1), x) for x in g.vertices() if isinstance(x, Main))


@pytest.mark.parametrize("bad", [Main(3, 1), Main(1, 3), Remainder(1), Main(0, 1), 4, -1])
def test_invalid_ids(bad):
    g = build_multipartite(MultipartiteSpec((2, 2)))
    with pytest.raises(ValueError):
        are_adjacent(g, bad, Main(1, 1))


@settings(max_examples=60, deadline=None)
@given(specs)
def test_adjacent_iff_different_parts(spec):
    g = build_multipartite(spec)
    verts = list(g.vertices())
    for a in verts:
        for b in verts:
            if a != b:
                assert are_adjacent(g, a, b) == (g.part_of(a) != g.part_of(b))
    assert g.edge_count == spec.expected_edge_count


@settings(max_examples=60, deadline=None)
@given(specs)
def test_dense_id_bijection(spec):
    g = build_multipartite(spec)
    ids = [g.index(x) for x in g.vertices()]
    assert ids == list(range(g.vertex_count))
    assert all(g.vertex(g.index(x)) == x for x in g.vertices())


def test_layers_are_computed_views():
    g = build_multipartite(MultipartiteSpec((2, 1, 2)))
    assert [g.vertex(i) for i in g.layer_members(2)] == [Main(1, 2), Main(3, 2)]
    assert g.part_members(3) == [3, 4]


class TestColoring:
    def test_non_edge_rejected(self):
        g = build_multipartite(MultipartiteSpec((2, 2)))
        with pytest.raises(ValueError):
            EdgeColoring(g, {(0, 1): 1}, 1)

    def test_partial_rejected(self):
        g = build_multipartite(MultipartiteSpec((1, 1, 1)))
        with pytest.raises(ValueError, match="not total"):
            EdgeColoring(g, {(0, 1): 1, (0, 2): 1}, 1)

    def test_out_of_palette(self):
        g = build_multipartite(MultipartiteSpec((1, 1)))
        with pytest.raises(ValueError):
            EdgeColoring(g, {(0, 1): 3}, 2)

    def test_query_non_edge(self):
        g = build_multipartite(MultipartiteSpec((2, 1)))
        c = EdgeColoring.uniform(g)
        assert c.color(Main(1, 1), Main(2, 1)) == 1
        with pytest.raises(ValueError):
            c.color(Main(1, 1), Main(1, 2))

    def test_immutable(self):
        g = build_multipartite(MultipartiteSpec((1, 1, 1)))
        c = EdgeColoring.uniform(g)
        with pytest.raises(ValueError):
            c.matrix[0, 1] = 2
        with pytest.raises(ValueError):
            g.adjacency[0, 1] = 0
        assert np.array_equal(c.matrix, c.matrix.T)
