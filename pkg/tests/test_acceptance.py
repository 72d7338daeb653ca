"""Exit criteria. Each test is one criterion; a PASS/FAIL line per criterion is
printed in the terminal summary."""

import itertools
import json
import random
import time

import numpy as np
import pytest

from rainbowk import io
from rainbowk.bounds import bounds_table, ell0_form_disagreements, crossover, f_of_k
from rainbowk.cli import main
from rainbowk.constructions import (
    VU_RULES,
    PairCase,
    case_lower_bound,
    color_general_multipartite,
    color_square_multipartite,
    color_with_remainder_part,
)
from rainbowk.graph import EdgeColoring
from rainbowk.oracle import exact_rck, exhaustive_pair_table
from rainbowk.verifier import (
    check_certificate,
    count_disjoint_two_color,
    max_disjoint_rainbow_paths,
    rainbow_paths_between,
    verify_rck,
)

from conftest import complete_graph, cycle_graph, path_graph, random_instance
from test_constructions import reference_edge_agreement
from test_verifier import mutations, valid_family


@pytest.mark.criterion("A1 square family K_{9[2]} end-to-end (ell=3, r=2, k=3, per-case formulas)")
def test_a1_square_family():
    start = time.perf_counter()
    c = color_square_multipartite(3, 2)
    assert (c.graph.vertex_count, c.graph.edge_count) == (18, 144)
    report = verify_rck(*c, 3, params=c.params)
    assert report.verdict
    formulas = {case: case_lower_bound(case, 3, 2) for case in PairCase
                if case is not PairCase.REMAINDER_PAIR}
    assert formulas == {
        PairCase.SAME_PART: 16,
        PairCase.SAME_LAYER_GROUP: 3,
        PairCase.SAME_SUPER_GROUP: 7,
        PairCase.CROSS_GROUP_ALIGNED: 7,
        PairCase.CROSS_GROUP_GENERAL: 7,
    }
    for case, bound in formulas.items():
        assert report.per_case[case.value] >= bound, case
    assert time.perf_counter() - start < 5


def _construct_complete(capsys, n, k):
    assert main(["construct", "--family", "complete", "--n", str(n), "--k", str(k)]) == 0
    return io.decode(capsys.readouterr().out)


@pytest.mark.criterion("A2 complete graph K_n, n >= f(k), at n=18,k=2 and n=27,k=3 with 2 colours")
def test_a2_complete_graph(capsys):
    start = time.perf_counter()
    row = f_of_k(3)
    assert (row.r0, row.ell0, row.f_k) == (3, 3, 27)
    for n, k in [(18, 2), (27, 3)]:
        doc = _construct_complete(capsys, n, k)
        assert doc.graph.vertex_count == n
        assert doc.coloring.color_count == 2 and doc.coloring.colors_used() == {1, 2}
        assert verify_rck(doc.graph, doc.coloring, k).verdict, (n, k)
    assert time.perf_counter() - start < 30


@pytest.mark.criterion("A3 remainder family (ell=9, r=2, p=1, n=19) at k=2")
def test_a3_remainder():
    start = time.perf_counter()
    c = color_with_remainder_part(9, 2, 1)
    assert c.graph.vertex_count == 19
    assert verify_rck(*c, 2).verdict
    assert time.perf_counter() - start < 10


@pytest.mark.criterion("A4 general family, ell=10..16, r=2 at k=2, v-u reading recorded")
def test_a4_general():
    passing = {}
    for rule in VU_RULES:
        passing[rule] = all(
            verify_rck(*color_general_multipartite(ell, 2, rule), 2).verdict
            for ell in range(10, 17))
    assert any(passing.values()), "no reading of the v-u rule verifies"
    for ell in range(10, 17):
        c = color_general_multipartite(ell, 2)
        report = verify_rck(*c, 2, meta=c.meta)
        assert report.verdict, ell
        assert report.to_dict()["meta"]["vu_rule"] == "block"
    assert passing["block"]


@pytest.mark.criterion("A5 verifier cross-validation (64 K4 2-colourings, 200 random 3-colourings)")
def test_a5_cross_validation():
    start = time.perf_counter()
    g = complete_graph(4)
    for colors in itertools.product((1, 2), repeat=6):
        c = EdgeColoring(g, dict(zip(g.edges, colors)), 2)
        table = exhaustive_pair_table(g, c)
        for u, v in itertools.combinations(range(4), 2):
            exact = max_disjoint_rainbow_paths(g, c, u, v)[0]
            assert count_disjoint_two_color(g, c, u, v) == exact == table[u, v]
    rng = random.Random(20260101)
    for _ in range(200):
        g, c = random_instance(rng, 6, 3, rng.uniform(0.4, 0.9))
        table = exhaustive_pair_table(g, c)
        for u, v in itertools.combinations(range(6), 2):
            assert max_disjoint_rainbow_paths(g, c, u, v)[0] == table[u, v]
    assert time.perf_counter() - start < 60


@pytest.mark.criterion("A6 oracle ground truths (K_n, paths, C_4)")
def test_a6_oracle():
    for n in (3, 4, 5):
        assert exact_rck(complete_graph(n), 1, 3).rck == 1
    for m in (1, 2, 3, 4):
        assert exact_rck(path_graph(m), 1, m).rck == m
    assert exact_rck(cycle_graph(4), 2, 4).rck == 4


@pytest.mark.criterion("A7 bounds table, crossover k=8, ratios < 1, ell0 forms agree to 1e6")
def test_a7_bounds():
    start = time.perf_counter()
    assert f_of_k(2).f_k == 18
    assert f_of_k(8).f_k == 64 < 81 == f_of_k(8).chartrand
    assert f_of_k(9).f_k == 80 < 100 == f_of_k(9).chartrand
    assert crossover(bounds_table(2, 10)) == 8
    for k in (10 ** 3, 10 ** 4, 10 ** 6):
        row = f_of_k(k)
        assert row.f_k ** 2 < k ** 3
        assert row.ratio < 1
    assert ell0_form_disagreements(10 ** 6) == []
    assert time.perf_counter() - start < 30


@pytest.mark.criterion("A8 property suites (path length, certificates, reference edges, degeneracy, monotonicity)")
def test_a8_properties():
    rng = random.Random(8)
    for _ in range(30):
        g, c = random_instance(rng, 7, rng.randint(1, 4), 0.8)
        for u, v in itertools.combinations(range(7), 2):
            assert all(len(p) - 1 <= c.color_count for p in rainbow_paths_between(g, c, u, v))

    for _ in range(10):
        g, c = random_instance(rng, 6, rng.randint(2, 3), 0.8)
        report = verify_rck(g, c, 1, want_certificates=True)
        for cert in report.certificates:
            assert check_certificate(g, c, cert)
            assert len(cert) == report.count(cert.u, cert.v)
            text = json.dumps(cert.to_dict())
            assert type(cert).from_dict(json.loads(text)) == cert
            for bad in mutations(cert, 6):
                assert bool(check_certificate(g, c, bad)) == valid_family(g, c, bad)

    assert reference_edge_agreement(color_square_multipartite(3, 3))

    a, b = color_general_multipartite(9, 2), color_square_multipartite(3, 2)
    assert a.graph == b.graph and np.array_equal(a.coloring.matrix, b.coloring.matrix)

    for _ in range(20):
        g, c = random_instance(rng, 6, rng.randint(2, 4), 0.8)
        verdicts = [verify_rck(g, c, k).verdict for k in range(1, 7)]
        assert verdicts == sorted(verdicts, reverse=True)
