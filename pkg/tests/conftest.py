import random

import pytest

from rainbowk.graph import EdgeColoring, Graph

_criteria: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in getattr(report, "criterion", ()):
        _criteria.append((mark, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criterion = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(m):
    return Graph(m + 1, [(i, i + 1) for i in range(m)])


def cycle_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def colored(g, colors, color_count=None):
    """Colour ``g.edges`` in order with ``colors``."""
    colors = list(colors)
    return EdgeColoring(g, dict(zip(g.edges, colors)), color_count or max(colors))


def random_instance(rng: random.Random, n: int, colors: int, edge_prob: float = 0.6):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob]
    g = Graph(n, edges)
    return g, EdgeColoring(g, {e: rng.randint(1, colors) for e in edges}, colors)


@pytest.fixture
def k4_example():
    """K_4 with colour 1 on {12, 34, 13, 24} and colour 2 on {14, 23} (1-based)."""
    g = complete_graph(4)
    ones = {(0, 1), (2, 3), (0, 2), (1, 3)}
    return g, EdgeColoring(g, {e: 1 if e in ones else 2 for e in g.edges}, 2)
