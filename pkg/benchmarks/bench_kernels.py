"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row reports the best of ``--repeat`` runs per backend and checks that
both backends return identical results.
"""

import argparse
import itertools
import random
import time

import numpy as np

from rainbowk import kernels
from rainbowk.constructions import color_complete, color_general_multipartite
from rainbowk.graph import EdgeColoring, Graph


def best_of(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def random_matrix(n, colors, seed):
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.7]
    g = Graph(n, edges)
    return EdgeColoring(g, {e: rng.randint(1, colors) for e in edges}, colors).matrix


def cases():
    for ell in (25, 49):
        c = color_general_multipartite(ell, 4)
        yield f"two_color_table  general ell={ell} r=4 (n={c.graph.vertex_count})", \
            "two_color_table", (c.coloring.matrix,)
    c = color_complete(1000, 30)
    yield f"two_color_table  complete n=1000 k=30", "two_color_table", (c.coloring.matrix,)
    for n, colors in ((12, 5), (14, 6), (16, 6)):
        mat = random_matrix(n, colors, seed=n * colors)
        yield f"rainbow_paths    random n={n} colours={colors}", \
            "rainbow_paths", (mat, 0, n - 1, colors)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if "cython" not in kernels.BACKENDS:
        raise SystemExit("compiled backend not built; run pip install -e . --no-build-isolation")
    print(f"{'case':<48} {'cython s':>10} {'python s':>10} {'speedup':>9}")
    for name, kernel, call_args in cases():
        fast, a = best_of(lambda: getattr(kernels, kernel)(*call_args, backend="cython"), args.repeat)
        slow, b = best_of(lambda: getattr(kernels, kernel)(*call_args, backend="python"), args.repeat)
        same = np.array_equal(a, b) if isinstance(a, np.ndarray) else a == b
        assert same, f"backends disagree on {name}"
        print(f"{name:<48} {fast:>10.4f} {slow:>10.4f} {slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
