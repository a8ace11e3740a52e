"""Wall-clock scaling of the solver on random maximal outerplanar graphs."""

import gc
import statistics
import time

from . import kernels
from .outerplanar import random_outerplanar
from .solver import min_stretch, tree_t_spanner


def _time_ms(fn):
    # like timeit: the cyclic collector stays off while the clock runs
    gc.collect()
    enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        fn()
        return (time.perf_counter() - start) * 1e3
    finally:
        if enabled:
            gc.enable()


def _ratios(values):
    return [b / a for a, b in zip(values, values[1:])]


def run_bench(sizes, repeats=5, seed=0):
    """Median timings per size plus the ratio between consecutive sizes.

    ``tree_t_spanner`` is queried at the graph's own minimum stretch, so
    every run builds a tree.  Sizes are interleaved within each repeat so
    that slow drift of the machine affects every size alike.
    """
    graphs, queried = [], []
    for n in sizes:
        graph = random_outerplanar(n, 1, seed)
        t, _ = min_stretch(graph)
        graphs.append(graph)
        queried.append(t)
    spanner = [[] for _ in sizes]
    minstretch = [[] for _ in sizes]
    for _ in range(repeats):
        for i, graph in enumerate(graphs):
            spanner[i].append(_time_ms(lambda: tree_t_spanner(graph, queried[i])))
            minstretch[i].append(_time_ms(lambda: min_stretch(graph)))
    spanner_ms = [statistics.median(x) for x in spanner]
    minstretch_ms = [statistics.median(x) for x in minstretch]
    return {
        "backend": kernels.BACKEND,
        "sizes": list(sizes),
        "t": queried,
        "tree_t_spanner_ms": spanner_ms,
        "min_stretch_ms": minstretch_ms,
        "tree_t_spanner_ratio": _ratios(spanner_ms),
        "min_stretch_ratio": _ratios(minstretch_ms),
    }
