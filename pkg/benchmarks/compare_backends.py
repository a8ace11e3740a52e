"""Compiled kernels against the pure-Python fallback.

Kernel timings call both backend modules directly on the same inputs.
End-to-end timings run ``treespan bench`` in a subprocess per backend,
since the backend is picked once at import.

    python3 benchmarks/compare_backends.py --n 100000
"""

import argparse
import json
import os
import statistics
import subprocess
import sys
import time

import numpy as np

from treespan import kernels
from treespan.graph import SpanningTree
from treespan.outerplanar import outerplane_embed, random_outerplanar
from treespan.sdpartition import reduce_to_sd
from treespan.spartition import reduce_to_spartition


def _median_ms(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append((time.perf_counter() - start) * 1e3)
    return statistics.median(times)


def kernel_cases(n, seed):
    g = random_outerplanar(n, 1, seed)
    eu, ev = g.arrays
    py = kernels.available_backends()["python"]
    _, order, ceids, outer = py.outer_cycle(n, eu, ev)
    chords = np.flatnonzero(~outer)
    cyc = SpanningTree.from_edge_ids(g, np.flatnonzero(outer)[:-1])
    tu, tv = eu[cyc.edge_ids], ev[cyc.edge_ids]
    nt = np.flatnonzero(~cyc.in_tree)
    sd = reduce_to_sd(reduce_to_spartition(outerplane_embed(g), 6))
    ptr, adj = sd.tree.csr
    supply = sd.supply.astype(np.int64)
    root = int(sd.supply_nodes[0])
    return {
        "biconnected_edge_labels": (n, eu, ev),
        "outer_cycle": (n, eu, ev),
        "chord_faces": (order, ceids, eu[chords], ev[chords], chords),
        "root_tree": (n, tu, tv, 0),
        "tree_distances": (n, tu, tv, eu[nt], ev[nt]),
        "solve_sd": (sd.n, ptr, adj, supply, sd.value, root),
        "group_by": (n, np.concatenate([eu, ev])),
    }


def end_to_end(sizes, repeats):
    out = {}
    for name, flag in (("compiled", "0"), ("python", "1")):
        env = dict(os.environ, TREESPAN_PURE_PYTHON=flag)
        cmd = [sys.executable, "-m", "treespan.cli", "bench", "--json",
               "--sizes", ",".join(map(str, sizes)), "--repeats", str(repeats)]
        proc = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
        out[name] = json.loads(proc.stdout)
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=100_000)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--sizes", default="25000,50000,100000")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    if "compiled" not in backends:
        sys.exit("compiled extension not built; run: pip install -e . --no-build-isolation")

    print(f"kernels on a random maximal outerplanar graph, n={args.n}")
    print(f"{'kernel':26s} {'compiled ms':>12s} {'python ms':>12s} {'speedup':>8s}")
    for name, call in kernel_cases(args.n, args.seed).items():
        fast = _median_ms(lambda: getattr(backends["compiled"], name)(*call), args.repeats)
        slow = _median_ms(lambda: getattr(backends["python"], name)(*call), args.repeats)
        print(f"{name:26s} {fast:12.1f} {slow:12.1f} {slow / fast:8.1f}x")

    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"\nend to end, median of {args.repeats}")
    report = end_to_end(sizes, args.repeats)
    print(f"{'n':>8s} {'solve c':>9s} {'solve py':>9s} {'minstr c':>9s} {'minstr py':>10s}")
    c, p = report["compiled"], report["python"]
    for i, n in enumerate(sizes):
        print(f"{n:8d} {c['tree_t_spanner_ms'][i]:9.1f} {p['tree_t_spanner_ms'][i]:9.1f} "
              f"{c['min_stretch_ms'][i]:9.1f} {p['min_stretch_ms'][i]:10.1f}")


if __name__ == "__main__":
    main()
