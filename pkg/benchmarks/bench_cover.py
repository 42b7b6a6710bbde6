#!/usr/bin/env python3
"""Benchmark the two hitting-set kernels (compiled extension vs pure Python)
on the searches that dominate this package's runtime.

Usage: python benchmarks/bench_cover.py [--repeat N]
"""
from __future__ import annotations

import argparse
import random
import time

from mixdim.bounds import edge_side_sets
from mixdim.cover import CoverInstance, available_backends, min_hitting_set
from mixdim.dims import mixed_metric_dimension, pair_cover_instance
from mixdim.families import generate_named
from mixdim.graphs import distances


def _instances():
    yield "torus(6,6) mixed pairs", pair_cover_instance(distances(generate_named("torus", 6, 6)))
    yield "torus(5,5) mixed pairs", pair_cover_instance(distances(generate_named("torus", 5, 5)))
    g = generate_named("johnson", 9, 2)
    side = edge_side_sets(distances(g))
    yield "johnson(9,2) side sets", CoverInstance.build(
        g.n, list(side.closer_to_u) + list(side.closer_to_v)
    )
    g = generate_named("gq24")
    yield "gq24 mixed pairs", pair_cover_instance(distances(g))
    rng = random.Random(2023)
    edges = set()
    while len(edges) < 200:
        u, v = rng.sample(range(44), 2)
        edges.add((min(u, v), max(u, v)))
    yield "random vertex cover n=44 m=200", CoverInstance.build(44, [set(e) for e in edges])


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("note: compiled kernel not built, benchmarking pure Python only")

    header = f"{'instance':38} {'sets':>6} " + " ".join(f"{b:>12}" for b in backends)
    print(header + ("      speedup" if len(backends) == 2 else ""))
    print("-" * len(header))
    for name, inst in _instances():
        times = {}
        sizes = set()
        for backend in backends:
            t, res = _time(lambda b=backend: min_hitting_set(inst, backend=b), args.repeat)
            times[backend] = t
            sizes.add((res.status, res.size, res.witness))
        assert len(sizes) == 1, f"backends disagree on {name}"
        row = f"{name:38} {inst.num_sets:>6} " + " ".join(f"{times[b]*1e3:>10.1f}ms" for b in backends)
        if len(backends) == 2:
            row += f" {times['python'] / times['compiled']:>9.1f}x"
        print(row)

    # end-to-end: the exact mixed dimension of the 6x6 torus
    g = generate_named("torus", 6, 6)
    print()
    for backend in backends:
        import mixdim.cover as cover

        t0 = time.perf_counter()
        # route every solve through one backend by monkeypatching the default
        orig = cover._kernel
        cover._kernel = lambda u, b, _orig=orig, _be=backend: _orig(u, _be)
        try:
            value, _ = mixed_metric_dimension(g)
        finally:
            cover._kernel = orig
        print(f"mixed dimension of torus(6,6) = {value} via {backend}: "
              f"{time.perf_counter() - t0:.3f}s")


if __name__ == "__main__":
    main()
