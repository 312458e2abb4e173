#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Covers the two hot loops: Groebner reduction (certification and
zero-scheme degrees) and fraction-free integer elimination (the pencil
classifications behind every jumping-line scan).  Results of the two
backends are checked for equality.  Usage:

    python benchmarks/bench_kernels.py
"""

import random
import time

from skewrank import catalog
from skewrank._kernels import backends
from skewrank.geometry import _bordered_pfaffians, default_covector
from skewrank.groebner import Ideal, buchberger, hilbert_function


def workloads():
    w = catalog.get("westwick").matrix
    drop = Ideal(w.vars, sorted({f for f in w.sub_pfaffians(8)
                                 if not f.is_zero()}, key=str))
    yield "rank-drop ideal, order 10, d=4", drop

    curve = Ideal(w.vars, sorted({str(f): f for f in
                                  _bordered_pfaffians(w, default_covector(10))}
                                 .values(), key=str))
    yield "section zero-scheme curve, d=4", curve

    sw = catalog.get("schwarzenberger").matrix
    plane = Ideal(sw.vars, sorted({str(f): f for f in
                                   _bordered_pfaffians(sw, default_covector(8))}
                                  .values(), key=str))
    yield "section zero scheme, d=3", plane


def bench_echelon(repeat=3):
    """Integer fraction-free elimination on pencil-solver-shaped systems."""
    rng = random.Random(42)
    systems = []
    for _ in range(60):
        m, n = 40, 32
        systems.append([[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)])
    print("\n== fraction-free echelon, 60 systems of 40 x 32")
    results = {}
    for name, mod in sorted(backends().items()):
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            out = [mod.echelon_int(s, 32)[1] for s in systems]
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        results[name] = (best, tuple(map(tuple, out)))
        print("  %-8s %8.3f s" % (name, best))
    if len({r[1] for r in results.values()}) != 1:
        raise SystemExit("backends disagree on echelon pivots")
    if "cython" in results and "python" in results:
        print("  speedup: %.2fx" % (results["python"][0] / results["cython"][0]))


def run(repeat=3):
    avail = backends()
    print("backends:", ", ".join(sorted(avail)))
    for label, ideal in workloads():
        print("\n== %s (%d generators)" % (label, len(ideal.generators)))
        results = {}
        for name in sorted(avail):
            best = None
            for _ in range(repeat):
                t0 = time.perf_counter()
                gb = buchberger(ideal, backend=name)
                hilbert_function(gb, 12)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            results[name] = (best, tuple(str(g) for g in gb.basis))
            print("  %-8s %8.3f s   (basis size %d)" % (name, best, len(gb.basis)))
        bases = {r[1] for r in results.values()}
        if len(bases) != 1:
            raise SystemExit("backends disagree on %s" % label)
        if "cython" in results and "python" in results:
            print("  speedup: %.2fx" % (results["python"][0] / results["cython"][0]))
    bench_echelon(repeat)


if __name__ == "__main__":
    run()
