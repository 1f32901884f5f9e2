#!/usr/bin/env python3
"""Benchmark the oracle enumeration kernels: numba @njit vs pure numpy.

The exhaustive oracle sweeps 2**(n-k) side assignments per bipartition;
this times both backends on the grid family and a dense random planar
instance, checking agreement as it goes.

    python3 benchmarks/bench_oracle.py [--grid-k 4] [--planar-n 22] [--repeat 3]
"""

import argparse
import statistics
import time

from mimicknet import _kernels
from mimicknet.generate import random_planar_network
from mimicknet.lowerbound import gen_grid
from mimicknet.mincut import _edge_tables
from mimicknet.network import enumerate_bipartitions


def sweep(net, backend, bps):
    total = 0.0
    checksum = 0
    for bp in bps:
        nonterms, _, base, ones, twos = _edge_tables(net, bp)
        n_masks = 1 << len(nonterms)
        t0 = time.perf_counter()
        values = backend(n_masks, base, *ones, *twos)
        total += time.perf_counter() - t0
        checksum ^= int(values.min())
    return total, checksum


def bench(name, net, repeat):
    bps = enumerate_bipartitions(net.k)
    masks = 1 << (net.n - net.k)
    print(f"\n{name}: n={net.n} m={net.m} k={net.k}, "
          f"{len(bps)} bipartitions x {masks} masks")

    if _kernels.kernel_backend != "numba":
        print("  numba unavailable (or disabled via MIMICKNET_KERNEL); numpy only")
        jit = None
    else:
        jit = _kernels.cut_values
        sweep(net, jit, bps[:1])  # warm the JIT cache outside the timing

    rows = {}
    for label, fn in (("numba", jit), ("numpy", _kernels.cut_values_numpy)):
        if fn is None:
            continue
        times, sums = zip(*(sweep(net, fn, bps) for _ in range(repeat)))
        assert len(set(sums)) == 1
        rows[label] = (statistics.median(times), sums[0])

    for label, (seconds, checksum) in rows.items():
        print(f"  {label:>6}: {seconds:8.3f} s  (min-value checksum {checksum})")
    if len(rows) == 2:
        assert rows["numba"][1] == rows["numpy"][1], "backends disagree"
        speedup = rows["numpy"][0] / rows["numba"][0]
        print(f"  speedup: {speedup:.1f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid-k", type=int, default=4)
    ap.add_argument("--planar-n", type=int, default=22)
    ap.add_argument("--planar-k", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"active backend: {_kernels.kernel_backend} "
          f"(set MIMICKNET_KERNEL=numpy|numba to force)")
    bench(f"grid k={args.grid_k}", gen_grid(args.grid_k).network, args.repeat)
    net, _ = random_planar_network(args.planar_n, args.planar_k, seed=1)
    bench(f"random planar n={args.planar_n}", net, args.repeat)


if __name__ == "__main__":
    main()
