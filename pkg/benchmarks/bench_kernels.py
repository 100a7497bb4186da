"""Pure versus compiled kernel timings on the hot paths.

Run as a script:  python benchmarks/bench_kernels.py

Times three workloads at increasing scale: the exhaustive classify sweep
(every labeled graph on n vertices), batched all-pairs BFS on random
connected graphs, and the corona verifier.  Each cell is the best of three
repetitions.
"""

from __future__ import annotations

import random
import time

from hanggraph import _pykernel as pyk

try:
    from hanggraph import _ckernel as ck
except ImportError:
    ck = None

from hanggraph.corpus import pair_count


def best_of(repeats, fn):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def sweep(mod, n):
    def run():
        for bits in range(1 << pair_count(n)):
            mod.classify_bits(n, bits)

    return run


def rand_connected_masks(rng, n, p=0.3):
    while True:
        masks = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < p:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        if pyk.is_connected_masks(masks):
            return masks


def apsp_batch(mod, graphs):
    def run():
        for masks in graphs:
            mod.apsp(masks)

    return run


def corona_batch(mod, cases):
    def run():
        for mg, dg, mh in cases:
            mod.corona_verify(mg, dg, mh)

    return run


def row(label, pure_s, comp_s):
    if comp_s is None:
        print(f"{label:<34} {pure_s * 1e3:>10.1f} ms {'-':>12} {'-':>8}")
    else:
        print(
            f"{label:<34} {pure_s * 1e3:>10.1f} ms {comp_s * 1e3:>9.1f} ms "
            f"{pure_s / comp_s:>7.1f}x"
        )


def main():
    rng = random.Random(42)
    print(f"{'workload':<34} {'pure':>13} {'compiled':>12} {'speedup':>8}")

    for n in (5, 6):
        pure = best_of(3, sweep(pyk, n))
        comp = best_of(3, sweep(ck, n)) if ck else None
        row(f"classify sweep n={n} ({1 << pair_count(n)} graphs)", pure, comp)

    for n in (16, 32, 64):
        graphs = [rand_connected_masks(rng, n) for _ in range(200)]
        pure = best_of(3, apsp_batch(pyk, graphs))
        comp = best_of(3, apsp_batch(ck, graphs)) if ck else None
        row(f"apsp x200, n={n}", pure, comp)

    cases = []
    for _ in range(100):
        mg = rand_connected_masks(rng, rng.randint(3, 5), 0.5)
        mh = rand_connected_masks(rng, rng.randint(1, 4), 0.5)
        cases.append((mg, pyk.apsp(mg), mh))
    pure = best_of(3, corona_batch(pyk, cases))
    comp = best_of(3, corona_batch(ck, cases)) if ck else None
    row("corona_verify x100", pure, comp)

    if ck is None:
        print("\ncompiled kernel not built; set it up with pip install -e .")


if __name__ == "__main__":
    main()
