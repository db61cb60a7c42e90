"""Compare the compiled kernels with the pure-Python fallbacks.

    python3 benchmarks/bench_kernels.py [--max-crossings 16] [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from pretzel_braid import _pykernels, kernels
from pretzel_braid.braid import word_from_seq
from pretzel_braid.diagram import pretzel_pd
from pretzel_braid.pretzel import Pretzel
from pretzel_braid.temperley_lieb import tl_basis


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_states(max_crossings: int, repeat: int) -> None:
    print(f"state histogram (backend: {kernels.BACKEND})")
    print(f"{'pretzel':<16}{'c':>4}{'compiled':>12}{'python':>12}{'contract':>12}")
    for c in range(6, max_crossings + 1, 2):
        p = Pretzel.of(c // 3, c // 3, c - 2 * (c // 3))
        pd = pretzel_pd(p)
        args = (pd.crossings, pd.n_edges)
        ref = _pykernels.contract_histogram(*args)
        t_c = best_of(lambda: kernels.state_histogram(*args), repeat)
        assert np.array_equal(kernels.state_histogram(*args), ref)
        if c <= 14:
            t_p = best_of(lambda: _pykernels.state_histogram(*args), 1)
            py = f"{t_p:12.4f}"
        else:
            py = f"{'(skipped)':>12}"
        t_k = best_of(lambda: _pykernels.contract_histogram(*args), repeat)
        print(f"{str(p):<16}{c:>4}{t_c:12.4f}{py}{t_k:12.4f}")


def bench_tl(repeat: int) -> None:
    print("\nTemperley-Lieb letter application, 40 letters")
    print(f"{'strands':<10}{'basis':>8}{'compiled':>12}{'numpy':>12}")
    rng = np.random.default_rng(0)
    for s in (4, 6, 8, 10):
        basis = tl_basis(s)
        letters = [int(g) * int(rng.choice([-1, 1])) for g in rng.integers(1, s, size=40)]
        w = word_from_seq(letters, s)

        def drive(apply):
            V = np.zeros((len(basis), 1), dtype=np.int64)
            V[basis.identity, 0] = 1
            for m in w.letters:
                V = np.ascontiguousarray(apply(V, basis.targets[abs(m)], basis.loops[abs(m)], m > 0))
            return V

        assert np.array_equal(drive(kernels.tl_apply), drive(_pykernels.tl_apply))
        t_c = best_of(lambda: drive(kernels.tl_apply), repeat)
        t_p = best_of(lambda: drive(_pykernels.tl_apply), repeat)
        print(f"{s:<10}{len(basis):>8}{t_c:12.4f}{t_p:12.4f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        print("warning: compiled extension not built; both columns use Python")
    bench_states(args.max_crossings, args.repeat)
    bench_tl(args.repeat)


if __name__ == "__main__":
    main()
