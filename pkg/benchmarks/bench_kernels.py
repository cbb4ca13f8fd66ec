"""Compare the compiled and pure-Python kernels on the workloads the verifier runs.

    python3 benchmarks/bench_kernels.py [--orders 11 12 13] [--prufer 7 8] [--repeat 3]
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Callable

from treenorm import _pykernels
from treenorm.canon import tree_from_code
from treenorm.enumeration import free_tree_codes

try:
    from treenorm import _ckernels
except ImportError:
    _ckernels = None


def best_of(repeat: int, fn: Callable[[], object]) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def profile_all(kernel, graphs) -> None:
    for n, indptr, indices in graphs:
        kernel.ecc_norm(n, indptr, indices)


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[11, 12, 13])
    ap.add_argument("--prufer", type=int, nargs="+", default=[7, 8])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    print(f"{'workload':<28}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for n in args.orders:
        graphs = [(t.n, *t.csr) for t in map(tree_from_code, free_tree_codes(n))]
        slow = best_of(args.repeat, lambda: profile_all(_pykernels, graphs))
        fast = best_of(args.repeat, lambda: profile_all(_ckernels, graphs))
        print(f"{f'profile {len(graphs)} trees n={n}':<28}{slow:>12.4f}{fast:>12.4f}{slow / fast:>9.1f}x")
    for n in args.prufer:
        slow = best_of(1, lambda: _pykernels.prufer_class_codes(n))
        fast = best_of(args.repeat, lambda: _ckernels.prufer_class_codes(n))
        print(f"{f'pruefer classes n={n}':<28}{slow:>12.4f}{fast:>12.4f}{slow / fast:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
