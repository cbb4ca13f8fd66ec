"""Pure-Python kernels. Same signatures and results as ``_ckernels``."""
from __future__ import annotations

from itertools import product
from typing import Sequence


def all_pairs(n: int, indptr: Sequence[int], indices: Sequence[int]) -> list[int]:
    out = [-1] * (n * n)
    for s in range(n):
        base = s * n
        out[base + s] = 0
        frontier = [s]
        depth = 0
        while frontier:
            depth += 1
            nxt = []
            for v in frontier:
                for j in range(indptr[v], indptr[v + 1]):
                    u = indices[j]
                    if out[base + u] < 0:
                        out[base + u] = depth
                        nxt.append(u)
            frontier = nxt
    return out


def ecc_norm(
    n: int, indptr: Sequence[int], indices: Sequence[int]
) -> tuple[list[int], list[int]] | None:
    dist = all_pairs(n, indptr, indices)
    if -1 in dist:
        return None
    ecc = [max(dist[v * n:(v + 1) * n]) for v in range(n)]
    diameter = max(ecc)
    periphery = [v for v in range(n) if ecc[v] == diameter]
    norm = [min(dist[v * n + p] for p in periphery) for v in range(n)]
    return ecc, norm


def prufer_class_codes(n: int) -> list[str]:
    from treenorm.canon import canonical_code
    from treenorm.enumeration import prufer_decode

    if n <= 2:
        return [canonical_code(prufer_decode((), n))]
    codes = {canonical_code(prufer_decode(seq, n)) for seq in product(range(n), repeat=n - 2)}
    return sorted(codes)
