"""Exhaustive generation of unlabeled trees and a labeled-tree oracle.

Free trees are built directly in canonical form: a unicentroidal tree is a
root whose branches all have fewer than ``n/2`` vertices, a bicentroidal tree
is an unordered pair of rooted trees on ``n/2`` vertices each. Rooted trees
are in turn sorted multisets of smaller rooted trees, so every isomorphism
class comes out exactly once, already carrying its canonical code.
"""
from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from treenorm import _kernels
from treenorm.canon import CanonicalCode, tree_from_code
from treenorm.graph import Graph

MAX_ORDER = 20
MAX_PRUFER_ORDER = 9


@lru_cache(maxsize=None)
def _rooted_codes(size: int) -> tuple[str, ...]:
    """Canonical codes of all rooted trees with ``size`` vertices, sorted."""
    return tuple(sorted("(" + body + ")" for body in _forests(size - 1, size - 1)))


@lru_cache(maxsize=None)
def _candidates(max_size: int) -> tuple[tuple[str, int], ...]:
    pool = [(c, s) for s in range(1, max_size + 1) for c in _rooted_codes(s)]
    pool.sort()
    return tuple(pool)


@lru_cache(maxsize=None)
def _forests(total: int, max_size: int) -> tuple[str, ...]:
    """Concatenations of sorted multisets of rooted trees (each ``<= max_size``) with ``total`` vertices."""
    return _multisets(0, total, max_size)


@lru_cache(maxsize=None)
def _multisets(start: int, total: int, max_size: int) -> tuple[str, ...]:
    if total == 0:
        return ("",)
    pool = _candidates(max_size)
    out: list[str] = []
    for i in range(start, len(pool)):
        code, size = pool[i]
        if size <= total:
            out.extend(code + rest for rest in _multisets(i, total - size, max_size))
    return tuple(out)


def free_tree_codes(n: int) -> list[CanonicalCode]:
    """Canonical codes of all unlabeled trees on ``n`` vertices, ascending."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
    codes = ["(" + body + ")" for body in _forests(n - 1, (n - 1) // 2)]
    if n % 2 == 0:
        halves = _rooted_codes(n // 2)
        codes.extend(a + b for i, a in enumerate(halves) for b in halves[i:])
    codes.sort()
    return codes


def free_trees(n: int) -> Iterator[Graph]:
    """Every tree on ``n`` vertices up to isomorphism, ordered by canonical code."""
    for code in free_tree_codes(n):
        yield tree_from_code(code)


def free_trees_filtered(
    n: int, diameter: int | None = None, peripheral_count: int | None = None
) -> Iterator[Graph]:
    from treenorm.invariants import profile

    if diameter is not None and not 2 <= diameter <= n - 1:
        raise ValueError(f"diameter filter must lie in 2..{n - 1}")
    if peripheral_count is not None and peripheral_count < 2:
        raise ValueError("peripheral count filter must be at least 2")
    for t in free_trees(n):
        p = profile(t)
        if diameter is not None and p.diameter != diameter:
            continue
        if peripheral_count is not None and len(p.periphery) != peripheral_count:
            continue
        yield t


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    if n == 1:
        return Graph(1, ((),))
    if len(seq) != n - 2 or any(not 0 <= x < n for x in seq):
        raise ValueError("Pruefer sequence must have n-2 entries in 0..n-1")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def labeled_trees_prufer(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labeled trees on ``0..n-1``, one per Pruefer sequence."""
    if not 1 <= n <= MAX_PRUFER_ORDER:
        raise ValueError(f"labeled enumeration is limited to 1 <= n <= {MAX_PRUFER_ORDER}")
    if n <= 2:
        yield prufer_decode((), n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def prufer_class_codes(n: int) -> list[CanonicalCode]:
    """Canonical codes of the labeled trees on ``n`` vertices, deduplicated.

    Runs in the compiled kernel when available; an independent route to the
    same set that :func:`free_tree_codes` produces.
    """
    if not 1 <= n <= MAX_PRUFER_ORDER:
        raise ValueError(f"labeled enumeration is limited to 1 <= n <= {MAX_PRUFER_ORDER}")
    return _kernels.prufer_class_codes(n)
