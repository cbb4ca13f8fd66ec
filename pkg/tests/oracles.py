"""Slow, obviously-correct reference computations used only by the tests.

Nothing here shares code with the package beyond the ``Graph`` container.
"""
from __future__ import annotations

from itertools import permutations

from hypothesis import strategies as st

from treenorm.graph import Graph

BIG = 10**9


def floyd_warshall(g: Graph) -> list[list[int]]:
    n = g.n
    d = [[0 if i == j else BIG for j in range(n)] for i in range(n)]
    for u in range(n):
        for v in g.adjacency[u]:
            d[u][v] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == BIG:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def reference_profile(g: Graph) -> dict:
    """Eccentricity, normality and span straight from their definitions."""
    d = floyd_warshall(g)
    n = g.n
    ecc = [max(row) for row in d]
    diam = max(ecc)
    periphery = [v for v in range(n) if ecc[v] == diam]
    norm = [min(d[v][p] for p in periphery) for v in range(n)]
    lam = [e - m for e, m in zip(ecc, norm)]
    return {"ecc": ecc, "norm": norm, "lam": lam, "periphery": periphery,
            "center": [v for v in range(n) if ecc[v] == min(ecc)],
            "norm_sum": sum(norm), "lambda_sum": sum(lam), "ecc_sum": sum(ecc)}


def isomorphic(a: Graph, b: Graph) -> bool:
    """Try every bijection; only for tiny graphs."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(map(len, a.adjacency)) != sorted(map(len, b.adjacency)):
        return False
    target = set(b.edges())
    ea = a.edges()
    for perm in permutations(range(a.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in target for u, v in ea):
            return True
    return False


def tree_from_parents(parents: list[int]) -> Graph:
    """Vertex ``i+1`` hangs off ``parents[i]`` (which must be ``<= i``)."""
    return Graph.from_edges(len(parents) + 1, [(p, i + 1) for i, p in enumerate(parents)])


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 14) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i)) for i in range(n - 1)]
    perm = draw(st.permutations(range(n)))
    return tree_from_parents(parents).relabel(perm)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    t = draw(trees(min_n, max_n))
    pairs = [(u, v) for u in range(t.n) for v in range(u + 1, t.n) if not t.has_edge(u, v)]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph.from_edges(t.n, t.edges() + extra)
