"""Canonical codes of trees (centroid-rooted AHU encoding).

A rooted tree is encoded as ``"(" + sorted child codes + ")"``. A free tree is
encoded from its centroid. With two centroids the tree hangs from a virtual
root over the centroid edge, and the code is the sorted concatenation of the
two halves, each rooted at its centroid. Either way the code has ``2n``
symbols, and it is a single balanced block exactly when the centroid is unique.
"""
from __future__ import annotations

from treenorm.graph import Graph, GraphError, require_tree

CanonicalCode = str


def centroids(t: Graph) -> list[int]:
    require_tree(t)
    n = t.n
    parent = [-1] * n
    order = [0]
    for v in order:
        for u in t.adjacency[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    out = []
    for v in range(n):
        biggest = n - size[v]
        for u in t.adjacency[v]:
            if u != parent[v]:
                biggest = max(biggest, size[u])
        if 2 * biggest <= n:
            out.append(v)
    return out


def rooted_code(
    t: Graph, root: int, block: int | None = None, marked: int | None = None
) -> str:
    """AHU code of ``t`` rooted at ``root``, ignoring the branch through ``block``.

    A ``marked`` vertex is written with brackets instead of parentheses, which
    gives an invariant of the rooted tree with one distinguished vertex.
    """
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in t.adjacency[v]:
            if u != parent[v] and u != block:
                parent[u] = v
                order.append(u)
    codes: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(codes.pop(u) for u in t.adjacency[v] if u != parent[v] and u != block)
        if v == marked:
            codes[v] = "[" + "".join(kids) + "]"
        else:
            codes[v] = "(" + "".join(kids) + ")"
    return codes[root]


def canonical_code(t: Graph) -> CanonicalCode:
    cs = centroids(t)
    if len(cs) == 1:
        return rooted_code(t, cs[0])
    a, b = cs
    halves = sorted((rooted_code(t, a, block=b), rooted_code(t, b, block=a)))
    return halves[0] + halves[1]


def tree_from_code(code: CanonicalCode) -> Graph:
    """Decode a canonical code; vertices are numbered in preorder of the encoding."""
    edges: list[tuple[int, int]] = []
    stack: list[int] = []
    roots: list[int] = []
    n = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], n))
            else:
                roots.append(n)
            stack.append(n)
            n += 1
        elif ch == ")" and stack:
            stack.pop()
        else:
            raise GraphError(f"malformed canonical code {code!r}")
    if stack or not 1 <= len(roots) <= 2:
        raise GraphError(f"malformed canonical code {code!r}")
    if len(roots) == 2:
        edges.append((roots[0], roots[1]))
    return Graph.from_edges(n, edges)
