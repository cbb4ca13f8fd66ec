"""Immutable simple undirected graphs, the edge-list text format and hop distances."""
from __future__ import annotations

import re
from array import array
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, TextIO

from treenorm import _kernels

INF = -1  # sentinel for unreachable vertices in raw distance rows


class GraphError(ValueError):
    """Invalid graph, or an operation whose precondition on the graph fails."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DisconnectedGraphError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the strictly increasing tuple of neighbours of ``v``.
    Instances are validated on construction and never mutated; use
    :meth:`from_edges` to build one from an edge iterable.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length differs from vertex count")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if u <= prev:
                    raise GraphError(f"neighbours of {v} not strictly increasing")
                prev = u
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self._neighbour_sets[u]:
                    raise GraphError(f"adjacency not symmetric for edge {v}-{u}")

    @cached_property
    def _neighbour_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._neighbour_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def csr(self) -> tuple[array, array]:
        indptr = array("i", [0])
        indices = array("i")
        for nbrs in self.adjacency:
            indices.extend(nbrs)
            indptr.append(len(indices))
        return indptr, indices

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...] = field(repr=False)

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.d[u][v]

    def row(self, v: int) -> tuple[int, ...]:
        return self.d[v]

    def max(self) -> int:
        return max(max(r) for r in self.d)


_COUNT_LINE = re.compile(r"[0-9]+")
_EDGE_LINE = re.compile(r"([0-9]+) ([0-9]+)")


def parse_edge_list(text: str | TextIO) -> Graph:
    """Parse the edge-list format: optional ``#`` comments, ``n``, then ``u v`` lines."""
    if not isinstance(text, str):
        text = text.read()
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        if n is None:
            if not _COUNT_LINE.fullmatch(line):
                raise ParseError(f"expected vertex count, got {line!r}", lineno)
            n = int(line)
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
            continue
        m = _EDGE_LINE.fullmatch(line)
        if m is None:
            raise ParseError(f"malformed edge line {line!r} (expected 'u v')", lineno)
        u, v = int(m[1]), int(m[2])
        if u >= n or v >= n:
            raise ParseError(f"vertex index out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing vertex count line")
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop counts from ``source``; unreachable vertices get ``math.inf``."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range")
    dist: list[float] = [float("inf")] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for u in g.adjacency[v]:
            if dist[u] > dv:
                dist[u] = dv
                queue.append(u)
    return [int(x) if x != float("inf") else x for x in dist]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    indptr, indices = g.csr
    flat = _kernels.all_pairs(g.n, indptr, indices)
    if INF in flat:
        raise DisconnectedGraphError("graph is disconnected")
    n = g.n
    return DistanceMatrix(n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        for u in g.adjacency[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and is_connected(g)


def require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise NotATreeError("input graph is not a tree")


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"self-loop at {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"edge {u}-{v} out of range")
    if g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} already present")
    return Graph.from_edges(g.n, g.edges() + [(min(u, v), max(u, v))])


def non_edges(g: Graph) -> Iterator[tuple[int, int]]:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                yield u, v
