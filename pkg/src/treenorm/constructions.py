"""Generators for the named extremal tree families and the figure fixtures.

Numbering is fixed so that serialized output is reproducible: a family's
longest path comes first as ``0..d``, then any comet spine, then pendants.
"""
from __future__ import annotations

from typing import Callable

from treenorm.graph import Graph, add_edge


class _Builder:
    def __init__(self, first_free: int = 1) -> None:
        self.edges: list[tuple[int, int]] = []
        self.next = first_free

    def spine(self, length: int) -> None:
        """Path on vertices 0..length."""
        self.next = length + 1
        self.edges.extend((i, i + 1) for i in range(length))

    def pendants(self, at: int, count: int) -> None:
        for _ in range(count):
            self.edges.append((at, self.next))
            self.next += 1

    def comet(self, head: int, vertices: int, r: int) -> None:
        """Identify the head of an ``r``-comet on ``vertices`` vertices with ``head``.

        ``r <= 1`` puts every extra vertex directly on ``head``.
        """
        tail = head
        for _ in range(max(r, 1) - 1):
            self.edges.append((tail, self.next))
            tail = self.next
            self.next += 1
        self.pendants(tail, vertices - max(r, 1))

    def build(self) -> Graph:
        return Graph.from_edges(self.next, self.edges)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    b = _Builder()
    b.spine(n - 1)
    return b.build()


def star(n: int) -> Graph:
    if n < 2:
        raise ValueError("star needs n >= 2")
    b = _Builder()
    b.pendants(0, n - 1)
    return b.build()


def comet(n: int, r: int) -> Graph:
    """Path ``0..r-1`` with ``n - r`` pendants at ``r-1``; vertex 0 is the head."""
    if not 1 <= r <= n - 1:
        raise ValueError("comet needs 1 <= r <= n-1")
    b = _Builder()
    b.spine(r - 1)
    b.pendants(r - 1, n - r)
    return b.build()


def dumbbell(n: int, a: int, b: int) -> Graph:
    """Path on ``n-a-b`` vertices with ``a`` pendants at one end and ``b`` at the other.

    One pendant from each side extends the path, so the longest path is ``0..d``
    and ``dumbbell(n, 1, 1)`` is literally ``path(n)``.
    """
    core = n - a - b
    if a < 1 or b < 1 or core < 1:
        raise ValueError("dumbbell needs a, b >= 1 and n - a - b >= 1")
    d = core + 1
    bld = _Builder()
    bld.spine(d)
    bld.pendants(1, a - 1)
    bld.pendants(d - 1, b - 1)
    return bld.build()


def _comet_length(d: int, extra: int) -> int:
    return min(d // 2 - 1, extra)


def t_hat_is_degenerate(n: int, d: int) -> bool:
    """True when the middle comet would need ``r <= 0`` but vertices remain to attach."""
    return _comet_length(d, n - d - 1) <= 0 and n - d - 1 > 0


def t_hat(n: int, d: int, middle: int | None = None) -> Graph:
    """Path ``0..d`` with an ``r``-comet on ``n-d`` vertices headed at the middle vertex.

    ``r = min(d//2 - 1, n-d-1)``. The middle defaults to ``d // 2``; for odd
    ``d`` the other middle ``(d+1) // 2`` may be requested.
    """
    if not 2 <= d <= n - 1:
        raise ValueError("t_hat needs 2 <= d <= n-1")
    mid = d // 2 if middle is None else middle
    if mid not in (d // 2, (d + 1) // 2):
        raise ValueError("middle must be one of the middle vertices of the path")
    b = _Builder()
    b.spine(d)
    b.comet(mid, n - d, _comet_length(d, n - d - 1))
    return b.build()


def t_tilde(n: int, k: int, d: int, a: int, b: int, middle: int | None = None) -> Graph:
    """Dumbbell ``D(k+d-1, a, b)`` with an ``r``-comet on ``n-k-d+2`` vertices at its middle."""
    if k < 2 or a < 1 or b < 1 or a + b != k or d < 3 or n < k + d - 1:
        raise ValueError("t_tilde needs k >= 2, a, b >= 1, a + b = k, d >= 3, n >= k+d-1")
    if d == 3 and n > k + 2:
        # every vertex hung off a diameter-3 spine is peripheral
        raise ValueError("no tree of diameter 3 with k peripheral vertices has more than k+2 vertices")
    mid = d // 2 if middle is None else middle
    if mid not in (d // 2, (d + 1) // 2):
        raise ValueError("middle must be one of the middle vertices of the path")
    bld = _Builder()
    bld.spine(d)
    bld.pendants(1, a - 1)
    bld.pendants(d - 1, b - 1)
    bld.comet(mid, n - k - d + 2, _comet_length(d, n - k - d + 1))
    return bld.build()


def balanced_starlike(k: int, length: int) -> Graph:
    """``k`` paths of ``length`` edges sharing the endpoint 0; branch ``i`` is ``1+i*length ..``."""
    if k < 2 or length < 1:
        raise ValueError("balanced_starlike needs k >= 2 and length >= 1")
    edges = []
    for i in range(k):
        prev = 0
        for j in range(length):
            v = 1 + i * length + j
            edges.append((prev, v))
            prev = v
    return Graph.from_edges(1 + k * length, edges)


def s_tilde(n: int, k: int) -> Graph:
    """Balanced starlike tree with branches of length 3, plus ``n-3k-1`` pendants on vertex 1."""
    if k < 2 or n < 3 * k + 1:
        raise ValueError("s_tilde needs k >= 2 and n >= 3k+1")
    base = balanced_starlike(k, 3)
    extra = [(1, v) for v in range(base.n, n)]
    return Graph.from_edges(n, base.edges() + extra)


def s_hat(n: int) -> Graph:
    """Path ``0..4`` with ``n-5`` pendants at its middle vertex 2."""
    if n < 5:
        raise ValueError("s_hat needs n >= 5")
    b = _Builder()
    b.spine(4)
    b.pendants(2, n - 5)
    return b.build()


def middle_pendant_trees(n: int, d: int) -> list[Graph]:
    """Path ``0..d`` with ``n-d-1`` pendants split over its middle vertex or vertices.

    For even ``d`` this is a single tree; for odd ``d`` one tree per split
    ``(left, right)`` with ``left`` pendants on ``d//2`` and ``right`` on ``d//2 + 1``.
    """
    if not 2 <= d <= n - 1:
        raise ValueError("needs 2 <= d <= n-1")
    extra = n - d - 1
    lo, hi = d // 2, (d + 1) // 2
    out = []
    splits = [(extra, 0)] if lo == hi else [(extra - j, j) for j in range(extra + 1)]
    for left, right in splits:
        b = _Builder()
        b.spine(d)
        b.pendants(lo, left)
        b.pendants(hi, right)
        out.append(b.build())
    return out


# Figures, with the paper's v_i mapped to vertex i-1.
_FIG1_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (6, 7), (7, 5)]
_FIG2_EDGES = [(1, 2), (2, 3), (3, 4), (3, 5)]
# v11 and v12 are the unlabeled inner vertices joining {v1, v2} and {v3, v4}.
_FIG3_EDGES = [
    (9, 10), (9, 11), (10, 12), (11, 1), (11, 2),
    (9, 5), (9, 6), (10, 7), (10, 8), (12, 3), (12, 4),
]


def _from_paper(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


FIXTURES: dict[str, Callable[[], Graph]] = {
    "fig1": lambda: _from_paper(7, _FIG1_EDGES),
    "fig2_tree": lambda: _from_paper(5, _FIG2_EDGES),
    "fig2_plus_edge": lambda: add_edge(_from_paper(5, _FIG2_EDGES), 0, 4),
    "fig3": lambda: _from_paper(12, _FIG3_EDGES),
}


def fixture(fig_id: str) -> Graph:
    try:
        return FIXTURES[fig_id]()
    except KeyError:
        raise ValueError(f"unknown fixture {fig_id!r}; choose from {sorted(FIXTURES)}") from None


FAMILIES = (
    "path", "star", "comet", "dumbbell", "balanced_starlike",
    "t_hat", "t_tilde", "s_tilde", "s_hat", "fixture",
)
