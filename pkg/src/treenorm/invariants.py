"""Per-vertex eccentricity, normality and span, with the derived vertex sets and sums."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from treenorm import _kernels
from treenorm.graph import (
    DisconnectedGraphError,
    Graph,
    all_pairs_distances,
    bfs_distances,
    require_tree,
)


@dataclass(frozen=True)
class InvariantProfile:
    ecc: tuple[int, ...]
    norm: tuple[int, ...]
    lam: tuple[int, ...]
    periphery: tuple[int, ...]
    center: tuple[int, ...]
    normality_center: tuple[int, ...]
    diameter: int
    radius: int
    ecc_sum: int
    norm_sum: int
    lambda_sum: int

    @classmethod
    def from_ecc_norm(cls, ecc: list[int], norm: list[int]) -> InvariantProfile:
        lam = [e - m for e, m in zip(ecc, norm)]
        diameter = max(ecc)
        radius = min(ecc)
        top = max(norm)
        return cls(
            ecc=tuple(ecc),
            norm=tuple(norm),
            lam=tuple(lam),
            periphery=tuple(v for v, e in enumerate(ecc) if e == diameter),
            center=tuple(v for v, e in enumerate(ecc) if e == radius),
            normality_center=tuple(v for v, m in enumerate(norm) if m == top),
            diameter=diameter,
            radius=radius,
            ecc_sum=sum(ecc),
            norm_sum=sum(norm),
            lambda_sum=sum(lam),
        )

    def to_json(self) -> dict:
        out = asdict(self)
        out["lambda"] = list(out.pop("lam"))
        for key, value in out.items():
            if isinstance(value, tuple):
                out[key] = list(value)
        order = ["ecc", "norm", "lambda", "periphery", "center", "normality_center",
                 "diameter", "radius", "ecc_sum", "norm_sum", "lambda_sum"]
        return {key: out[key] for key in order}


def profile(g: Graph) -> InvariantProfile:
    """Profile of a connected graph; for ``n = 1`` every quantity is 0."""
    indptr, indices = g.csr
    res = _kernels.ecc_norm(g.n, indptr, indices)
    if res is None:
        raise DisconnectedGraphError("invariants are only defined for connected graphs")
    return InvariantProfile.from_ecc_norm(*res)


def ecc_via_periphery(g: Graph) -> list[int]:
    """Largest distance from each vertex to a peripheral vertex.

    Equals the eccentricity on trees but not on general connected graphs.
    """
    dm = all_pairs_distances(g)
    ecc = [max(dm.row(v)) for v in range(g.n)]
    diameter = max(ecc)
    periphery = [v for v in range(g.n) if ecc[v] == diameter]
    return [max(dm[v, p] for p in periphery) for v in range(g.n)]


def diametral_pair(t: Graph) -> tuple[int, int]:
    """Ends of a longest path, found by two breadth-first searches."""
    require_tree(t)
    d0 = bfs_distances(t, 0)
    u = d0.index(max(d0))
    du = bfs_distances(t, u)
    return u, du.index(max(du))


def check_two_endpoint_property(t: Graph) -> bool:
    u, w = diametral_pair(t)
    du = bfs_distances(t, u)
    dw = bfs_distances(t, w)
    p = profile(t)
    return all(p.ecc[v] == max(du[v], dw[v]) for v in range(t.n))


def lambda_location_check(t: Graph) -> bool:
    """Span is largest exactly on the periphery and smallest (0 or 1 by parity) on the center."""
    require_tree(t)
    p = profile(t)
    top = max(p.lam)
    low = min(p.lam)
    argmax = tuple(v for v in range(t.n) if p.lam[v] == top)
    return (
        argmax == p.periphery
        and all(p.lam[c] == low for c in p.center)
        and low == p.diameter % 2
    )


def lambda_argmin(p: InvariantProfile) -> tuple[int, ...]:
    low = min(p.lam)
    return tuple(v for v, x in enumerate(p.lam) if x == low)
