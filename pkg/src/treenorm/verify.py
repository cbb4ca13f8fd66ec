"""Exhaustive extremal scans, theorem verification and the edge-addition anomaly search.

A scan reduces the tree stream to ``(optimum, witness codes, count)``. The
reduction is associative and commutative, so the stream can be cut into
chunks and profiled in worker processes without changing the result.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from treenorm import constructions as cons
from treenorm import formulas
from treenorm.canon import canonical_code, rooted_code, tree_from_code
from treenorm.enumeration import free_tree_codes
from treenorm.graph import Graph, add_edge, non_edges, serialize_edge_list
from treenorm.invariants import (
    InvariantProfile,
    check_two_endpoint_property,
    ecc_via_periphery,
    lambda_location_check,
    profile,
)

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
OBJECTIVES = ("norm_sum", "lambda_sum", "ecc_sum")
DIRECTIONS = ("max", "min")

# How a predicted witness set is compared with the exhaustive one.
MEMBERSHIP = "membership"  # "maximized by X": every predicted tree is optimal
EQUALITY = "equality"      # "with equality if and only if X": same set
SUBSET = "subset"          # "maximized by some member of X": every optimum lies in X


@dataclass(frozen=True)
class ScannedTree:
    code: str
    graph: Graph
    profile: InvariantProfile


def _profile_codes(codes: Sequence[str]) -> list[ScannedTree]:
    out = []
    for code in codes:
        g = tree_from_code(code)
        out.append(ScannedTree(code, g, profile(g)))
    return out


def _chunks(items: Sequence, parts: int) -> list[Sequence]:
    size = -(-len(items) // parts)
    return [items[i:i + size] for i in range(0, len(items), size)]


@lru_cache(maxsize=4)
def _scanned_cached(n: int) -> tuple[ScannedTree, ...]:
    return tuple(_profile_codes(free_tree_codes(n)))


def scanned_trees(n: int, jobs: int = 1) -> tuple[ScannedTree, ...]:
    """All trees of order ``n`` with their profiles, in canonical-code order."""
    if jobs <= 1:
        return _scanned_cached(n)
    codes = free_tree_codes(n)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_profile_codes, _chunks(codes, jobs))
    return tuple(st for part in parts for st in part)


@dataclass(frozen=True)
class Partial:
    optimum: int | None
    witnesses: frozenset[str]
    count: int


EMPTY = Partial(None, frozenset(), 0)


def merge(a: Partial, b: Partial, direction: str) -> Partial:
    if a.optimum is None:
        return replace(b, count=a.count + b.count)
    if b.optimum is None:
        return replace(a, count=a.count + b.count)
    if a.optimum == b.optimum:
        return Partial(a.optimum, a.witnesses | b.witnesses, a.count + b.count)
    better = max if direction == "max" else min
    win = a if better(a.optimum, b.optimum) == a.optimum else b
    return Partial(win.optimum, win.witnesses, a.count + b.count)


def reduce_stream(trees: Iterable[ScannedTree], objective: str, direction: str) -> Partial:
    acc = EMPTY
    for st in trees:
        value = getattr(st.profile, objective)
        acc = merge(acc, Partial(value, frozenset([st.code]), 1), direction)
    return acc


def _matches(st: ScannedTree, diameter: int | None, peripheral_count: int | None) -> bool:
    if diameter is not None and st.profile.diameter != diameter:
        return False
    return peripheral_count is None or len(st.profile.periphery) == peripheral_count


@dataclass(frozen=True)
class ExtremalReport:
    objective: str
    direction: str
    n: int
    diameter: int | None
    peripheral_count: int | None
    trees_scanned: int
    optimum: int | None
    witnesses: tuple[str, ...]
    theorem: str | None = None
    prediction: dict | None = None
    predicted_witnesses: tuple[str, ...] | None = None
    semantics: str | None = None
    discrepancy: bool = False
    detail: str = ""
    extras: dict = field(default_factory=dict)

    @property
    def vacuous(self) -> bool:
        return self.trees_scanned == 0

    def to_json(self) -> dict:
        return {
            "kind": "extremal",
            "theorem": self.theorem,
            "objective": self.objective,
            "direction": self.direction,
            "constraints": {
                "n": self.n,
                "diameter": self.diameter,
                "peripheral_count": self.peripheral_count,
            },
            "trees_scanned": self.trees_scanned,
            "vacuous": self.vacuous,
            "optimum": self.optimum,
            "witnesses": [
                {"code": c, "edge_list": serialize_edge_list(tree_from_code(c))}
                for c in self.witnesses
            ],
            "prediction": self.prediction,
            "predicted_witnesses": (
                list(self.predicted_witnesses) if self.predicted_witnesses is not None else None
            ),
            "semantics": self.semantics,
            "discrepancy": self.discrepancy,
            "detail": self.detail,
            "extras": self.extras,
        }


@dataclass(frozen=True)
class PerTreeReport:
    theorem: str
    n: int
    trees_checked: int
    failures: tuple[str, ...]
    detail: str = ""

    @property
    def discrepancy(self) -> bool:
        return bool(self.failures)

    def to_json(self) -> dict:
        return {
            "kind": "per_tree",
            "theorem": self.theorem,
            "n": self.n,
            "trees_checked": self.trees_checked,
            "failures": list(self.failures),
            "discrepancy": self.discrepancy,
            "detail": self.detail,
        }


def extremal_scan(
    n: int,
    objective: str,
    direction: str,
    diameter: int | None = None,
    peripheral_count: int | None = None,
    jobs: int = 1,
) -> ExtremalReport:
    """Exact optimum of ``objective`` over trees of order ``n`` and every tree attaining it."""
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}")
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    trees = [st for st in scanned_trees(n, jobs) if _matches(st, diameter, peripheral_count)]
    acc = reduce_stream(trees, objective, direction)
    return ExtremalReport(
        objective=objective,
        direction=direction,
        n=n,
        diameter=diameter,
        peripheral_count=peripheral_count,
        trees_scanned=acc.count,
        optimum=acc.optimum,
        witnesses=tuple(sorted(acc.witnesses)),
        detail="vacuous: no tree satisfies the constraints" if acc.count == 0 else "",
    )


def judge(
    report: ExtremalReport,
    theorem: str,
    value: int | None,
    source: str,
    predicted: Iterable[str] | None = None,
    semantics: str | None = None,
    extras: dict | None = None,
    branch: str | None = None,
) -> ExtremalReport:
    """Attach a prediction and decide whether the exhaustive result contradicts it."""
    pred_codes = tuple(sorted(set(predicted))) if predicted is not None else None
    problems = []
    if report.vacuous:
        problems.append("no tree satisfies the constraints but a prediction was made")
    else:
        if value is not None and report.optimum != value:
            problems.append(f"optimum {report.optimum} != predicted {value}")
        if pred_codes is not None:
            found, expected = set(report.witnesses), set(pred_codes)
            if semantics == MEMBERSHIP and not expected <= found:
                problems.append(f"{len(expected - found)} predicted tree(s) not optimal")
            elif semantics == EQUALITY and found != expected:
                problems.append(
                    f"witness set differs: {len(found - expected)} unpredicted, "
                    f"{len(expected - found)} missing"
                )
            elif semantics == SUBSET and not found <= expected:
                problems.append(f"{len(found - expected)} optimal tree(s) outside the predicted family")
    prediction = {"source": source, "value": value}
    if branch is not None:
        prediction["branch"] = branch
    return replace(
        report,
        theorem=theorem,
        prediction=prediction,
        predicted_witnesses=pred_codes,
        semantics=semantics,
        discrepancy=bool(problems),
        detail="; ".join(problems) if problems else "consistent",
        extras=extras or {},
    )


# -- theorem runners -------------------------------------------------------

def _code(g: Graph) -> str:
    return canonical_code(g)


def _norm_given_d(n: int, jobs: int) -> list[ExtremalReport]:
    out = []
    for d in range(2, n):
        rep = extremal_scan(n, "norm_sum", "max", diameter=d, jobs=jobs)
        tree = cons.t_hat(n, d)
        value = profile(tree).norm_sum
        formula = formulas.eval_norm_t_hat(n, d)
        extras = {
            "formula": {
                "branch": formula.branch,
                "applies": formula.applies,
                "value": formula.value,
                "matches_construction": formula.value == value if formula.applies else None,
            },
            "degenerate_comet": cons.t_hat_is_degenerate(n, d),
        }
        if d % 2 == 1:
            extras["other_middle_norm_sum"] = profile(cons.t_hat(n, d, middle=(d + 1) // 2)).norm_sum
        out.append(judge(rep, "thm-norm-given-d", value, "construction:t_hat",
                         [_code(tree)], MEMBERSHIP, extras))
    return out


def _norm_global(n: int, jobs: int) -> list[ExtremalReport]:
    rep = extremal_scan(n, "norm_sum", "max", jobs=jobs)
    table_d = formulas.optimal_diameters(n)
    predicted = [_code(cons.t_hat(n, d)) for d in table_d]
    found_d = sorted({profile(tree_from_code(c)).diameter for c in rep.witnesses})
    extras = {"table_diameters": list(table_d), "witness_diameters": found_d}
    return [judge(rep, "thm-norm-global", formulas.max_norm_bound(n), "formula:max_norm_bound",
                  predicted, EQUALITY, extras)]


def _t_tilde_valid(n: int, k: int, d: int) -> bool:
    return d >= 3 and n >= k + d - 1 and not (d == 3 and n > k + 2)


def _norm_nkd(n: int, jobs: int) -> list[ExtremalReport]:
    out = []
    for k in range(2, n):
        for d in range(3, n):
            if not _t_tilde_valid(n, k, d):
                continue
            rep = extremal_scan(n, "norm_sum", "max", diameter=d, peripheral_count=k, jobs=jobs)
            split_values = {}
            codes = []
            malformed = []
            for a in range(1, k // 2 + 1):
                tree = cons.t_tilde(n, k, d, a, k - a)
                p = profile(tree)
                if p.diameter != d or len(p.periphery) != k:
                    malformed.append(a)
                split_values[f"{a},{k - a}"] = p.norm_sum
                codes.append(_code(tree))
            values = set(split_values.values())
            value = min(values)
            extras = {"split_values": split_values, "splits_agree": len(values) == 1}
            r = judge(rep, "thm-norm-nkd", value, "construction:t_tilde", codes, MEMBERSHIP, extras)
            if malformed or len(values) != 1:
                note = []
                if malformed:
                    note.append(f"construction lacks diameter {d} / {k} peripheral for a in {malformed}")
                if len(values) != 1:
                    note.append("splits give different values")
                r = replace(r, discrepancy=True, detail="; ".join([r.detail] + note))
            out.append(r)
    return out


def _norm_nkd_range(n: int, jobs: int) -> list[ExtremalReport]:
    out = []
    trees = scanned_trees(n, jobs)
    for k in range(2, n - 1):
        rep = extremal_scan(n, "norm_sum", "max", peripheral_count=k, jobs=jobs)
        lo, hi = formulas.t_tilde_optimal_d_range(n, k)
        per_d: dict[int, int] = {}
        for st in trees:
            if len(st.profile.periphery) == k:
                d = st.profile.diameter
                per_d[d] = max(per_d.get(d, st.profile.norm_sum), st.profile.norm_sum)
        in_range = [v for d, v in per_d.items() if lo <= d <= hi]
        value = max(in_range) if in_range else None
        best = max(per_d.values()) if per_d else None
        extras = {
            "d_range": [lo, hi],
            "optimal_diameters": sorted(d for d, v in per_d.items() if v == best),
            "max_by_diameter": {str(d): per_d[d] for d in sorted(per_d)},
        }
        r = judge(rep, "thm-norm-nkd-range", value, "exhaustive max over diameters in range",
                  extras=extras)
        if value is None and not rep.vacuous:
            r = replace(r, discrepancy=True, detail="no tree with a diameter inside the range")
        out.append(r)
    return out


def _norm_min_k(n: int, jobs: int) -> list[ExtremalReport]:
    out = []
    for k in range(2, (n - 1) // 3 + 1):
        rep = extremal_scan(n, "norm_sum", "min", peripheral_count=k, jobs=jobs)
        out.append(judge(rep, "thm-norm-min-k", formulas.min_norm_k_peripheral(n, k),
                         "formula:min_norm_k_peripheral", [_code(cons.s_tilde(n, k))], MEMBERSHIP))
    return out


def _norm_star(n: int, jobs: int) -> list[ExtremalReport]:
    rep = extremal_scan(n, "norm_sum", "min", jobs=jobs)
    return [judge(rep, "prop-norm-star", 1, "bound", [_code(cons.star(n))], EQUALITY)]


def _lambda_min(n: int, jobs: int) -> list[ExtremalReport]:
    rep = extremal_scan(n, "lambda_sum", "min", jobs=jobs)
    return [judge(rep, "thm-lambda-min", formulas.min_lambda_bound(n), "formula:min_lambda_bound",
                  [_code(cons.s_hat(n))], EQUALITY)]


def _lambda_min_given_d(n: int, jobs: int) -> list[ExtremalReport]:
    out = []
    for d in range(4, n):
        rep = extremal_scan(n, "lambda_sum", "min", diameter=d, jobs=jobs)
        variants = cons.middle_pendant_trees(n, d)
        main = variants[0]
        extras = {}
        if d % 2 == 1:
            found = set(rep.witnesses)
            extras["split_lambda_sums"] = {
                f"{len(v.adjacency[d // 2]) - 2},{len(v.adjacency[d // 2 + 1]) - 2}":
                    profile(v).lambda_sum
                for v in variants
            }
            extras["optimal_splits"] = sum(1 for v in variants if _code(v) in found)
        out.append(judge(rep, "thm-lambda-min-given-d", profile(main).lambda_sum,
                         "construction:middle_pendants", [_code(main)], MEMBERSHIP, extras))
    return out


def _lambda_max_given_d(n: int, jobs: int) -> list[ExtremalReport]:
    out = []
    for d in range(2, n):
        rep = extremal_scan(n, "lambda_sum", "max", diameter=d, jobs=jobs)
        pendants = n - d + 1
        family = [_code(cons.dumbbell(n, a, pendants - a)) for a in range(1, pendants // 2 + 1)]
        extras = {"witnesses_equal_family": set(rep.witnesses) == set(family)}
        out.append(judge(rep, "thm-lambda-max-given-d", formulas.max_lambda_given_d(n, d),
                         "formula:max_lambda_given_d", family, SUBSET, extras))
    return out


def _lambda_max_global(n: int, jobs: int) -> list[ExtremalReport]:
    rep = extremal_scan(n, "lambda_sum", "max", jobs=jobs)
    predicted = [_code(cons.path(n))]
    if n % 2 == 0:
        predicted.append(_code(cons.comet(n, n - 2)))
    extras = {
        "path_lambda_sum": profile(cons.path(n)).lambda_sum,
        "comet_lambda_sum": profile(cons.comet(n, n - 2)).lambda_sum,
    }
    return [judge(rep, "thm-lambda-max-global", formulas.max_lambda_bound(n),
                  "formula:max_lambda_bound", predicted, EQUALITY, extras)]


def _per_tree(theorem: str, check: Callable[[Graph, InvariantProfile], bool], detail: str):
    def run(n: int, jobs: int) -> list[PerTreeReport]:
        trees = scanned_trees(n, jobs)
        failures = tuple(st.code for st in trees if not check(st.graph, st.profile))
        return [PerTreeReport(theorem, n, len(trees), failures, detail)]
    return run


def _ecc_periphery_ok(g: Graph, p: InvariantProfile) -> bool:
    return tuple(ecc_via_periphery(g)) == p.ecc and check_two_endpoint_property(g)


@dataclass(frozen=True)
class Theorem:
    runner: Callable[[int, int], list]
    min_n: int
    semantics: str | None
    claim: str


THEOREMS: dict[str, Theorem] = {
    "thm-norm-given-d": Theorem(_norm_given_d, 3, MEMBERSHIP,
                                "for each diameter d, t_hat(n,d) maximizes Norm"),
    "thm-norm-global": Theorem(_norm_global, 3, EQUALITY,
                               "max Norm = floor((2n^2-4n+1)/7), attained exactly by t_hat at the tabulated d"),
    "thm-norm-nkd": Theorem(_norm_nkd, 4, MEMBERSHIP,
                            "for each (k, d), every split of t_tilde(n,k,d) maximizes Norm"),
    "thm-norm-nkd-range": Theorem(_norm_nkd_range, 4, None,
                                  "with k peripheral vertices, some optimal d lies in the closed-form range"),
    "thm-norm-min-k": Theorem(_norm_min_k, 7, MEMBERSHIP,
                              "with k peripheral vertices, min Norm = 3n-6k, attained by s_tilde(n,k)"),
    "thm-lambda-location": Theorem(
        _per_tree("thm-lambda-location", lambda g, p: lambda_location_check(g),
                  "argmax span = periphery; center within argmin span; min span = diameter parity"),
        1, None, "span is maximal exactly on the periphery and minimal on the center"),
    "thm-lambda-min": Theorem(_lambda_min, 8, EQUALITY,
                              "Lambda >= 12, with equality exactly for s_hat(n)"),
    "thm-lambda-min-given-d": Theorem(_lambda_min_given_d, 8, MEMBERSHIP,
                                      "for d >= 4, pendants at the middle of a path minimize Lambda"),
    "thm-lambda-max-given-d": Theorem(_lambda_max_given_d, 3, SUBSET,
                                      "for each d, the Lambda maximizers are dumbbells"),
    "thm-lambda-max-global": Theorem(_lambda_max_global, 8, EQUALITY,
                                     "Lambda <= floor((n^2+1)/2), equality exactly for the path (and the (n-2)-comet, n even)"),
    "prop-ecc-periphery": Theorem(
        _per_tree("prop-ecc-periphery", _ecc_periphery_ok,
                  "eccentricity is attained at a peripheral vertex and at an end of a diametral path"),
        1, None, "eccentricity is attained at a peripheral vertex"),
    "prop-norm-star": Theorem(_norm_star, 3, EQUALITY, "Norm >= 1 with equality exactly for the star"),
}


def verify_theorem(theorem: str, n_values: Iterable[int], jobs: int = 1) -> list:
    try:
        spec = THEOREMS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}") from None
    reports = []
    for n in n_values:
        if n < spec.min_n:
            raise ValueError(f"{theorem} needs n >= {spec.min_n}")
        log.info("verifying %s at n=%d", theorem, n)
        reports.extend(spec.runner(n, jobs))
    return reports


# -- anomaly search --------------------------------------------------------

@dataclass(frozen=True)
class AnomalyRecord:
    base_code: str
    base: Graph
    added_edge: tuple[int, int]
    norm_sum_before: int
    norm_sum_after: int

    def to_json(self) -> dict:
        return {
            "base_code": self.base_code,
            "base_edge_list": serialize_edge_list(self.base),
            "added_edge": list(self.added_edge),
            "norm_sum_before": self.norm_sum_before,
            "norm_sum_after": self.norm_sum_after,
        }


def edge_orbit_key(t: Graph, u: int, v: int) -> str:
    """Equal for two non-edges of ``t`` exactly when an automorphism maps one onto the other."""
    return min(rooted_code(t, u, marked=v), rooted_code(t, v, marked=u))


def search_edge_anomalies(n: int) -> list[AnomalyRecord]:
    """Trees of order ``n`` plus one edge whose sum of normalities goes up, one per edge orbit."""
    out = []
    for st in scanned_trees(n):
        seen = set()
        for u, v in non_edges(st.graph):
            after = profile(add_edge(st.graph, u, v)).norm_sum
            if after <= st.profile.norm_sum:
                continue
            key = edge_orbit_key(st.graph, u, v)
            if key in seen:
                continue
            seen.add(key)
            out.append(AnomalyRecord(st.code, st.graph, (u, v), st.profile.norm_sum, after))
    return out
