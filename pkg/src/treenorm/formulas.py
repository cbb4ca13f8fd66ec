"""Closed-form values and bounds, kept apart from anything computed on graphs.

Fractional coefficients are evaluated with :class:`fractions.Fraction`; every
value that must be an integer is checked to be one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

APPLIES = "applies"
OUT_OF_DOMAIN = "out_of_domain"


@dataclass(frozen=True)
class FormulaResult:
    value: int | None
    applicability: str
    branch: str

    @property
    def applies(self) -> bool:
        return self.applicability == APPLIES


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {x}")
    return x.numerator


def eval_norm_t_hat(n: int, d: int) -> FormulaResult:
    """Closed form for the sum of normalities of the max-Norm tree of order n, diameter d.

    Branches: ``even_long_comet`` (even d, n-d >= d//2), ``even_short_comet``
    (even d, n-d < d//2), ``odd_long_comet`` (odd d, n-d >= d//2). Odd d with
    n-d < d//2 has no closed form and is reported out of domain.
    """
    if not 2 <= d <= n - 1:
        raise ValueError("eval_norm_t_hat needs 2 <= d <= n-1")
    d_ = Fraction(d)
    long_comet = n - d >= d // 2
    if d % 2 == 0 and long_comet:
        value = Fraction(-7, 8) * d_ * d_ + (n + Fraction(3, 4)) * d_ - n
        return FormulaResult(_integral(value, "even_long_comet"), APPLIES, "even_long_comet")
    if d % 2 == 0:
        value = Fraction(1, 4) * d_ * d_ - Fraction(n, 2) * d_ + Fraction(n * n - n, 2)
        return FormulaResult(_integral(value, "even_short_comet"), APPLIES, "even_short_comet")
    if long_comet:
        value = Fraction(-7, 8) * d_ * d_ + (n + Fraction(1, 2)) * d_ - n + Fraction(3, 8)
        return FormulaResult(_integral(value, "odd_long_comet"), APPLIES, "odd_long_comet")
    return FormulaResult(None, OUT_OF_DOMAIN, "odd_short_comet")


def max_norm_bound(n: int) -> int:
    if n < 3:
        raise ValueError("max_norm_bound needs n >= 3")
    return (2 * n * n - 4 * n + 1) // 7


# residue of n mod 7 -> offsets c with d = (4n + c) / 7
_OPTIMAL_D_OFFSETS = {0: (0,), 1: (-4, 10), 2: (6,), 3: (2,), 4: (-2,), 5: (8,), 6: (4,)}


def optimal_diameters(n: int) -> tuple[int, ...]:
    if n < 3:
        raise ValueError("optimal_diameters needs n >= 3")
    out = []
    for c in _OPTIMAL_D_OFFSETS[n % 7]:
        q, r = divmod(4 * n + c, 7)
        assert r == 0
        out.append(q)
    return tuple(out)


def t_tilde_optimal_d_range(n: int, k: int) -> tuple[int, int]:
    """Closed interval of diameters containing an optimal one, for n vertices and k peripheral."""
    if k < 2 or n < k + 2:
        raise ValueError("t_tilde_optimal_d_range needs k >= 2 and n >= k+2")
    m = n - k
    return (4 * m + 10) // 7, math.ceil(Fraction(4 * m + 11, 7))


def min_norm_k_peripheral(n: int, k: int) -> int:
    if k < 2 or n < 3 * k + 1:
        raise ValueError("min_norm_k_peripheral needs k >= 2 and n >= 3k+1")
    return 3 * n - 6 * k


def max_lambda_given_d(n: int, d: int) -> int:
    if not 2 <= d <= n - 1:
        raise ValueError("max_lambda_given_d needs 2 <= d <= n-1")
    if d % 2 == 0:
        return (2 * n - d) * d // 2
    return ((2 * n - d) * d + 1) // 2


def max_lambda_bound(n: int) -> int:
    if n < 8:
        raise ValueError("max_lambda_bound needs n >= 8")
    return (n * n + 1) // 2


def min_lambda_bound(n: int) -> int:
    if n < 8:
        raise ValueError("min_lambda_bound needs n >= 8")
    return 12


# name -> (callable, parameter names); used by the CLI ``formula`` subcommand.
REGISTRY: dict[str, tuple[Callable[..., Any], tuple[str, ...]]] = {
    "norm_t_hat": (eval_norm_t_hat, ("n", "d")),
    "max_norm_bound": (max_norm_bound, ("n",)),
    "optimal_diameters": (optimal_diameters, ("n",)),
    "t_tilde_d_range": (t_tilde_optimal_d_range, ("n", "k")),
    "min_norm_k_peripheral": (min_norm_k_peripheral, ("n", "k")),
    "max_lambda_given_d": (max_lambda_given_d, ("n", "d")),
    "max_lambda_bound": (max_lambda_bound, ("n",)),
    "min_lambda_bound": (min_lambda_bound, ("n",)),
}


def evaluate(name: str, **params: int) -> dict:
    """Evaluate a registered formula into the ``{formula, inputs, branch, value, applies}`` record."""
    try:
        fn, names = REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown formula {name!r}; choose from {sorted(REGISTRY)}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ValueError(f"formula {name} needs {', '.join('--' + p for p in missing)}")
    inputs = {p: params[p] for p in names}
    result = fn(**inputs)
    if isinstance(result, FormulaResult):
        value, branch, applies = result.value, result.branch, result.applies
    else:
        value, branch, applies = result, "default", True
        if isinstance(value, tuple):
            value = list(value)
    return {"formula": name, "inputs": inputs, "branch": branch, "value": value, "applies": applies}
