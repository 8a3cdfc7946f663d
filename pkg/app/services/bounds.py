# app/services/bounds.py
#
# Exact evaluation of the clique-count bounds. Integers throughout; the two
# rational bounds (g_s, h_s) are carried as Fractions. No floating point.

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict

from app.services.errors import ParameterError


class ExtremalParams(BaseModel):
    """(n, k, s) with the two derived thresholds t (cycles) and t' (paths)."""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    s: int

    @property
    def t(self) -> int:
        return (self.k - 1) // 2

    @property
    def t_path(self) -> int:
        return (self.k - 2) // 2


class BoundValue(BaseModel):
    """Exact rational in lowest terms, denominator > 0."""

    model_config = ConfigDict(frozen=True)

    numerator: int
    denominator: int = 1

    @classmethod
    def of(cls, value: Fraction | int) -> "BoundValue":
        f = Fraction(value)
        return cls(numerator=f.numerator, denominator=f.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_integer(self) -> bool:
        return self.denominator == 1

    def floor(self) -> int:
        return self.numerator // self.denominator

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


class EndpointBound(BaseModel):
    """max{f_s at a = lo, f_s at a = hi}, with every endpoint a attaining it."""

    model_config = ConfigDict(frozen=True)

    value: int
    attained_at: tuple[int, ...]


# ---------------------------
# Helpers
# ---------------------------

def _require_s(s: int) -> None:
    if s < 2:
        raise ParameterError(f"Clique size s must be >= 2, got {s}")


def _endpoint_max(n: int, k: int, s: int, ends: tuple[int, int]) -> EndpointBound:
    values = {a: f_s(n, k, a, s) for a in sorted(set(ends))}
    best = max(values.values())
    return EndpointBound(value=best, attained_at=tuple(a for a, v in values.items() if v == best))


# ---------------------------
# Public API
# ---------------------------

def binom(n: int, r: int) -> int:
    """C(n, r), zero outside 0 <= r <= n."""
    if n < 0 or r < 0 or r > n:
        return 0
    return comb(n, r)


def f_s(n: int, k: int, a: int, s: int) -> int:
    """C(k-a, s) + (n-k+a) * C(a, s-1): the number of K_s in H_{n,k,a}."""
    _require_s(s)
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if n < k:
        raise ParameterError(f"n must be >= k, got n={n}, k={k}")
    if not (1 <= a and 2 * a < k):
        raise ParameterError(f"a must satisfy 1 <= a < k/2, got a={a}, k={k}")
    return binom(k - a, s) + (n - k + a) * binom(a, s - 1)


def cycle_bound(n: int, k: int, s: int) -> EndpointBound:
    """max{f_s(n,k,2), f_s(n,k,t)}, t = floor((k-1)/2); for 2-connected graphs of circumference < k."""
    _require_s(s)
    if not n >= k >= 5:
        raise ParameterError(f"cycle_bound needs n >= k >= 5, got n={n}, k={k}")
    return _endpoint_max(n, k, s, (2, (k - 1) // 2))


def path_bound(n: int, k: int, s: int) -> EndpointBound:
    """max{f_s(n,k-1,1), f_s(n,k-1,t')}, t' = floor((k-2)/2); for connected P_k-free graphs."""
    _require_s(s)
    if not n >= k >= 4:
        raise ParameterError(f"path_bound needs n >= k >= 4, got n={n}, k={k}")
    return _endpoint_max(n, k - 1, s, (1, (k - 2) // 2))


def g_s(n: int, k: int, s: int) -> BoundValue:
    """(n-1)/(k-2) * C(k-1, s)."""
    _require_s(s)
    if k <= 2:
        raise ParameterError(f"g_s needs k >= 3, got {k}")
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return BoundValue.of(Fraction((n - 1) * binom(k - 1, s), k - 2))


def h_s(n: int, k: int, s: int) -> BoundValue:
    """n/(k-1) * C(k-1, s)."""
    _require_s(s)
    if k <= 2:
        raise ParameterError(f"h_s needs k >= 3, got {k}")
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return BoundValue.of(Fraction(n * binom(k - 1, s), k - 1))


def floor_bound(value: BoundValue) -> int:
    return value.floor()


def disintegration_bound(n: int, t: int, s: int) -> int:
    """(n-t) * C(t, s-1) + C(t, s): most K_s a graph can hold if t-disintegration empties it."""
    _require_s(s)
    return (n - t) * binom(t, s - 1) + binom(t, s)


def convexity_check(n: int, k: int, s: int) -> bool:
    """Second differences of a -> f_s(n,k,a) are >= 0 on [1, floor((k-1)/2)]."""
    t = (k - 1) // 2
    values = [f_s(n, k, a, s) for a in range(1, t + 1)]
    return all(values[i + 1] - 2 * values[i] + values[i - 1] >= 0 for i in range(1, len(values) - 1))


def endpoint_maximum_check(n: int, k: int, s: int) -> bool:
    """Brute-force max of f_s over a in [1..t] equals the larger endpoint value."""
    t = (k - 1) // 2
    values = [f_s(n, k, a, s) for a in range(1, t + 1)]
    return max(values) == max(values[0], values[-1])


def bound_table(n: int, k: int, s: int) -> List[Dict[str, Any]]:
    """
    Every bound that applies to (n, k, s) as rows:
      name, value (exact text), floor, applicable, attained_at
    Rows whose preconditions fail are kept with applicable=False and empty values.
    """
    _require_s(s)
    if n < 1 or k < 3:
        raise ParameterError(f"bound needs n >= 1 and k >= 3, got n={n}, k={k}")
    rows: List[Dict[str, Any]] = []

    def add(name: str, fn) -> None:
        try:
            v = fn()
        except ParameterError:
            rows.append({"name": name, "value": "", "floor": None, "applicable": False, "attained_at": ""})
            return
        if isinstance(v, EndpointBound):
            rows.append({
                "name": name, "value": str(v.value), "floor": v.value, "applicable": True,
                "attained_at": ",".join(f"a={a}" for a in v.attained_at),
            })
        else:
            rows.append({"name": name, "value": str(v), "floor": v.floor(), "applicable": True, "attained_at": ""})

    for a in range(1, (k - 1) // 2 + 1):
        add(f"f_s(a={a})", lambda a=a: BoundValue.of(f_s(n, k, a, s)))
    add("cycle_bound", lambda: cycle_bound(n, k, s))
    add("path_bound", lambda: path_bound(n, k, s))
    add("g_s", lambda: g_s(n, k, s))
    add("h_s", lambda: h_s(n, k, s))
    return rows
