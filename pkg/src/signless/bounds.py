"""Closed-form upper bounds on S_k^+ and the conjectured e + C(k+1, 2).

Every formula is evaluated as an exact ``Fraction``; a bound whose hypothesis
fails for (G, k) is reported as not applicable rather than extrapolated.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import (Graph, clique_number, graph_class, is_connected,
                    matching_number, max_degree, min_degree)
from .spectral import s_plus


class BoundNotApplicable(ValueError):
    """The bound's hypothesis does not hold for these parameters."""


def conjecture_rhs(e: int, k: int) -> Fraction:
    if e < 0 or k < 1:
        raise ValueError("need e >= 0 and k >= 1")
    return Fraction(e + k * (k + 1) // 2)


def clique_bound(e: int, omega: int, k: int) -> Fraction:
    if not 1 <= k <= omega:
        raise BoundNotApplicable(f"clique bound needs 1 <= k <= omega={omega}")
    return Fraction(2 * e - omega * omega + (k + 2) * omega - 2 * k)


def degree_bound(e: int, delta: int, k: int) -> Fraction:
    if not 1 <= k <= delta:
        raise BoundNotApplicable(f"degree bound needs 1 <= k <= Delta={delta}")
    return Fraction(2 * e - delta + k)


def matching_bound(e: int, m: int, k: int) -> Fraction:
    if not 1 <= k <= m:
        raise BoundNotApplicable(f"matching bound needs 1 <= k <= m={m}")
    return Fraction(2 * e - 2 * m + 2 * k)


def connected_bound(e: int, n: int, k: int) -> Fraction:
    """Valid for connected graphs; the caller checks connectivity."""
    if not 1 <= k <= n:
        raise BoundNotApplicable(f"connected bound needs 1 <= k <= n={n}")
    return 2 * e + 2 * k - n - Fraction(2 * k - 2, n)


def no_isolated_bound(e: int, n: int, k: int) -> Fraction:
    """Valid when the graph has no isolated vertex; the caller checks that."""
    if not 1 <= k <= n:
        raise BoundNotApplicable(f"bound needs 1 <= k <= n={n}")
    return Fraction(2 * e + 2 * k - n)


def tree_bound(e: int, n: int, k: int) -> Fraction:
    if e != n - 1:
        raise BoundNotApplicable("tree bound needs e = n - 1")
    if not 1 <= k <= n:
        raise BoundNotApplicable(f"tree bound needs 1 <= k <= n={n}")
    return e + 2 * k - 1 - Fraction(2 * k - 2, n)


def threshold_discriminant(n: int, e: int) -> int:
    return 8 * n * n * e - 8 * n ** 3 + 9 * n * n - 8 * n + 16


def large_k_threshold(n: int, e: int) -> float:
    """Smallest real k from which the connected bound implies the conjecture."""
    if n < 1:
        raise ValueError("n must be positive")
    disc = threshold_discriminant(n, e)
    if disc < 0:
        raise ValueError(f"negative discriminant {disc} for n={n}, e={e}")
    return (3 * n - 4 + math.sqrt(disc)) / (2 * n)


def large_k_start(n: int, e: int) -> int:
    """ceil(large_k_threshold) computed exactly with integer square roots."""
    disc = threshold_discriminant(n, e)
    if disc < 0:
        raise ValueError(f"negative discriminant {disc} for n={n}, e={e}")
    # k >= (3n - 4 + sqrt(disc)) / 2n  <=>  2nk - 3n + 4 >= sqrt(disc)
    k = 1
    while True:
        lhs = 2 * n * k - 3 * n + 4
        if lhs >= 0 and lhs * lhs >= disc:
            return k
        k += 1


@dataclass
class BoundReport:
    graph_id: str
    k: int
    s_plus: float
    rhs: Fraction
    bounds: list[dict] = field(default_factory=list)
    tightest: str | None = None

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "k": self.k,
            "s_plus": self.s_plus,
            "rhs": _num(self.rhs),
            "bounds": [dict(b, value=_num(b["value"]) if b["value"] is not None else None)
                       for b in self.bounds],
            "tightest": self.tightest,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _num(x: Fraction):
    return int(x) if x.denominator == 1 else float(x)


@dataclass(frozen=True)
class GraphInvariants:
    n: int
    e: int
    omega: int
    delta: int
    m: int
    connected: bool
    min_deg: int
    is_tree: bool

    @classmethod
    def of(cls, g: Graph) -> "GraphInvariants":
        return cls(g.n, g.e, clique_number(g), max_degree(g), matching_number(g),
                   is_connected(g), min_degree(g), graph_class(g).tag == "tree")


def applicable_bounds(inv: GraphInvariants, k: int) -> list[tuple[str, Fraction | None, bool, str]]:
    """``(name, value, applicable, condition)`` for every catalogued bound."""
    out = []

    def add(name, cond_ok, cond_text, fn, *args):
        if not cond_ok:
            out.append((name, None, False, cond_text))
            return
        try:
            out.append((name, fn(*args), True, cond_text))
        except BoundNotApplicable:
            out.append((name, None, False, cond_text))

    e, n = inv.e, inv.n
    add("clique", True, f"1 <= k <= omega={inv.omega}", clique_bound, e, inv.omega, k)
    add("degree", True, f"1 <= k <= Delta={inv.delta}", degree_bound, e, inv.delta, k)
    add("matching", True, f"1 <= k <= m={inv.m}", matching_bound, e, inv.m, k)
    add("connected", inv.connected, "connected, 1 <= k <= n", connected_bound, e, n, k)
    add("no_isolated", inv.min_deg >= 1, "no isolated vertex, 1 <= k <= n",
        no_isolated_bound, e, n, k)
    add("tree", inv.is_tree, "tree, 1 <= k <= n", tree_bound, e, n, k)
    return out


def best_applicable(g: Graph, k: int, graph_id: str = "",
                    inv: GraphInvariants | None = None) -> BoundReport:
    if k < 1:
        raise ValueError("k must be at least 1")
    inv = inv or GraphInvariants.of(g)
    rows = applicable_bounds(inv, k)
    report = BoundReport(graph_id, k, s_plus(g, k) if g.n else 0.0, conjecture_rhs(g.e, k))
    best = None
    for name, value, ok, cond in rows:
        report.bounds.append({"name": name, "value": value, "applicable": ok, "condition": cond})
        if ok and (best is None or value < best[1]):
            best = (name, value)
    report.tightest = best[0] if best else None
    return report
