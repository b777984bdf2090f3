"""Per-graph conjecture verdicts, lemma batteries, sweeps and a
counterexample search.

Every check produces flat records (JSON-serialisable dicts) which a
``SweepReport`` folds into counts; records can be streamed to a file as they
are produced so that an interrupted sweep still leaves partial results.
"""

from __future__ import annotations

import json
import random
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import graph6
from .bounds import GraphInvariants, applicable_bounds, conjecture_rhs
from .charpoly import (HOLDS_CERTIFIED, HOLDS_FLOAT, INCONCLUSIVE, NOT_APPLICABLE,
                       VIOLATED_CERTIFIED, VIOLATED_FLOAT, SizeGuardError, Verdict,
                       certify_eigenvalue_position, certify_topk_sum_leq, char_poly_q,
                       infinity_prime_poly, u1_quintic)
from .families import infinity_prime_331, t_star, u1, u2
from .graph import (Graph, component_sets, delete_edges, graph_class, is_bipartite,
                    is_connected)
from .poly import IntPoly
from .spectral import l_spectrum, q_spectrum, s_plus

TIE_TOL = 1e-6
FLOAT = "float"
CERTIFIED = "certified"
MODES = (FLOAT, CERTIFIED)
CHECKS = ("conjecture", "bounds", "lemmas")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2

_VIOLATIONS = (VIOLATED_CERTIFIED, VIOLATED_FLOAT)


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def compare_sum(g: Graph, k: int, bound, mode: str = FLOAT, strict: bool = False,
                always: bool = False) -> Verdict:
    """Verdict for ``S_k^+(g) <= bound`` (``<`` when strict).

    Float margins at least TIE_TOL away from zero are trusted as they are; in
    certified mode anything closer (or everything, with ``always``) is settled
    by exact root isolation.
    """
    _check_mode(mode)
    bound = Fraction(bound)
    s = s_plus(g, k)
    margin = float(bound) - s
    if mode == FLOAT or (margin >= TIE_TOL and not always):
        if margin >= TIE_TOL or (not strict and margin > -TIE_TOL):
            return Verdict(HOLDS_FLOAT, margin, f"S_{k}^+ = {s:.12g}")
        if margin > -TIE_TOL:
            return Verdict(INCONCLUSIVE, margin, f"S_{k}^+ = {s:.12g} ties {bound}")
        return Verdict(VIOLATED_FLOAT, margin, f"S_{k}^+ = {s:.12g} > {bound}")
    v = certify_topk_sum_leq(g, k, bound)
    if strict and v.outcome == HOLDS_CERTIFIED and v.margin <= 0:
        # interval upper end sits on the bound: only equality is possible
        return Verdict(VIOLATED_CERTIFIED, 0.0, v.detail + " (equality, strict required)")
    return v


def check_conjecture(g: Graph, mode: str = FLOAT, ks: Sequence[int] | None = None
                     ) -> list[tuple[int, Verdict]]:
    """``S_k^+(G) <= e(G) + C(k+1, 2)`` for each k (default 1..n)."""
    _check_mode(mode)
    if g.n < 1:
        raise ValueError("graph must have a vertex")
    ks = range(1, g.n + 1) if ks is None else ks
    return [(k, compare_sum(g, k, conjecture_rhs(g.e, k), mode)) for k in ks]


def pendant_shape(h: Graph) -> tuple[int, int, int] | None:
    """``(i, a, b)`` when h is U^i(a, b) (a >= b): a triangle (i = 1) or a
    quadrangle with the pendant-bearing vertices opposite (i = 2), every other
    vertex a pendant on one of at most two cycle vertices."""
    if h.n < 3 or h.e != h.n or not is_connected(h):
        return None
    deg = list(h.degrees())
    alive = set(range(h.n))
    stack = [v for v in range(h.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in h.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    cyc = alive
    if len(cyc) not in (3, 4):
        return None
    counts = Counter()
    for v in range(h.n):
        if v in cyc:
            continue
        nb = h.neighbors(v)
        if len(nb) != 1 or nb[0] not in cyc:
            return None
        counts[nb[0]] += 1
    if len(counts) > 2:
        return None
    if len(cyc) == 4 and len(counts) == 2:
        u, w = counts
        if h.has_edge(u, w):
            return None
    vals = sorted(counts.values(), reverse=True) + [0, 0]
    return (1 if len(cyc) == 3 else 2, vals[0], vals[1])


def pendant_split(g: Graph):
    """First edge pair (in edge order) whose removal leaves K2 plus a U^1/U^2
    graph on n - 2 vertices, as ``((e1, e2), (i, a, b))``; None otherwise."""
    edges = g.edges()
    for e1, e2 in combinations(edges, 2):
        h = delete_edges(g, [e1, e2])
        comps = component_sets(h)
        if len(comps) != 2:
            continue
        small, big = sorted(comps, key=len)
        if len(small) != 2:
            continue
        u, v = small
        if not h.has_edge(u, v):
            continue
        shape = pendant_shape(h.subgraph(sorted(big)))
        if shape is not None:
            return (e1, e2), shape
    return None


def check_pendant_split(g: Graph, mode: str = FLOAT) -> Verdict:
    """``S_3^+(G) <= e(G) + 6`` when G - {e1, e2} = H u K2 with H of U^1/U^2 shape."""
    _check_mode(mode)
    found = pendant_split(g)
    if found is None:
        return Verdict(NOT_APPLICABLE, 0.0, "no edge pair leaves K2 plus U^1/U^2")
    (e1, e2), (i, a, b) = found
    bound = g.e + 6
    fv = compare_sum(g, 3, bound, FLOAT)
    if mode == FLOAT:
        v = fv
    else:
        v = certify_topk_sum_leq(g, 3, bound)
        if v.outcome == INCONCLUSIVE or (v.holds != fv.holds and abs(fv.margin) >= TIE_TOL):
            raise ArithmeticError(f"float and certified S_3^+ disagree: {fv} vs {v}")
    return Verdict(v.outcome, v.margin, f"e1={e1} e2={e2} H=U^{i}({a},{b}); {v.detail}")


# -- records and reports ----------------------------------------------------

def _record(check: str, gid: str, v: Verdict, **extra) -> dict:
    rec = {"check": check, "graph_id": gid, "outcome": v.outcome,
           "margin": v.margin, "detail": v.detail}
    rec.update(extra)
    return rec


@dataclass
class SweepReport:
    spec: str
    graphs_checked: int = 0
    histogram: dict = field(default_factory=dict)  # check -> outcome -> count
    worst_margin: tuple | None = None  # (graph_id, k, margin), conjecture only
    violations: list = field(default_factory=list)
    exploratory: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    wall_time_s: float = 0.0
    stream: object = None

    def add(self, rec: dict):
        if self.stream is not None:
            self.stream.write(json.dumps(rec, sort_keys=True) + "\n")
            self.stream.flush()
        if rec["check"] == "error":
            self.errors.append(rec)
            return
        h = self.histogram.setdefault(rec["check"], {})
        h[rec["outcome"]] = h.get(rec["outcome"], 0) + 1
        if rec["check"] == "conjecture" and not rec.get("exploratory"):
            if self.worst_margin is None or rec["margin"] < self.worst_margin[2]:
                self.worst_margin = (rec["graph_id"], rec.get("k"), rec["margin"])
        if rec["outcome"] in _VIOLATIONS:
            (self.exploratory if rec.get("exploratory") else self.violations).append(rec)

    @property
    def exit_code(self) -> int:
        return EXIT_VIOLATION if self.violations else EXIT_OK

    def count(self, check: str, outcome: str | None = None) -> int:
        h = self.histogram.get(check, {})
        return h.get(outcome, 0) if outcome else sum(h.values())

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "counts": {"graphs_checked": self.graphs_checked,
                       "records": sum(sum(h.values()) for h in self.histogram.values()),
                       "violations": len(self.violations),
                       "exploratory_violations": len(self.exploratory),
                       "errors": len(self.errors)},
            "verdict_histogram": {c: dict(sorted(h.items()))
                                  for c, h in sorted(self.histogram.items())},
            "worst_margin": list(self.worst_margin) if self.worst_margin else None,
            "violations": self.violations,
            "exploratory_violations": self.exploratory,
            "errors": self.errors,
            "wall_time_s": round(self.wall_time_s, 3),
        }

    def dumps(self, timing: bool = True) -> str:
        d = self.to_json()
        if not timing:
            d.pop("wall_time_s")
        return json.dumps(d, sort_keys=True)


# -- graph sources ------------------------------------------------------------

def enumeration_source(max_n: int, tag: str = "all", allow_large: bool = False,
                       jobs: int = 1, min_n: int = 1) -> Iterator[tuple[str, Graph]]:
    """Connected graphs of every order min_n..max_n, filtered by class tag."""
    from .enumeration import connected_graphs, filter_class
    for n in range(min_n, max_n + 1):
        for g in filter_class(connected_graphs(n, allow_large, jobs), tag):
            yield graph6.encode(g).decode(), g


def graph6_source(path: str) -> Iterator[tuple[str, Graph]]:
    """graph6 lines from a file, or standard input for ``-``."""
    if path == "-":
        lines = sys.stdin.buffer.read().splitlines()
    else:
        with open(path, "rb") as fh:
            lines = fh.read().splitlines()
    for line in lines:
        line = line.strip()
        if line:
            yield line.decode("ascii", "replace"), graph6.decode(line)


def family_source(text: str) -> Iterator[tuple[str, Graph]]:
    from .families import iter_family
    return iter_family(text)


# -- sweeping -----------------------------------------------------------------

def check_graph(gid: str, g: Graph, checks: Sequence[str], mode: str,
                ks: Sequence[int] | None = None) -> list[dict]:
    """All records for one graph; per-graph failures become error records."""
    try:
        recs = []
        cls = graph_class(g).tag
        kk = [k for k in (ks or range(1, g.n + 1))]
        if "conjecture" in checks:
            for k, v in check_conjecture(g, mode, kk):
                recs.append(_record("conjecture", gid, v, k=k, n=g.n, e=g.e, cls=cls,
                                    exploratory=(cls == "tricyclic" and k == 3)))
        if "bounds" in checks:
            inv = GraphInvariants.of(g)
            for k in kk:
                for name, value, ok, _cond in applicable_bounds(inv, k):
                    if ok:
                        v = compare_sum(g, k, value, mode)
                        recs.append(_record("bounds", gid, v, k=k, bound=name))
        if "lemmas" in checks:
            recs.append(_record("pendant_split", gid, check_pendant_split(g, mode)))
        return recs
    except (SizeGuardError, ArithmeticError, ValueError) as exc:
        return [{"check": "error", "graph_id": gid, "error": f"{type(exc).__name__}: {exc}"}]


def _check_item(args):
    return check_graph(*args)


def sweep(spec: str, items: Iterable[tuple[str, Graph]], checks: Sequence[str] = ("conjecture",),
          mode: str = FLOAT, ks: Sequence[int] | None = None, jobs: int = 1,
          stream=None) -> SweepReport:
    """Run ``checks`` over every graph from ``items``; records are emitted in
    source order whatever the worker count."""
    _check_mode(mode)
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise ValueError(f"unknown checks {bad}; known: {CHECKS}")
    report = SweepReport(spec, stream=stream)
    t0 = time.perf_counter()
    work = ((gid, g, tuple(checks), mode, tuple(ks) if ks else None) for gid, g in items)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = pool.map(_check_item, work, chunksize=64)
            for recs in results:
                report.graphs_checked += 1
                for r in recs:
                    report.add(r)
    else:
        for w in work:
            report.graphs_checked += 1
            for r in check_graph(*w):
                report.add(r)
    report.wall_time_s = time.perf_counter() - t0
    return report


def _battery(spec: str, stream=None) -> SweepReport:
    return SweepReport(spec, stream=stream)


def _exact(check: str, gid: str, ok: bool, detail: str) -> dict:
    return _record(check, gid, Verdict(HOLDS_CERTIFIED if ok else VIOLATED_CERTIFIED, 0.0, detail))


def u1_factorization(n: int, a: int) -> tuple[IntPoly, IntPoly]:
    """``(psi(U^1_n(a, b)), (x-1)^(n-5) f(x))`` with b = n - 3 - a."""
    psi = char_poly_q(u1(a, n - 3 - a))
    return psi, IntPoly((-1, 1)) ** (n - 5) * u1_quintic(n, a)


def check_u1_battery(n_range: Iterable[int], mode: str = CERTIFIED, stream=None) -> SweepReport:
    """q_3(U^1_n(a, b)) < 2 for a >= max(b, 2), plus the exact factorisation
    psi = (x-1)^(n-5) f(x) and the values f(0), f(1), f(2)."""
    _check_mode(mode)
    rep = _battery("lemma u1", stream)
    t0 = time.perf_counter()
    for n in n_range:
        for b in range(0, n - 2):
            a = n - 3 - b
            if a < max(b, 2):
                continue
            gid = f"u1({a},{b})"
            g = u1(a, b)
            rep.graphs_checked += 1
            if mode == CERTIFIED:
                v = certify_eigenvalue_position(g, 3, "<", 2)
            else:
                q3 = q_spectrum(g).values[2]
                v = Verdict(HOLDS_FLOAT if q3 < 2 - TIE_TOL else VIOLATED_FLOAT, 2 - q3, f"q_3 = {q3:.12g}")
            rep.add(_record("u1_q3", gid, v, n=n))
            psi, prod = u1_factorization(n, a)
            rep.add(_exact("u1_factor", gid, psi == prod, f"psi = (x-1)^{n - 5} f(x)"))
            f = u1_quintic(n, a)
            vals = (f(0), f(1), f(2))
            want = (-4, -a * b, 2 * a + 2 * b - 2)
            rep.add(_exact("u1_values", gid, vals == want, f"f(0), f(1), f(2) = {vals}"))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def check_u2_battery(n_range: Iterable[int], stream=None) -> SweepReport:
    """q_3(U^2_n(a, b)) = 2 exactly, and equal Q/L spectra (bipartite)."""
    rep = _battery("lemma u2", stream)
    t0 = time.perf_counter()
    for n in n_range:
        if n < 9:
            raise ValueError("U^2 battery needs n >= 9")
        for b in range(0, n - 3):
            a = n - 4 - b
            if a < b:
                continue
            gid = f"u2({a},{b})"
            g = u2(a, b)
            rep.graphs_checked += 1
            rep.add(_record("u2_q3", gid, certify_eigenvalue_position(g, 3, "=", 2), n=n))
            bip, _ = is_bipartite(g)
            dev = max(abs(x - y) for x, y in zip(q_spectrum(g).values, l_spectrum(g).values))
            rep.add(_exact("u2_bipartite_QL", gid, bip and dev <= 1e-9, f"max |q_i - mu_i| = {dev:.3g}"))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def check_tricyclic_battery(n_range_2: Iterable[int], n_range_3: Iterable[int], stream=None) -> SweepReport:
    """1 < q_2 < 27/10 and S_2^+ < e + 2 for T_n^2 (n >= 6) and T_n^3 (n >= 7)."""
    rep = _battery("lemma t2 t3", stream)
    t0 = time.perf_counter()
    for i, rng, lo in ((2, n_range_2, 6), (3, n_range_3, 7)):
        for n in rng:
            if n < lo:
                raise ValueError(f"T_n^{i} battery needs n >= {lo}")
            g = t_star(n, i)
            gid = f"tstar({n},{i})"
            rep.graphs_checked += 1
            rep.add(_record("t_q2_gt_1", gid, certify_eigenvalue_position(g, 2, ">", 1), n=n, i=i))
            rep.add(_record("t_q2_lt_2.7", gid,
                            certify_eigenvalue_position(g, 2, "<", Fraction(27, 10)), n=n, i=i))
            v = compare_sum(g, 2, g.e + 2, CERTIFIED, strict=True, always=True)
            rep.add(_record("t_s2_lt_e+2", gid, v, n=n, i=i))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def check_infprime_battery(n_range: Iterable[int], stream=None) -> SweepReport:
    """Exact factorisation of psi(infinity'(3,3,1)) and S_3^+ < n + 7."""
    rep = _battery("infinity'(3,3,1)", stream)
    t0 = time.perf_counter()
    for n in n_range:
        g = infinity_prime_331(n)
        gid = f"infinityprime({n})"
        rep.graphs_checked += 1
        ok = char_poly_q(g) == infinity_prime_poly(n)
        rep.add(_exact("infprime_factor", gid, ok, "psi = (x-1)^(n-4)(x-3)(x^3-(n+3)x^2+3nx-8)"))
        v = compare_sum(g, 3, n + 7, CERTIFIED, strict=True, always=True)
        rep.add(_record("infprime_s3", gid, v, n=n))
    rep.wall_time_s = time.perf_counter() - t0
    return rep


# -- counterexample search ----------------------------------------------------

@dataclass
class SearchResult:
    k: int
    found: tuple[str, Graph, Verdict] | None = None
    scanned: int = 0
    pruned: list = field(default_factory=list)  # (graph_id, Graph)
    candidates: int = 0


def has_small_edge_subgraph(g: Graph, k: int) -> bool:
    """Some single-edge-deleted subgraph H (with an edge left) has S_k^+(H) <= e(H)."""
    if g.e < 2:
        return False
    for edge in g.edges():
        h = delete_edges(g, [edge])
        if s_plus(h, k) <= h.e + 1e-9:
            return True
    return False


def counterexample_search(items: Iterable[tuple[str, Graph]], k: int,
                          prune: bool = True) -> SearchResult:
    """Scan for ``S_k^+ > e + C(k+1, 2)`` at a fixed k.

    A minimal counterexample has S_k^+(H) > e(H) for every nonempty subgraph H,
    so graphs with a single-edge-deleted H failing that are skipped when
    ``prune`` is set. A float-flagged candidate is confirmed exactly.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    res = SearchResult(k)
    for gid, g in items:
        res.scanned += 1
        if prune and has_small_edge_subgraph(g, k):
            res.pruned.append((gid, g))
            continue
        rhs = conjecture_rhs(g.e, k)
        if s_plus(g, k) > float(rhs) - TIE_TOL:
            res.candidates += 1
            v = certify_topk_sum_leq(g, k, rhs)
            if v.outcome == VIOLATED_CERTIFIED:
                res.found = (gid, g, v)
                return res
    return res


def sample_pruned(res: SearchResult, fraction: float = 0.01, seed: int = 0) -> list[tuple[str, Graph]]:
    """A reproducible random sample (at least one graph) of the pruned set."""
    if not res.pruned:
        return []
    rng = random.Random(seed)
    size = max(1, round(len(res.pruned) * fraction))
    return rng.sample(res.pruned, size)
