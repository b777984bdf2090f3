"""Deterministic generators for the named graph families.

Labeling convention: hub vertices first, then internal path vertices, then
pendant vertices. Equal parameters always give the identical labeled graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph, from_edges


class FamilyError(ValueError):
    pass


def _need(cond: bool, msg: str):
    if not cond:
        raise FamilyError(msg)


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n-1}, centre 0."""
    _need(n >= 2, "star needs n >= 2")
    return from_edges(n, [(0, i) for i in range(1, n)])


def m_k2(m: int) -> Graph:
    _need(m >= 1, "mK2 needs m >= 1")
    return from_edges(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])


def _hub_paths(lengths, pendants_at_hubs=(0, 0), internal_pendants=None) -> Graph:
    """Two hubs 0 and 1 joined by paths with ``lengths[i]`` internal vertices;
    a length of 0 is the direct edge 0-1. Pendants are appended last."""
    edges = []
    nxt = 2
    for i, s in enumerate(lengths):
        if s == 0:
            edges.append((0, 1))
            continue
        chain = [0] + list(range(nxt, nxt + s)) + [1]
        nxt += s
        edges.extend(zip(chain, chain[1:]))
    internal_start = 2
    for hub, count in zip((0, 1), pendants_at_hubs):
        for _ in range(count):
            edges.append((hub, nxt))
            nxt += 1
    if internal_pendants:
        start = internal_start
        for s, flag in zip(lengths, internal_pendants):
            if flag:
                edges.append((start, nxt))
                nxt += 1
            start += s
    return from_edges(nxt, edges)


def infinity_graph(p: int, q: int, t: int) -> Graph:
    """Cycles C_p and C_q sharing one vertex (t = 1) or joined by a path on t vertices."""
    _need(q >= p >= 3 and t >= 1, "infinity graph needs q >= p >= 3 and t >= 1")
    if t == 1:
        n = p + q - 1
        cp = [0] + list(range(1, p))
        cq = [0] + list(range(p, p + q - 1))
        edges = list(zip(cp, cp[1:] + cp[:1])) + list(zip(cq, cq[1:] + cq[:1]))
        return from_edges(n, edges)
    # hubs 0 (on C_p) and 1 (on C_q), then path interior, then cycle rests
    bridge = [0] + list(range(2, t)) + [1]
    nxt = t
    cp = [0] + list(range(nxt, nxt + p - 1))
    nxt += p - 1
    cq = [1] + list(range(nxt, nxt + q - 1))
    nxt += q - 1
    edges = list(zip(bridge, bridge[1:]))
    edges += list(zip(cp, cp[1:] + cp[:1])) + list(zip(cq, cq[1:] + cq[:1]))
    return from_edges(nxt, edges)


def theta_graph(p: int, q: int, t: int) -> Graph:
    """Cycles C_p and C_q sharing a path on t vertices."""
    _need(p >= 3 and q >= 3, "theta graph needs p, q >= 3")
    _need(2 <= t and 2 * t <= p + 2 and 2 * t <= q + 2,
          "theta graph needs 2 <= t <= min((p+2)/2, (q+2)/2)")
    return _hub_paths((t - 2, p - t, q - t))


def u1(a: int, b: int) -> Graph:
    """Triangle with a pendants on vertex 0 and b pendants on vertex 1."""
    _need(a >= b >= 0 and a >= 1, "U1 needs a >= b >= 0 and n = a+b+3 >= 4")
    return _hub_paths((0, 1), (a, b))


def u2(a: int, b: int) -> Graph:
    """Quadrangle with a and b pendants on the opposite vertices 0 and 1."""
    _need(a >= b >= 0, "U2 needs a >= b >= 0")
    return _hub_paths((1, 1), (a, b))


def t_star(n: int, i: int) -> Graph:
    """K_{1,n-2i-1} with i two-vertex paths hung on the centre 0."""
    _need(i in (0, 1, 2, 3), "T_n^i needs i in {0,1,2,3}")
    _need(n >= 2 * i + 1 and n >= 2, "T_n^i needs n >= 2i+1")
    leaves = n - 2 * i - 1
    edges = [(0, v) for v in range(1, leaves + 1)]
    nxt = leaves + 1
    for _ in range(i):
        edges += [(0, nxt), (nxt, nxt + 1)]
        nxt += 2
    return from_edges(n, edges)


def infinity_prime_331(n: int) -> Graph:
    """Two triangles sharing vertex 0, with n-5 pendants on vertex 0."""
    _need(n >= 5, "infinity'(3,3,1) needs n >= 5")
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
    edges += [(0, v) for v in range(5, n)]
    return from_edges(n, edges)


def theta_pendants(s1: int, s2: int, s3: int, a: int, b: int,
                   c1: int = 0, c2: int = 0, c3: int = 0) -> Graph:
    """Hubs 0 and 1 joined by three paths with s1, s2, s3 internal vertices
    (0 = direct edge), a pendants on hub 0, b on hub 1, and optionally one
    pendant on the internal vertex of any path with exactly one internal vertex.

    Every component left after cutting a path off at both hubs has at most one
    edge, which is the configuration the k = 3 bicyclic case reduces to.
    """
    s = (s1, s2, s3)
    c = (c1, c2, c3)
    _need(all(x in (0, 1, 2) for x in s), "path lengths must be 0, 1 or 2")
    _need(sum(x == 0 for x in s) <= 1, "at most one direct hub edge")
    _need(a >= 0 and b >= 0, "pendant counts must be nonnegative")
    _need(all(f in (0, 1) for f in c), "internal pendant flags must be 0 or 1")
    _need(all(not f or x == 1 for x, f in zip(s, c)),
          "internal pendants only on single-vertex paths")
    return _hub_paths(s, (a, b), c)


def empty_graph(n: int) -> Graph:
    _need(n >= 0, "n must be nonnegative")
    return from_edges(n, [])


FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "star": star,
    "mk2": m_k2,
    "empty": empty_graph,
    "infinity": infinity_graph,
    "theta": theta_graph,
    "u1": u1,
    "u2": u2,
    "tstar": t_star,
    "infinityprime": infinity_prime_331,
    "thetap": theta_pendants,
}

_SPEC_RE = re.compile(r"^\s*([a-z0-9_]+)\s*\(\s*([-0-9,\s]*)\)\s*$")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]

    def build(self) -> Graph:
        try:
            return FAMILIES[self.name](*self.params)
        except TypeError as exc:
            raise FamilyError(f"wrong number of parameters for {self.name}: {exc}") from None

    def __str__(self):
        return f"{self.name}({','.join(map(str, self.params))})"


def parse_family(text: str) -> FamilySpec:
    """Parse ``name(p1,p2,...)``, e.g. ``theta(3,4,2)`` or ``thetap(2,1,1,4,3)``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise FamilyError(f"cannot parse family spec {text!r}")
    name, args = m.group(1), m.group(2).strip()
    if name not in FAMILIES:
        raise FamilyError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    params = tuple(int(x) for x in args.split(",")) if args else ()
    return FamilySpec(name, params)


def build(text: str) -> Graph:
    return parse_family(text).build()


def iter_family(text: str):
    """``(id, Graph)`` pairs for a single family spec or a named grid such as
    ``bicyclicgrid(30)``."""
    m = _SPEC_RE.match(text)
    if m and m.group(1) in GRIDS:
        args = m.group(2).strip()
        params = tuple(int(x) for x in args.split(",")) if args else ()
        for spec, g in GRIDS[m.group(1)](*params):
            yield str(spec), g
        return
    spec = parse_family(text)
    yield str(spec), spec.build()


def bicyclic_grid(max_n: int):
    """Every infinity graph and every theta_pendants instance with n <= max_n,
    as ``(FamilySpec, Graph)`` pairs; theta triples up to path reversal."""
    for p in range(3, max_n + 1):
        for q in range(p, max_n + 1):
            for t in range(1, max_n + 1):
                n = p + q - 1 if t == 1 else p + q + t - 2
                if n > max_n:
                    break
                spec = FamilySpec("infinity", (p, q, t))
                yield spec, spec.build()
    triples = sorted({tuple(sorted(s)) for s in _product3((0, 1, 2))
                      if sum(x == 0 for x in s) <= 1})
    for s in triples:
        ones = [i for i, x in enumerate(s) if x == 1]
        flag_sets = set()
        for mask in range(1 << len(ones)):
            flags = [0, 0, 0]
            for j, i in enumerate(ones):
                if mask >> j & 1:
                    flags[i] = 1
            # paths with equal (length, flag) are interchangeable
            flag_sets.add(tuple(sorted(zip(s, flags))))
        for combo in sorted(flag_sets):
            ss = tuple(x for x, _ in combo)
            cs = tuple(f for _, f in combo)
            base = 2 + sum(ss) + sum(cs)
            for a in range(0, max_n - base + 1):
                for b in range(0, min(a, max_n - base - a) + 1):
                    spec = FamilySpec("thetap", ss + (a, b) + cs)
                    yield spec, spec.build()


def _product3(vals):
    return [(x, y, z) for x in vals for y in vals for z in vals]


GRIDS = {"bicyclicgrid": bicyclic_grid}
