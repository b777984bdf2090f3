"""Canonical certificates and exhaustive generation of connected graphs.

The canonical labeling is found by colour refinement plus an
individualisation search; the certificate is the graph6 string of the graph
relabeled so that its upper-triangle bit string is lexicographically maximal
among all search leaves.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, Iterator

from . import graph6
from .graph import Graph, _bits, graph_class

log = logging.getLogger(__name__)

MAX_CANON_N = 12
MAX_ENUM_N = 10
DEFAULT_ENUM_N = 8


class EnumerationError(ValueError):
    pass


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable.

    Ordering of the new cells depends only on old cell order and counts, so the
    result is label-invariant.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new.append(groups[sig])
        if len(new) == len(cells):
            return new
        cells = new


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle bits (graph6 column order) of the graph relabeled by ``order``
    (order[i] is the old vertex that becomes i), packed into an int."""
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_order(g: Graph) -> list[int]:
    """A canonical vertex order: ``order[i]`` is the vertex placed at position i."""
    n = g.n
    if n > MAX_CANON_N:
        raise EnumerationError(f"canonical form limited to n <= {MAX_CANON_N}")
    adj = g.adj
    if n <= 1:
        return list(range(n))
    degs = g.degrees()
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(degs[v], []).append(v)
    root = _refine(adj, [by_deg[d] for d in sorted(by_deg)])

    best_code = -1
    best_order: list[int] = []
    autos: list[list[int]] = []

    def orbit_reps(cell: list[int], fixed: list[int]) -> list[int]:
        # twins are interchangeable; so are vertices joined by a known
        # automorphism that fixes every individualised vertex
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, u in enumerate(cell):
            for w in cell[i + 1:]:
                bu, bw = 1 << u, 1 << w
                if adj[u] & ~bw == adj[w] & ~bu:
                    parent[find(w)] = find(u)
        for perm in autos:
            if all(perm[x] == x for x in fixed):
                for u in cell:
                    w = perm[u]
                    if w in parent:
                        ru, rw = find(u), find(w)
                        if ru != rw:
                            parent[max(ru, rw)] = min(ru, rw)
        seen = set()
        reps = []
        for v in cell:
            r = find(v)
            if r not in seen:
                seen.add(r)
                reps.append(v)
        return reps

    def search(cells: list[list[int]], fixed: list[int]):
        nonlocal best_code, best_order
        target = None
        for c in cells:
            if len(c) > 1 and (target is None or len(c) < len(target)):
                target = c
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            elif code == best_code:
                # order -> best_order is an automorphism
                perm = [0] * n
                for i in range(n):
                    perm[order[i]] = best_order[i]
                autos.append(perm)
            return
        idx = next(i for i, c in enumerate(cells) if c is target)
        for v in orbit_reps(target, fixed):
            rest = [w for w in target if w != v]
            split = cells[:idx] + [[v], rest] + cells[idx + 1:]
            search(_refine(adj, split), fixed + [v])

    search(root, [])
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class certificate (graph6 bytes of the canonical relabeling)."""
    return graph6.encode(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.e == h.e and canonical_form(g) == canonical_form(h)


def _extend(parents: list[bytes]) -> set[bytes]:
    out = set()
    for cert in parents:
        g = graph6.decode(cert)
        n = g.n
        rows = list(g.adj) + [0]
        for nbrs in range(1, 1 << n):
            new_rows = rows[:]
            new_rows[n] = nbrs
            for v in _bits(nbrs):
                new_rows[v] |= 1 << n
            out.add(canonical_form(Graph(n + 1, tuple(new_rows))))
    return out


@lru_cache(maxsize=None)
def _level(n: int, jobs: int = 1) -> tuple[bytes, ...]:
    if n == 1:
        return (graph6.encode(Graph(1, (0,))),)
    parents = list(_level(n - 1, jobs))
    if jobs > 1 and len(parents) > jobs:
        chunks = [parents[i::jobs] for i in range(jobs)]
        found: set[bytes] = set()
        with ProcessPoolExecutor(jobs) as pool:
            for part in pool.map(_extend, chunks):
                found |= part
    else:
        found = _extend(parents)
    return tuple(sorted(found))


def connected_graphs(n: int, allow_large: bool = False, jobs: int = 1) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class of
    connected graphs on n vertices, in certificate order."""
    if n < 1:
        raise EnumerationError("n must be at least 1")
    if n > MAX_ENUM_N or (n > DEFAULT_ENUM_N and not allow_large):
        raise EnumerationError(
            f"n={n} exceeds the default guard {DEFAULT_ENUM_N}; pass allow_large "
            f"(n <= {MAX_ENUM_N}) and expect a long run")
    if n > DEFAULT_ENUM_N:
        log.warning("enumerating connected graphs on %d vertices; this takes a long time", n)
    for cert in _level(n, max(1, jobs)):
        yield graph6.decode(cert)


def filter_class(graphs: Iterable[Graph], tag: str) -> Iterator[Graph]:
    """Keep graphs whose cyclomatic class tag equals ``tag`` ("all" keeps everything)."""
    for g in graphs:
        if tag == "all" or graph_class(g).tag == tag:
            yield g
