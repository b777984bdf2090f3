"""Exact signless Laplacian characteristic polynomials and certified
eigenvalue comparisons built on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph
from .poly import IntPoly, RootIsolation, X, roots_above

MAX_EXACT_N = 64

HOLDS_FLOAT = "HoldsFloat"
HOLDS_CERTIFIED = "HoldsCertified"
VIOLATED_CERTIFIED = "ViolatedCertified"
INCONCLUSIVE = "Inconclusive"
NOT_APPLICABLE = "NotApplicable"
VIOLATED_FLOAT = "ViolatedFloat"


class SizeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    outcome: str
    margin: float
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.outcome in (HOLDS_FLOAT, HOLDS_CERTIFIED)

    @property
    def certified(self) -> bool:
        return self.outcome in (HOLDS_CERTIFIED, VIOLATED_CERTIFIED)


def _guard(g: Graph):
    if g.n > MAX_EXACT_N:
        raise SizeGuardError(f"exact arithmetic limited to n <= {MAX_EXACT_N}, got {g.n}")


def _q_rows(g: Graph, drop: int | None = None) -> list[list[tuple[int, int]]]:
    """Sparse rows of Q(G) (optionally with vertex ``drop`` deleted)."""
    keep = [v for v in range(g.n) if v != drop]
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = [(index[v], g.degree(v))]
        row.extend((index[w], 1) for w in g.neighbors(v) if w in index)
        rows.append(row)
    return rows


def faddeev_leverrier(rows: Sequence[Sequence[tuple[int, int]]]) -> IntPoly:
    """det(xI - A) for an integer matrix given as sparse rows ``[(col, val), ...]``.

    M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
    The divisions are exact over the integers.
    """
    n = len(rows)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = []
        for row in rows:
            acc = [0] * n
            for j, a in row:
                mj = m[j]
                if a == 1:
                    acc = [x + y for x, y in zip(acc, mj)]
                else:
                    acc = [x + a * y for x, y in zip(acc, mj)]
            am.append(acc)
        tr = sum(am[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        coeffs[n - k] = c
        for i in range(n):
            am[i][i] += c
        m = am
    return IntPoly(coeffs)


def char_poly_q(g: Graph) -> IntPoly:
    """psi(G, x) = det(xI - Q(G))."""
    _guard(g)
    return faddeev_leverrier(_q_rows(g))


def char_poly_q_minor(g: Graph, v: int) -> IntPoly:
    """Characteristic polynomial of Q(G) with row and column ``v`` deleted."""
    _guard(g)
    return faddeev_leverrier(_q_rows(g, drop=v))


def pendant_recursion(h: Graph, v: int, t: int) -> IntPoly:
    """psi of ``h`` with ``t`` new pendant vertices hung on ``v``:

        (x-1)^t psi(H) - t x (x-1)^(t-1) psi(Q_v(H))
    """
    if h.n < 2:
        raise ValueError("base graph needs at least two vertices")
    if not 0 <= v < h.n or t < 0:
        raise ValueError("bad vertex or pendant count")
    base = char_poly_q(h)
    if t == 0:
        return base
    xm1 = IntPoly((-1, 1))
    return xm1 ** t * base - (X * t) * xm1 ** (t - 1) * char_poly_q_minor(h, v)


def u1_quintic(n: int, a: int) -> IntPoly:
    """Quintic cofactor of psi(U^1_n(a, b)), b = n - 3 - a."""
    if n < 5 or not 0 <= a <= n - 3:
        raise ValueError(f"need n >= 5 and 0 <= a <= n-3, got n={n}, a={a}")
    return IntPoly((
        -4,
        3 * n + 8,
        -((2 * a + 7) * n - 2 * a * a - 6 * a + 7),
        (a + 5) * n - a * a - 3 * a + 7,
        -(n + 5),
        1,
    ))


def infinity_prime_poly(n: int) -> IntPoly:
    """(x-1)^(n-4) (x-3) (x^3 - (n+3)x^2 + 3nx - 8)."""
    if n < 5:
        raise ValueError("need n >= 5")
    cubic = IntPoly((-8, 3 * n, -(n + 3), 1))
    return IntPoly((-1, 1)) ** (n - 4) * IntPoly((-3, 1)) * cubic


def q_root_isolation(g: Graph, width=Fraction(1, 1 << 20)) -> RootIsolation:
    _guard(g)
    psi = char_poly_q(g)
    # q_1 <= 2 * max degree < 2n; a symmetric power-of-two bracket puts every
    # integer on the bisection grid, so integer eigenvalues come out exact
    top = Fraction(1 << max(1, (2 * g.n).bit_length()))
    return RootIsolation(psi, Fraction(width), bracket=(-top, top))


def _topk(iso: RootIsolation, k: int) -> tuple[Fraction, Fraction]:
    roots = iso.expanded(descending=True)[:k]
    return sum((r.lo for r in roots), Fraction(0)), sum((r.hi for r in roots), Fraction(0))


def certify_topk_sum_leq(g: Graph, k: int, bound, width=Fraction(1, 1 << 12),
                         floor=Fraction(1, 1 << 80)) -> Verdict:
    """Decide ``S_k^+(G) <= bound`` exactly from isolating intervals of psi(G)."""
    _guard(g)
    if k < 1:
        raise ValueError("k must be at least 1")
    bound = Fraction(bound)
    iso = q_root_isolation(g, width)
    w = Fraction(width)
    while True:
        lo, hi = _topk(iso, k)
        if hi <= bound:
            return Verdict(HOLDS_CERTIFIED, float(bound - hi),
                           f"S_{k}^+ in [{float(lo):.12g}, {float(hi):.12g}] <= {bound}")
        if lo > bound:
            return Verdict(VIOLATED_CERTIFIED, float(bound - lo),
                           f"S_{k}^+ in [{float(lo):.12g}, {float(hi):.12g}] > {bound}")
        if w <= floor:
            return Verdict(INCONCLUSIVE, float(bound - (lo + hi) / 2),
                           f"interval [{float(lo)}, {float(hi)}] straddles {bound}")
        w /= 1 << 16
        iso.refine(w)


def certify_eigenvalue_position(g: Graph, i: int, relation: str, threshold) -> Verdict:
    """Decide ``q_i(G) <relation> threshold`` for relation in {'<', '=', '>'}.

    Counts eigenvalues above the threshold (with multiplicity) by Sturm
    sequences of the square-free factors of psi, and the multiplicity of the
    threshold itself from an exact evaluation.
    """
    _guard(g)
    if not 1 <= i <= g.n:
        raise ValueError(f"rank {i} outside 1..{g.n}")
    if relation not in ("<", "=", ">"):
        raise ValueError(f"unknown relation {relation!r}")
    t = Fraction(threshold)
    psi = char_poly_q(g)
    above, at = roots_above(psi, t)
    if above >= i:
        actual = ">"
    elif above + at >= i:
        actual = "="
    else:
        actual = "<"
    detail = f"{above} eigenvalues > {t}, multiplicity {at} at {t}; q_{i} {actual} {t}"
    outcome = HOLDS_CERTIFIED if actual == relation else VIOLATED_CERTIFIED
    return Verdict(outcome, 0.0, detail)


def float_roots(p: IntPoly, width=Fraction(1, 1 << 40)) -> list[float]:
    """Real roots with multiplicity, descending, from exact isolation."""
    iso = RootIsolation(p, Fraction(width))
    return [float(r.mid) for r in iso.expanded(descending=True)]


def dump_polys(polys: Sequence[IntPoly]) -> str:
    return "".join(p.to_text() + "\n" for p in polys)


def load_polys(text: str) -> list[IntPoly]:
    return [IntPoly.from_text(line) for line in text.splitlines() if line.strip()]

