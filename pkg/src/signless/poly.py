"""Dense integer polynomials, Sturm sequences and exact real-root isolation.

Coefficients are stored low-to-high. Everything here is exact: integer
pseudo-remainder sequences, rational (dyadic) interval endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class PolyError(ValueError):
    pass


def _strip(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in coeffs))

    @classmethod
    def x_minus(cls, r: int) -> "IntPoly":
        return cls((-r, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_x(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        return IntPoly((0,) * k + self.coeffs) if self.coeffs else self

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of p(x) at a rational point."""
        x = Fraction(x)
        a, b = x.numerator, x.denominator
        acc = 0
        bpow = 1
        # homogenised Horner: p(a/b) * b**d
        for c in reversed(self.coeffs):
            acc = acc * a + c * bpow
            bpow *= b
        return (acc > 0) - (acc < 0)

    @cached_property
    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide by content, leading coefficient made positive."""
        if not self.coeffs:
            return self
        g = self.content
        if self.lc < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, line: str) -> "IntPoly":
        return cls(int(tok) for tok in line.split())

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append(f"{c}" + ("" if i == 0 else "x" if i == 1 else f"x^{i}"))
        return "IntPoly(" + " + ".join(terms) + ")"


X = IntPoly((0, 1))


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a mod b."""
    if not b:
        raise PolyError("division by zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    delta = a.degree - db + 1
    if delta <= 0:
        return a
    bc = b.coeffs
    for _ in range(delta):
        if len(r) - 1 < db:
            r = [c * lb for c in r]
            continue
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, c in enumerate(bc):
            r[shift + j] -= lr * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(r)


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a / b when b divides a in Q[x] and the quotient is integral."""
    if not b:
        raise PolyError("division by zero polynomial")
    r = [Fraction(c) for c in a.coeffs]
    db = b.degree
    q = [Fraction(0)] * max(a.degree - db + 1, 0)
    lb = b.lc
    for i in range(len(q) - 1, -1, -1):
        coef = r[i + db] / lb
        q[i] = coef
        if coef:
            for j, c in enumerate(b.coeffs):
                r[i + j] -= coef * c
    if any(r):
        raise PolyError("non-exact polynomial division")
    if any(c.denominator != 1 for c in q):
        raise PolyError("quotient is not integral")
    return IntPoly(int(c) for c in q)


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z[x] by the primitive pseudo-remainder sequence."""
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, prem(a, b).primitive()
    if a.degree <= 0:
        return IntPoly((1,)) if a else IntPoly()
    return a


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Factors ``a_i`` with multiplicity ``i`` such that p is a constant times
    prod a_i**i; each a_i is square-free, primitive, and the a_i are coprime."""
    if not p:
        raise PolyError("zero polynomial")
    chain = [p.primitive()]
    while chain[-1].degree > 0:
        chain.append(gcd(chain[-1], chain[-1].derivative()))
    # h[j]: roots of multiplicity > j, each once
    h = [exact_div(chain[j], chain[j + 1]).primitive() for j in range(len(chain) - 1)]
    h.append(IntPoly((1,)))
    out = []
    for i in range(1, len(h)):
        a = exact_div(h[i - 1], h[i]).primitive()
        if a.degree > 0:
            out.append((a, i))
    return out


def squarefree_part(p: IntPoly) -> IntPoly:
    if not p:
        raise PolyError("zero polynomial")
    if p.degree <= 0:
        return IntPoly((1,))
    return exact_div(p.primitive(), gcd(p, p.derivative())).primitive()


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of ``p`` with every member scaled by a positive constant."""
    if not p:
        raise PolyError("zero polynomial")
    seq = [p, p.derivative()]
    while seq[-1]:
        a, b = seq[-2], seq[-1]
        r = prem(a, b)
        if not r:
            break
        delta = a.degree - b.degree + 1
        if b.lc < 0 and delta % 2:
            r = -r
        g = r.content
        seq.append(IntPoly([-c // g for c in r.coeffs]))
    if not seq[-1]:
        seq.pop()
    return seq


def _variations(signs: Iterable[int]) -> int:
    v, prev = 0, 0
    for s in signs:
        if s:
            if prev and s != prev:
                v += 1
            prev = s
    return v


def _sign_inf(p: IntPoly, positive: bool) -> int:
    s = (p.lc > 0) - (p.lc < 0)
    return s if positive or p.degree % 2 == 0 else -s


class SturmChain:
    def __init__(self, p: IntPoly):
        self.p = p
        self.seq = sturm_sequence(p)

    def variations(self, x) -> int:
        if x == math.inf:
            return _variations(_sign_inf(q, True) for q in self.seq)
        if x == -math.inf:
            return _variations(_sign_inf(q, False) for q in self.seq)
        return _variations(q.sign_at(x) for q in self.seq)

    def count(self, lo, hi) -> int:
        """Distinct real roots in ``(lo, hi]``."""
        return self.variations(lo) - self.variations(hi)


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    if not p:
        raise PolyError("zero polynomial")
    lo, hi = _as_point(lo), _as_point(hi)
    if not lo < hi:
        raise PolyError("need lo < hi")
    return SturmChain(squarefree_part(p)).count(lo, hi)


def _as_point(x):
    if x in (math.inf, -math.inf):
        return x
    return Fraction(x)


def root_bound(p: IntPoly) -> Fraction:
    """A power of two strictly exceeding every |root| (Cauchy bound)."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    b = 1 + Fraction(m, lc)
    k = 0
    while (1 << k) <= b:
        k += 1
    return Fraction(1 << k)


@dataclass(frozen=True)
class RootInterval:
    """Half-open interval ``(lo, hi]`` holding one distinct root, or the
    point ``lo == hi`` when the root is known exactly."""
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _refine(p: IntPoly, iv: RootInterval, width: Fraction) -> RootInterval:
    """Shrink an isolating interval of a square-free ``p`` by sign bisection."""
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    s_hi = p.sign_at(hi)
    if s_hi == 0:
        return RootInterval(hi, hi, iv.multiplicity)
    # lo may itself be a root of p (owned by the neighbouring interval), so
    # steer by the sign at hi: the single simple root sits where it flips
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = p.sign_at(m)
        if sm == 0:
            return RootInterval(m, m, iv.multiplicity)
        if sm == s_hi:
            hi = m
        else:
            lo = m
    return RootInterval(lo, hi, iv.multiplicity)


def _isolate_squarefree(p: IntPoly, width: Fraction, lo=None, hi=None) -> list[RootInterval]:
    chain = SturmChain(p)
    if lo is None:
        b = root_bound(p)
        lo, hi = -b, b
    out = []
    stack = [(lo, hi, chain.variations(lo), chain.variations(hi))]
    while stack:
        a, b, va, vb = stack.pop()
        c = va - vb
        if c == 0:
            continue
        if c == 1:
            out.append(_refine(p, RootInterval(a, b), width))
            continue
        m = (a + b) / 2
        vm = chain.variations(m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    return out


class RootIsolation:
    """All real roots of an integer polynomial with multiplicities.

    Holds the square-free factors so intervals can be refined later.
    """

    def __init__(self, p: IntPoly, width: Fraction = Fraction(1, 1024), bracket=None):
        if not p:
            raise PolyError("zero polynomial")
        self.p = p
        self.factors = squarefree_decomposition(p) if p.degree > 0 else []
        self._items: list[tuple[RootInterval, IntPoly]] = []
        for f, mult in self.factors:
            lo, hi = bracket if bracket is not None else (None, None)
            for iv in _isolate_squarefree(f, Fraction(width), lo, hi):
                self._items.append((RootInterval(iv.lo, iv.hi, mult), f))
        self._separate()

    def _separate(self):
        items = sorted(self._items, key=lambda t: (t[0].lo, t[0].hi))
        changed = True
        while changed:
            changed = False
            items.sort(key=lambda t: (t[0].lo, t[0].hi))
            for i in range(len(items) - 1):
                (a, fa), (b, fb) = items[i], items[i + 1]
                if _overlap(a, b):
                    items[i] = (_refine(fa, a, a.width / 2), fa)
                    items[i + 1] = (_refine(fb, b, b.width / 2), fb)
                    changed = True
        self._items = items

    def refine(self, width: Fraction) -> "RootIsolation":
        self._items = [(_refine(f, iv, Fraction(width)), f) for iv, f in self._items]
        self._separate()
        return self

    @property
    def intervals(self) -> list[RootInterval]:
        return [iv for iv, _ in self._items]

    def expanded(self, descending: bool = True) -> list[RootInterval]:
        """One entry per root counted with multiplicity."""
        out = []
        for iv in self.intervals:
            out.extend([iv] * iv.multiplicity)
        out.sort(key=lambda iv: (iv.lo, iv.hi), reverse=descending)
        return out


def _overlap(a: RootInterval, b: RootInterval) -> bool:
    if a.exact and b.exact:
        return False
    if a.exact:
        return b.lo < a.lo <= b.hi
    if b.exact:
        return a.lo < b.lo <= a.hi
    return a.lo < b.hi and b.lo < a.hi


def isolate_roots(p: IntPoly, width=Fraction(1, 1024)) -> list[RootInterval]:
    """Isolating intervals (ascending) for all distinct real roots, each of
    width at most ``width``, with multiplicities."""
    return RootIsolation(p, Fraction(width)).intervals


def roots_above(p: IntPoly, t) -> tuple[int, int]:
    """``(count of roots > t, multiplicity of t as a root)``, with multiplicity,
    decided exactly from the square-free decomposition."""
    t = Fraction(t)
    above = at = 0
    for f, mult in squarefree_decomposition(p):
        chain = SturmChain(f)
        above += mult * chain.count(t, math.inf)
        if f.sign_at(t) == 0:
            at += mult
    return above, at
