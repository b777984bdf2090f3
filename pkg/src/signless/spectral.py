"""Signless Laplacian / Laplacian matrices, a cyclic Jacobi eigensolver and
top-k eigenvalue sums."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph

SYMMETRY_TOL = 1e-12
PSD_TOL = 1e-9


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]  # non-increasing
    source: str = "generic"  # signless | laplacian | generic

    def __len__(self):
        return len(self.values)

    def partial_sum(self, k: int) -> float:
        """Sum of the ``min(k, n)`` largest values."""
        if k < 1:
            raise SpectralError("k must be at least 1")
        return float(sum(self.values[:k]))


def signless_laplacian(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n))
    for u, v in g.edges():
        m[u, v] = m[v, u] = 1.0
    m[np.diag_indices(g.n)] = g.degrees()
    return m


def laplacian(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n))
    for u, v in g.edges():
        m[u, v] = m[v, u] = -1.0
    m[np.diag_indices(g.n)] = g.degrees()
    return m


def jacobi(m: np.ndarray, vectors: bool = False, max_sweeps: int = 100):
    """Cyclic Jacobi diagonalisation, row-cyclic pivot order.

    Stops once the off-diagonal Frobenius norm is at most ``1e-12 * ||M||_F``.
    Returns the (unsorted) diagonal, plus the accumulated rotation matrix when
    ``vectors`` is set (columns are eigenvectors).
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise SpectralError("matrix must be square")
    if n and np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise SpectralError("matrix is not symmetric")
    a = (a + a.T) / 2
    v = np.eye(n) if vectors else None
    norm = np.linalg.norm(a)
    tol = 1e-12 * norm
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app, aqq = a[p, p], a[q, q]
                if abs(apq) <= 1e-300 or abs(apq) < 1e-20 * (abs(app) + abs(aqq)):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                new_p = c * col_p - s * col_q
                new_q = s * col_p + c * col_q
                a[:, p] = new_p
                a[:, q] = new_q
                a[p, :] = new_p
                a[q, :] = new_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    else:
        raise SpectralError("Jacobi iteration did not converge")
    d = np.diag(a).copy()
    return (d, v) if vectors else d


def eigenvalues_sym(m: np.ndarray, source: str = "generic") -> Spectrum:
    d = jacobi(m)
    return Spectrum(tuple(sorted(d.tolist(), reverse=True)), source)


@lru_cache(maxsize=4096)
def q_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_sym(signless_laplacian(g), "signless")


@lru_cache(maxsize=1024)
def l_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_sym(laplacian(g), "laplacian")


def s_plus(g: Graph, k: int) -> float:
    """Sum of the k largest signless Laplacian eigenvalues (k > n means k = n)."""
    if k < 1:
        raise SpectralError("k must be at least 1")
    return q_spectrum(g).partial_sum(k)


def s_lap(g: Graph, k: int) -> float:
    if k < 1:
        raise SpectralError("k must be at least 1")
    return l_spectrum(g).partial_sum(k)


def closed_form_spectrum(family: str, param: int) -> Spectrum:
    """Exact Q-spectra of K_w ("complete"), K_{1,D} ("star") and mK_2 ("matching")."""
    if param < 1:
        raise SpectralError("family parameter must be at least 1")
    if family == "complete":
        w = param
        vals = [2.0 * w - 2] + [float(w - 2)] * (w - 1)
    elif family == "star":
        d = param
        vals = [d + 1.0] + [1.0] * (d - 1) + [0.0]
    elif family == "matching":
        vals = [2.0] * param + [0.0] * param
    else:
        raise SpectralError(f"unknown closed-form family {family!r}")
    return Spectrum(tuple(sorted(vals, reverse=True)), "signless")
