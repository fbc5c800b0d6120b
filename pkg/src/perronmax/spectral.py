"""Spectral radius, Perron vector, Rayleigh quotient and neighbour sums."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import DisconnectedGraphError, Graph, is_connected

__all__ = [
    "DEFAULT_TOL",
    "ConvergenceError",
    "PerronResult",
    "default_max_iter",
    "dense_perron",
    "neighbor_sum",
    "neighbor_sums",
    "pendant_relation_check",
    "perron",
    "rayleigh_quotient",
]

DEFAULT_TOL = 1e-12


def default_max_iter(n: int) -> int:
    return 100 * n + 10000


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(f"{message} (residual {residual:.3e} after {iterations} iterations)")
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class PerronResult:
    """Largest adjacency eigenvalue ``lam`` with its positive unit eigenvector ``f``."""

    lam: float
    f: np.ndarray
    residual: float
    iterations: int

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "f": [float(x) for x in self.f],
            "residual": self.residual,
            "iterations": self.iterations,
        }


def _as_vector(g: Graph, f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.shape != (g.n,):
        raise ValueError(f"vertex function has shape {f.shape}, graph has {g.n} vertices")
    return f


def neighbor_sum(g: Graph, f, v: int) -> float:
    """Sum of ``f`` over the neighbours of ``v``."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range [0, {g.n})")
    f = _as_vector(g, f)
    return float(sum(f[u] for u in g.neighbors(v)))


def neighbor_sums(g: Graph, f) -> np.ndarray:
    """All neighbour sums at once, i.e. ``A @ f``."""
    indptr, indices = g.csr()
    return kernels.matvec(indptr, indices, _as_vector(g, f))


def rayleigh_quotient(g: Graph, f) -> float:
    f = _as_vector(g, f)
    denom = float(f @ f)
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    if g.m == 0:
        return 0.0
    e = g.edge_array()
    return 2.0 * float(np.dot(f[e[:, 0]], f[e[:, 1]])) / denom


def perron(g: Graph, tol: float = DEFAULT_TOL, max_iter: int | None = None) -> PerronResult:
    """Spectral radius and Perron vector by power iteration on ``A + I``.

    The shift keeps the dominant eigenvalue strictly dominant on bipartite
    graphs, whose adjacency spectrum is symmetric about zero.
    """
    if g.n < 2:
        raise ValueError("perron() needs at least two vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("perron() needs a connected graph")
    if max_iter is None:
        max_iter = default_max_iter(g.n)
    indptr, indices = g.csr()
    lam, f, residual, its, ok = kernels.power_iteration(indptr, indices, float(tol), int(max_iter))
    if not ok:
        raise ConvergenceError("power iteration did not converge", float(residual), int(its))
    f = np.asarray(f, dtype=float)
    if f.min() <= 0.0:
        raise ConvergenceError("Perron vector lost positivity", float(residual), int(its))
    return PerronResult(float(lam), f, float(residual), int(its))


def dense_perron(g: Graph) -> tuple[float, np.ndarray]:
    """Reference ``(lam, f)`` from a dense symmetric eigensolver."""
    w, vecs = np.linalg.eigh(g.adjacency_matrix())
    f = vecs[:, -1]
    if f.sum() < 0:
        f = -f
    return float(w[-1]), f


def pendant_relation_check(g: Graph, result: PerronResult, tol: float = 1e-8) -> bool:
    """Check the neighbour-sum ordering and the pendant-edge ratio.

    * ``f(u) > f(v)`` exactly when ``N_f(u) > N_f(v)`` (ties within ``tol``);
    * for every edge ``uv`` with ``v`` pendant and ``u`` not, ``f(u)/f(v)``
      equals ``lam`` and ``f(u) > f(v)``.
    """
    f = result.f
    lam = result.lam
    nf = neighbor_sums(g, f)
    deg = g.degrees()
    for u, v in g.edge_list():
        for a, b in ((u, v), (v, u)):
            if deg[b] == 1 and deg[a] > 1:
                if not f[a] > f[b]:
                    return False
                if abs(lam - f[a] / f[b]) > tol * max(1.0, lam):
                    return False
    chunk = max(1, 2_000_000 // max(g.n, 1))
    for start in range(0, g.n, chunk):
        df = f[start:start + chunk, None] - f[None, :]
        dn = nf[start:start + chunk, None] - nf[None, :]
        if np.any((df > tol) & (dn < -tol)) or np.any((df < -tol) & (dn > tol)):
            return False
    return True
