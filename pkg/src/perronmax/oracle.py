"""Exhaustive enumeration of trees and connected graphs with a given degree sequence.

This is the brute-force ground truth the theory is checked against. It is
only meant for small orders (defaults: 12 vertices for trees, 8 for
connected graphs).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .graph import (
    DegreeSequence,
    Graph,
    canonical_form,
    is_connected_graphical,
    is_graphical,
    is_tree_sequence,
    tree_canonical_form,
)

__all__ = [
    "EnumerationReport",
    "MAX_CONNECTED_N",
    "MAX_TREE_N",
    "connected_graphical_sequences",
    "dense_lambdas",
    "enumerate_connected_graphs",
    "enumerate_trees",
    "extremal_report",
    "labeled_tree_count",
    "tree_sequences",
]

MAX_TREE_N = 12
MAX_CONNECTED_N = 8
TIE_TOL = 1e-10
_CHUNK = 4096


def _check_limit(n: int, max_n: int, default: int, what: str) -> None:
    if n > max_n:
        raise ValueError(f"{what} enumeration limited to n <= {max_n} (got n={n}); raise max_n to override")
    if n > default:
        warnings.warn(f"{what} enumeration at n={n} may be slow", stacklevel=3)


# -- sequences ---------------------------------------------------------------


def _partitions(total: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            yield (first,) + rest


def tree_sequences(n: int) -> list[DegreeSequence]:
    """All tree sequences of length ``n``, in decreasing lexicographic order."""
    if n < 2:
        return []
    out = []
    for part in _partitions(n - 2, n - 2, n):
        ds = [p + 1 for p in part] + [1] * (n - len(part))
        out.append(DegreeSequence(tuple(ds)))
    return out


def connected_graphical_sequences(n: int) -> list[DegreeSequence]:
    """All degree sequences of length ``n`` realizable by a connected graph."""
    out = []

    def rec(prefix: list[int], cap: int):
        if len(prefix) == n:
            if is_connected_graphical(prefix):
                out.append(DegreeSequence(tuple(prefix)))
            return
        for d in range(cap, 0, -1):
            prefix.append(d)
            rec(prefix, d)
            prefix.pop()

    if n >= 2:
        rec([], n - 1)
    return out


# -- trees -------------------------------------------------------------------


def labeled_tree_count(pi: DegreeSequence | Sequence[int]) -> int:
    """Labelled trees where vertex ``i`` has degree ``pi[i]``: (n-2)!/prod (d_i-1)!."""
    ds = list(pi)
    return factorial(len(ds) - 2) // prod(factorial(d - 1) for d in ds)


def _iter_labeled_batches(ds: Sequence[int]) -> Iterator[np.ndarray]:
    """Yield ``(k, n - 1, 2)`` edge arrays covering every labelled tree."""
    n = len(ds)
    state = np.array([v for v, d in enumerate(ds) for _ in range(d - 1)], dtype=np.int64)
    state.sort()
    buf = np.empty((_CHUNK, n - 2), dtype=np.int64)
    done = False
    while not done:
        k, done = kernels.fill_permutations(state, buf)
        yield kernels.prufer_decode_batch(buf[:k], n)


def enumerate_trees(
    pi: DegreeSequence | Sequence[int],
    max_n: int = MAX_TREE_N,
    stats: dict | None = None,
) -> Iterator[Graph]:
    """One tree per isomorphism class with degree sequence ``pi``.

    Walks every Prüfer code in which vertex ``i`` occurs ``pi[i] - 1`` times
    (lexicographic order) and keeps the first tree of each class. If
    ``stats`` is given, ``stats["labeled"]`` receives the number of codes.
    """
    ds = sorted((int(d) for d in pi), reverse=True)
    if not is_tree_sequence(ds):
        raise ValueError(f"{tuple(ds)} is not a tree sequence")
    n = len(ds)
    _check_limit(n, max_n, MAX_TREE_N, "tree")
    seen: set = set()
    labeled = 0
    for batch in _iter_labeled_batches(ds):
        labeled += len(batch)
        if n <= 31:
            keys = kernels.tree_codes_batch(batch, n).tolist()
        else:
            keys = [tree_canonical_form(Graph(n, e)) for e in batch.tolist()]
        for key, edges in zip(keys, batch):
            if key not in seen:
                seen.add(key)
                yield Graph(n, edges.tolist())
    if stats is not None:
        stats["labeled"] = labeled


# -- connected graphs --------------------------------------------------------


def enumerate_connected_graphs(
    pi: DegreeSequence | Sequence[int],
    max_n: int = MAX_CONNECTED_N,
    stats: dict | None = None,
) -> Iterator[Graph]:
    """One connected graph per isomorphism class with degree sequence ``pi``.

    Vertex ``i`` gets degree ``pi[i]``. Neighbours of vertex ``i`` are
    chosen among later vertices; later vertices with equal degree and equal
    adjacency to ``0..i-1`` are interchangeable, so only prefixes of each
    such class are tried. Residual sequences are pruned by Erdős–Gallai.
    ``stats["labeled"]`` receives the number of complete realizations
    visited, which is symmetry-reduced and so not the labelled count.
    """
    ds = sorted((int(d) for d in pi), reverse=True)
    if not is_connected_graphical(ds):
        raise ValueError(f"{tuple(ds)} has no connected realization")
    n = len(ds)
    _check_limit(n, max_n, MAX_CONNECTED_N, "connected")
    adj = [0] * n
    res = list(ds)
    seen: set[bytes] = set()
    labeled = [0]
    full = (1 << n) - 1

    def connected() -> bool:
        reach, frontier = 1, 1
        while frontier:
            nxt = 0
            v = 0
            f = frontier
            while f:
                if f & 1:
                    nxt |= adj[v]
                f >>= 1
                v += 1
            frontier = nxt & ~reach
            reach |= nxt
        return reach == full

    def compositions(sizes: list[int], total: int) -> Iterator[list[int]]:
        if not sizes:
            if total == 0:
                yield []
            return
        room = sum(sizes[1:])
        for c in range(min(sizes[0], total), max(0, total - room) - 1, -1):
            for rest in compositions(sizes[1:], total - c):
                yield [c] + rest

    def rec(i: int) -> Iterator[Graph]:
        if i == n:
            labeled[0] += 1
            if connected():
                g = Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if adj[a] >> b & 1])
                key = canonical_form(g)
                if key not in seen:
                    seen.add(key)
                    yield g
            return
        if res[i] == 0:
            yield from rec(i + 1)
            return
        done_mask = (1 << i) - 1
        classes: dict[tuple[int, int], list[int]] = {}
        for j in range(i + 1, n):
            if res[j] > 0:
                classes.setdefault((ds[j], adj[j] & done_mask), []).append(j)
        groups = list(classes.values())
        need = res[i]
        for counts in compositions([len(gr) for gr in groups], need):
            chosen = [v for gr, c in zip(groups, counts) for v in gr[:c]]
            for j in chosen:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                res[j] -= 1
            res[i] = 0
            if is_graphical(res[i + 1:]):
                yield from rec(i + 1)
            res[i] = need
            for j in chosen:
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)
                res[j] += 1

    yield from rec(0)
    if stats is not None:
        stats["labeled"] = labeled[0]


# -- reports -----------------------------------------------------------------


def dense_lambdas(graphs: Sequence[Graph]) -> np.ndarray:
    """Spectral radii from a batched dense symmetric eigensolver."""
    if not graphs:
        return np.empty(0)
    n = graphs[0].n
    mats = np.zeros((len(graphs), n, n))
    for k, g in enumerate(graphs):
        e = g.edge_array()
        mats[k, e[:, 0], e[:, 1]] = 1.0
        mats[k, e[:, 1], e[:, 0]] = 1.0
    return np.linalg.eigvalsh(mats)[:, -1]


@dataclass
class EnumerationReport:
    sequence: DegreeSequence
    graph_class: str
    count_labeled: int
    count_iso_classes: int
    argmax: Graph
    lambda_max: float
    argmin: Graph
    lambda_min: float
    argmax_ties: int
    argmin_ties: int
    graphs: list[Graph]
    lambdas: np.ndarray

    def to_dict(self) -> dict:
        from .io import encode_graph6

        return {
            "sequence": list(self.sequence),
            "class": self.graph_class,
            "count_labeled": self.count_labeled,
            "count_iso_classes": self.count_iso_classes,
            "lambda_max": self.lambda_max,
            "argmax": encode_graph6(self.argmax),
            "argmax_ties": self.argmax_ties,
            "lambda_min": self.lambda_min,
            "argmin": encode_graph6(self.argmin),
            "argmin_ties": self.argmin_ties,
        }


def extremal_report(
    pi: DegreeSequence | Sequence[int],
    graph_class: str = "trees",
    max_n: int | None = None,
) -> EnumerationReport:
    """Enumerate a class and locate its spectral-radius extremes.

    Ties (within ``TIE_TOL``) are broken by the smallest canonical code.
    """
    stats: dict = {}
    if graph_class in {"tree", "trees"}:
        graphs = list(enumerate_trees(pi, max_n or MAX_TREE_N, stats))
    elif graph_class == "connected":
        graphs = list(enumerate_connected_graphs(pi, max_n or MAX_CONNECTED_N, stats))
    else:
        raise ValueError(f"unknown graph class {graph_class!r}")
    lams = dense_lambdas(graphs)
    top, bottom = float(lams.max()), float(lams.min())
    hi = [k for k in range(len(graphs)) if lams[k] >= top - TIE_TOL]
    lo = [k for k in range(len(graphs)) if lams[k] <= bottom + TIE_TOL]
    kmax = min(hi, key=lambda k: canonical_form(graphs[k]))
    kmin = min(lo, key=lambda k: canonical_form(graphs[k]))
    return EnumerationReport(
        sequence=DegreeSequence(tuple(pi)),
        graph_class="trees" if graph_class in {"tree", "trees"} else "connected",
        count_labeled=stats["labeled"],
        count_iso_classes=len(graphs),
        argmax=graphs[kmax],
        lambda_max=top,
        argmin=graphs[kmin],
        lambda_min=bottom,
        argmax_ties=len(hi),
        argmin_ties=len(lo),
        graphs=graphs,
        lambdas=lams,
    )
