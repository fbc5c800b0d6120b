"""Breadth-first orderings with decreasing degrees (BFD-orderings).

An ordering ``v0 < v1 < ...`` of a connected graph is a BFD-ordering when

* (B1) children of an earlier vertex precede children of a later one, and
* (B2) degrees are non-increasing along the ordering.

A vertex's parent is its earliest neighbour in the previous BFS layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .graph import DegreeSequence, DisconnectedGraphError, Graph, is_connected, is_tree_sequence

__all__ = [
    "BfdOrdering",
    "BfdVerdict",
    "LayeringError",
    "SearchBudgetExceeded",
    "construct_bfd_tree",
    "find_bfd_ordering",
    "is_bfd_ordering",
    "perron_consistency_check",
    "spider",
    "spider_leg_lengths",
]

F_TIE_TOL = 1e-9


class LayeringError(ValueError):
    """The ordering is not a breadth-first layering of the graph."""


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BfdOrdering:
    """Vertex order with per-vertex parent (``-1`` for the root) and height."""

    order: tuple[int, ...]
    parent: tuple[int, ...]
    height: tuple[int, ...]

    @property
    def root(self) -> int:
        return self.order[0]

    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> BfdOrdering:
        """Derive heights (BFS distance from ``order[0]``) and parents."""
        order = tuple(int(v) for v in order)
        if sorted(order) != list(range(g.n)):
            raise LayeringError("order is not a permutation of the vertices")
        height = _bfs_distances(g, order[0])
        if min(height) < 0:
            raise DisconnectedGraphError("graph is not connected")
        pos = [0] * g.n
        for i, v in enumerate(order):
            pos[v] = i
        parent = [-1] * g.n
        for v in order[1:]:
            ups = [u for u in g.neighbors(v) if height[u] == height[v] - 1]
            parent[v] = min(ups, key=pos.__getitem__)
        return cls(order, tuple(parent), tuple(height))

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "parent": list(self.parent),
            "height": list(self.height),
        }


@dataclass(frozen=True)
class BfdVerdict:
    """Outcome of :func:`is_bfd_ordering`; truthy iff both properties hold."""

    ok: bool
    prop: str | None = None
    pair: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return f"{self.prop} violated by vertices {self.pair[0]} < {self.pair[1]}"


def _bfs_distances(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.n
    dist[root] = 0
    queue = [root]
    for v in queue:
        for u in g.neighbors(v):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def is_bfd_ordering(g: Graph, ordering: BfdOrdering) -> BfdVerdict:
    order = ordering.order
    if sorted(order) != list(range(g.n)):
        raise LayeringError("order is not a permutation of the vertices")
    root = order[0]
    dist = _bfs_distances(g, root)
    if list(ordering.height) != dist:
        raise LayeringError("heights do not match BFS distances from the root")
    pos = ordering.position()
    for a, b in zip(order, order[1:]):
        if dist[a] > dist[b]:
            raise LayeringError(f"height decreases from vertex {a} to vertex {b}")
    if ordering.parent[root] != -1:
        raise LayeringError("root must not have a parent")
    for v in order[1:]:
        ups = [u for u in g.neighbors(v) if dist[u] == dist[v] - 1]
        if ordering.parent[v] != min(ups, key=pos.__getitem__):
            raise LayeringError(f"parent of vertex {v} is not its earliest upper neighbour")
    par = ordering.parent
    for a, b in zip(order[1:], order[2:]):
        if pos[par[a]] > pos[par[b]]:
            return BfdVerdict(False, "B1", (a, b))
    for a, b in zip(order, order[1:]):
        if g.degree(a) < g.degree(b):
            return BfdVerdict(False, "B2", (a, b))
    return BfdVerdict(True)


def perron_consistency_check(g: Graph, ordering: BfdOrdering, f, tol: float = F_TIE_TOL) -> bool:
    """True iff no vertex is preceded by one with strictly smaller ``f``."""
    f = np.asarray(f, dtype=float)
    lowest = np.inf
    for v in ordering.order:
        if f[v] > lowest + tol:
            return False
        lowest = min(lowest, f[v])
    return True


# -- search ------------------------------------------------------------------


def _tie_groups(g: Graph, kids: list[int], f, tol: float) -> list[list[int]]:
    if f is None:
        kids = sorted(kids, key=lambda x: (-g.degree(x), x))
    else:
        kids = sorted(kids, key=lambda x: (-g.degree(x), -f[x], x))
    groups: list[list[int]] = []
    for x in kids:
        if groups:
            head = groups[-1][0]
            if g.degree(head) == g.degree(x) and (f is None or abs(f[head] - f[x]) <= tol):
                groups[-1].append(x)
                continue
        groups.append([x])
    return groups


def _search_from(g: Graph, root: int, f, tol: float, exhaustive: bool, budget: list[int]):
    n = g.n
    order = [root]
    placed = bytearray(n)
    placed[root] = 1

    def admissible(seq: Sequence[int], lowest: float) -> float | None:
        if g.degree(seq[0]) > g.degree(order[-1]):
            return None
        if f is not None:
            for x in seq:
                if f[x] > lowest + tol:
                    return None
                lowest = min(lowest, f[x])
        return lowest

    def extend(ptr: int, lowest: float) -> bool:
        while ptr < len(order):
            kids = [x for x in g.neighbors(order[ptr]) if not placed[x]]
            if kids:
                break
            ptr += 1
        else:
            return len(order) == n
        groups = _tie_groups(g, kids, f, tol)
        choices = product(*(permutations(gr) for gr in groups)) if exhaustive else [groups]
        for arrangement in choices:
            budget[0] -= 1
            if budget[0] < 0:
                raise SearchBudgetExceeded("BFD-ordering search budget exhausted")
            seq = [x for part in arrangement for x in part]
            new_lowest = admissible(seq, lowest)
            if new_lowest is None:
                continue
            order.extend(seq)
            for x in seq:
                placed[x] = 1
            if extend(ptr + 1, new_lowest):
                return True
            del order[-len(seq):]
            for x in seq:
                placed[x] = 0
        return False

    start = np.inf if f is None else float(f[root])
    return order if extend(0, start) else None


def find_bfd_ordering(
    g: Graph,
    f=None,
    *,
    tol: float = F_TIE_TOL,
    exhaustive: bool = True,
    budget: int = 200_000,
) -> BfdOrdering | None:
    """Search for a BFD-ordering of ``g``.

    With a Perron vector ``f`` the root is the maximiser of ``f`` and siblings
    are appended by (degree desc, f desc, index asc); the ordering must also
    be consistent with ``f``. Without ``f`` every maximum-degree vertex is
    tried as root with siblings by (degree desc, index asc).

    The deterministic tie-break is tried first. With ``exhaustive`` the
    search then backtracks over the orders of tied siblings (and tied roots),
    so ``None`` means no such ordering exists.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("find_bfd_ordering() needs a connected graph")
    maxdeg = max(g.degrees())
    if f is not None:
        f = np.asarray(f, dtype=float)
        top = float(f.max())
        roots = [v for v in range(g.n) if f[v] >= top - tol]
    else:
        roots = list(range(g.n))
    roots = [v for v in roots if g.degree(v) == maxdeg]
    left = [budget]
    passes = (False, True) if exhaustive else (False,)
    for deep in passes:
        for root in roots:
            order = _search_from(g, root, f, tol, deep, left)
            if order is not None:
                return BfdOrdering.from_order(g, order)
    return None


# -- constructions -----------------------------------------------------------


def construct_bfd_tree(pi: DegreeSequence | Sequence[int]) -> tuple[Graph, BfdOrdering]:
    """The BFD-tree of a tree sequence, labelled in its BFD-order.

    Vertex ``i`` gets degree ``pi[i]``. The root takes ``1..pi[0]`` as
    children, then each vertex in turn takes the next ``pi[i] - 1`` unused
    labels. Linear time for a sorted sequence.
    """
    ds = tuple(sorted((int(d) for d in pi), reverse=True))
    if not is_tree_sequence(ds):
        raise ValueError(f"{ds} is not a tree sequence")
    n = len(ds)
    parent = [-1] * n
    height = [0] * n
    edges = []
    nxt = 1
    for i, d in enumerate(ds):
        want = d if i == 0 else d - 1
        for c in range(nxt, nxt + want):
            parent[c] = i
            height[c] = height[i] + 1
            edges.append((i, c))
        nxt += want
    return Graph(n, edges), BfdOrdering(tuple(range(n)), tuple(parent), tuple(height))


def spider_leg_lengths(n: int, k: int) -> list[int]:
    q, r = divmod(n - 1, k)
    return [q + 1] * r + [q] * (k - r)


def spider(pi_star: DegreeSequence | Sequence[int]) -> Graph:
    """Star with ``k`` paths of almost equal length for ``(k, 2, ..., 2, 1^k)``."""
    ds = tuple(sorted((int(d) for d in pi_star), reverse=True))
    n = len(ds)
    k = ds[0] if ds else 0
    ones = ds.count(1)
    if k < 2 or ones != k or n < k + 1 or any(d != 2 for d in ds[1:n - k]):
        raise ValueError(f"{ds} is not of the form (k, 2, ..., 2, 1^k)")
    edges = []
    nxt = 1
    for length in spider_leg_lengths(n, k):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(n, edges)
