"""Simple undirected graphs, degree sequences and canonical forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "DegreeSequence",
    "DisconnectedGraphError",
    "Graph",
    "canonical_form",
    "degree_sequence",
    "is_connected",
    "is_connected_graphical",
    "is_graphical",
    "is_tree",
    "is_tree_sequence",
    "tree_canonical_form",
]


class DisconnectedGraphError(ValueError):
    """An operation that needs a connected graph received a disconnected one."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v``; neighbour lists are
    kept sorted so every traversal is deterministic.
    """

    __slots__ = ("_n", "_edges", "_adj", "_cache")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._edges = frozenset(seen)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._cache: dict = {}

    # -- constructors -----------------------------------------------------

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """K_{1,leaves} with centre 0."""
        return cls(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    # -- basic accessors --------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset:
        return self._edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edges

    def neighbor_set(self, v: int) -> frozenset:
        sets = self._cache.get("nsets")
        if sets is None:
            sets = self._cache["nsets"] = tuple(frozenset(a) for a in self._adj)
        return sets[v]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` of the adjacency structure, int64."""
        out = self._cache.get("csr")
        if out is None:
            indptr = np.zeros(self._n + 1, dtype=np.int64)
            indptr[1:] = np.cumsum([len(a) for a in self._adj])
            indices = np.fromiter(
                (u for a in self._adj for u in a), dtype=np.int64, count=2 * self.m
            )
            out = self._cache["csr"] = (indptr, indices)
        return out

    def edge_array(self) -> np.ndarray:
        arr = self._cache.get("earr")
        if arr is None:
            arr = np.array(self.edge_list(), dtype=np.int64).reshape(-1, 2)
            self._cache["earr"] = arr
        return arr

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n))
        e = self.edge_array()
        a[e[:, 0], e[:, 1]] = 1.0
        a[e[:, 1], e[:, 0]] = 1.0
        return a

    def bitmasks(self) -> tuple[int, ...]:
        masks = self._cache.get("masks")
        if masks is None:
            masks = tuple(sum(1 << u for u in a) for a in self._adj)
            self._cache["masks"] = masks
        return masks

    # -- derived graphs ---------------------------------------------------

    def replace_edges(self, remove: Iterable[Sequence[int]], add: Iterable[Sequence[int]]) -> Graph:
        """New graph with ``remove`` deleted and ``add`` inserted."""
        new = set(self._edges)
        for u, v in remove:
            key = (u, v) if u < v else (v, u)
            if key not in new:
                raise ValueError(f"edge {key} not present")
            new.remove(key)
        for u, v in add:
            key = (u, v) if u < v else (v, u)
            if key in new:
                raise ValueError(f"edge {key} already present")
            new.add(key)
        return Graph(self._n, new)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self._edges))

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.edge_list()})"


@dataclass(frozen=True)
class DegreeSequence:
    """Degree sequence stored non-increasing; every entry must be >= 1."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        ds = tuple(sorted((int(d) for d in self.degrees), reverse=True))
        if not ds:
            raise ValueError("degree sequence must be non-empty")
        if ds[-1] < 1:
            raise ValueError(f"degrees must be positive, got {ds}")
        object.__setattr__(self, "degrees", ds)

    @classmethod
    def _raw(cls, degrees: Iterable[int]) -> DegreeSequence:
        # bypasses the positivity check; only degree_sequence() uses it so that
        # graphs with isolated vertices still get a (rejectable) sequence
        obj = object.__new__(cls)
        object.__setattr__(obj, "degrees", tuple(sorted(degrees, reverse=True)))
        return obj

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def count(self, d: int) -> int:
        return self.degrees.count(d)

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __str__(self):
        return ",".join(map(str, self.degrees))


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence._raw(g.degrees())


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if not seen[u]:
                seen[u] = 1
                count += 1
                stack.append(u)
    return count == g.n


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_tree_sequence(pi: DegreeSequence | Sequence[int]) -> bool:
    ds = tuple(pi)
    n = len(ds)
    return n >= 2 and min(ds) >= 1 and sum(ds) == 2 * (n - 1)


def is_graphical(pi: DegreeSequence | Sequence[int]) -> bool:
    """Erdős–Gallai test on a sequence of non-negative integers."""
    ds = sorted((int(d) for d in pi), reverse=True)
    n = len(ds)
    if n == 0 or ds[-1] < 0 or sum(ds) % 2:
        return False
    if ds[0] > n - 1:
        return False
    prefix = 0
    # split = number of entries >= k; shrinks monotonically as k grows
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ds[i]
    split = n
    for k in range(1, n + 1):
        prefix += ds[k - 1]
        while split > 0 and ds[split - 1] < k:
            split -= 1
        big = max(split - k, 0)
        rhs = k * (k - 1) + big * k + suffix[max(split, k)]
        if prefix > rhs:
            return False
    return True


def is_connected_graphical(pi: DegreeSequence | Sequence[int]) -> bool:
    ds = tuple(pi)
    n = len(ds)
    if n < 2 or min(ds) < 1:
        return False
    total = sum(ds)
    return total % 2 == 0 and total // 2 >= n - 1 and is_graphical(ds)


# -- canonical forms ---------------------------------------------------------


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    Trees use a rooted AHU code at the centroid; everything else uses an
    individualisation/refinement search for the minimum adjacency code.
    """
    if g.n >= 1 and is_tree(g):
        return b"T" + _tree_code(g)
    return b"G" + _general_code(g)


def tree_canonical_form(g: Graph) -> bytes:
    """:func:`canonical_form` restricted to trees."""
    if not is_tree(g):
        raise ValueError("tree_canonical_form() needs a tree")
    return b"T" + _tree_code(g)


def _centroids(g: Graph) -> list[int]:
    n = g.n
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for v in order:
        for u in g.neighbors(v):
            if parent[u] < 0:
                parent[u] = v
                order.append(u)
    size = [1] * n
    heavy = [0] * n
    for v in reversed(order[1:]):
        p = parent[v]
        size[p] += size[v]
        if size[v] > heavy[p]:
            heavy[p] = size[v]
    best = n
    out = []
    for v in range(n):
        worst = max(heavy[v], n - size[v])
        if worst < best:
            best, out = worst, [v]
        elif worst == best:
            out.append(v)
    return out


def _rooted_code(g: Graph, root: int) -> str:
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in g.neighbors(v):
            if u not in parent:
                parent[u] = v
                order.append(u)
    kids: dict[int, list[str]] = {v: [] for v in order}
    code = ""
    for v in reversed(order):
        code = "(" + "".join(sorted(kids[v])) + ")"
        if parent[v] >= 0:
            kids[parent[v]].append(code)
    return code


def _tree_code(g: Graph) -> bytes:
    return min(_rooted_code(g, c) for c in _centroids(g)).encode()


def _refine(cells: list[list[int]], masks: tuple[int, ...]) -> list[list[int]]:
    while True:
        cmasks = [sum(1 << v for v in c) for c in cells]
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            keyed = sorted(
                (tuple((masks[v] & cm).bit_count() for cm in cmasks), v) for v in c
            )
            group = [keyed[0][1]]
            for (k0, _), (k1, v) in zip(keyed, keyed[1:]):
                if k1 != k0:
                    out.append(group)
                    group = []
                group.append(v)
            out.append(group)
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(order: list[int], masks: tuple[int, ...]) -> int:
    code = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((mj >> order[i]) & 1)
    return code


def _general_code(g: Graph) -> bytes:
    n = g.n
    if n == 0:
        return b"\x00"
    masks = g.bitmasks()
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(g.degree(v), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    best: list = [None, None]  # code, order
    first: list = [None, None]
    gens: list[tuple[int, ...]] = []

    def note_automorphism(src: list[int], dst: list[int]):
        gamma = [0] * n
        for a, b in zip(src, dst):
            gamma[a] = b
        if any(gamma[v] != v for v in range(n)):
            gens.append(tuple(gamma))

    def orbit_root(uf: list[int], v: int) -> int:
        while uf[v] != v:
            uf[v] = uf[uf[v]]
            v = uf[v]
        return v

    def visit(cells: list[list[int]], prefix: list[int]):
        cells = _refine(cells, masks)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _leaf_code(order, masks)
            if first[0] is None:
                first[0], first[1] = code, order
            elif code == first[0]:
                note_automorphism(first[1], order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                note_automorphism(best[1], order)
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        tried: list[int] = []
        for v in target:
            if tried:
                uf = list(range(n))
                for gamma in gens:
                    if all(gamma[p] == p for p in prefix):
                        for a in range(n):
                            ra, rb = orbit_root(uf, a), orbit_root(uf, gamma[a])
                            if ra != rb:
                                uf[ra] = rb
                rv = orbit_root(uf, v)
                if any(orbit_root(uf, t) == rv for t in tried):
                    continue
            tried.append(v)
            rest = [w for w in target if w != v]
            visit(cells[:ti] + [[v], rest] + cells[ti + 1:], prefix + [v])

    visit(start, [])
    width = max(1, (n * (n - 1) // 2 + 7) // 8)
    return n.to_bytes(4, "big") + best[0].to_bytes(width, "big")
