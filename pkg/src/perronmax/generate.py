"""Random and deterministic realizations of degree sequences."""

from __future__ import annotations

import random
from typing import Sequence

import numpy as np

from . import kernels
from .graph import DegreeSequence, Graph, is_connected, is_connected_graphical, is_graphical, is_tree_sequence

__all__ = ["havel_hakimi", "random_connected_realization", "random_tree"]


def havel_hakimi(pi: DegreeSequence | Sequence[int]) -> Graph:
    """Deterministic realization; vertex ``i`` gets the ``i``-th largest degree."""
    ds = sorted((int(d) for d in pi), reverse=True)
    if not is_graphical(ds):
        raise ValueError(f"{tuple(ds)} is not graphical")
    res = list(ds)
    edges = []
    while True:
        order = sorted(range(len(res)), key=lambda v: (-res[v], v))
        v = order[0]
        if res[v] == 0:
            break
        for u in order[1:res[v] + 1]:
            edges.append((v, u))
            res[u] -= 1
        res[v] = 0
    return Graph(len(ds), edges)


def random_tree(pi: DegreeSequence | Sequence[int], rng: random.Random) -> Graph:
    """Uniform labelled tree in which vertex ``i`` has degree ``pi[i]``."""
    ds = sorted((int(d) for d in pi), reverse=True)
    if not is_tree_sequence(ds):
        raise ValueError(f"{tuple(ds)} is not a tree sequence")
    code = [v for v, d in enumerate(ds) for _ in range(d - 1)]
    rng.shuffle(code)
    edges = kernels.prufer_decode_batch(np.array([code], dtype=np.int64).reshape(1, -1), len(ds))[0]
    return Graph(len(ds), edges.tolist())


def _random_switch(edges: list[tuple[int, int]], present: set, rng: random.Random) -> None:
    i, j = rng.sample(range(len(edges)), 2)
    a, b = edges[i]
    c, d = edges[j]
    if rng.random() < 0.5:
        c, d = d, c
    # ab, cd -> ac, bd
    if len({a, b, c, d}) < 4:
        return
    ac, bd = (min(a, c), max(a, c)), (min(b, d), max(b, d))
    if ac in present or bd in present:
        return
    present.difference_update({edges[i], edges[j]})
    present.update({ac, bd})
    edges[i], edges[j] = ac, bd


def _components(n: int, edges) -> list[int]:
    comp = list(range(n))

    def root(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for a, b in edges:
        ra, rb = root(a), root(b)
        if ra != rb:
            comp[ra] = rb
    return [root(v) for v in range(n)]


def _connect(n: int, edges: list[tuple[int, int]], present: set) -> None:
    # merge components with switches; a component with a cycle donates a
    # non-bridge edge, so it stays connected after losing it
    while True:
        label = _components(n, edges)
        if len(set(label)) == 1:
            return
        donor = None
        for idx, (a, b) in enumerate(edges):
            rest = [e for k, e in enumerate(edges) if k != idx]
            after = _components(n, rest)
            if after[a] == after[b]:
                donor = idx
                break
        if donor is None:
            raise ValueError("no cycle edge available; sequence has no connected realization")
        a, b = edges[donor]
        other = next(k for k, (c, _) in enumerate(edges) if label[c] != label[a])
        c, d = edges[other]
        ac, bd = (min(a, c), max(a, c)), (min(b, d), max(b, d))
        present.difference_update({edges[donor], edges[other]})
        present.update({ac, bd})
        edges[donor], edges[other] = ac, bd


def random_connected_realization(
    pi: DegreeSequence | Sequence[int], rng: random.Random, swaps: int | None = None
) -> Graph:
    """Havel–Hakimi realization, randomized by switches, then made connected."""
    ds = sorted((int(d) for d in pi), reverse=True)
    if not is_connected_graphical(ds):
        raise ValueError(f"{tuple(ds)} has no connected realization")
    g = havel_hakimi(ds)
    edges = g.edge_list()
    present = set(edges)
    if len(edges) >= 2:
        for _ in range(10 * len(edges) if swaps is None else swaps):
            _random_switch(edges, present, rng)
    _connect(len(ds), edges, present)
    out = Graph(len(ds), edges)
    assert is_connected(out) and sorted(out.degrees(), reverse=True) == ds
    return out
