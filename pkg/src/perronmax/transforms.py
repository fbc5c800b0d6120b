"""Degree-preserving rewiring moves and a Perron-guided hill climb.

Two moves are used:

* switching ``v1u1, v2u2 -> v1v2, u1u2`` keeps every vertex degree;
* shifting ``uv1 -> uv2`` moves one unit of degree from ``v1`` to ``v2``.

For a unit Perron vector ``f`` of ``G`` the Rayleigh quotient changes by
``2 (f(v1) - f(u2)) (f(v2) - f(u1))`` under a switch and by
``2 f(u) (f(v2) - f(v1))`` under a shift.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import random
from itertools import chain, combinations
from typing import Iterator, Sequence

import numpy as np

from .graph import DisconnectedGraphError, Graph, canonical_form, is_connected
from .spectral import DEFAULT_TOL, PerronResult, perron

__all__ = [
    "ClimbResult",
    "ClimbStep",
    "Move",
    "MoveError",
    "MultiStartResult",
    "hill_climb",
    "iter_shifting_moves",
    "iter_switching_moves",
    "maximize",
    "shift_edge",
    "shift_gain",
    "shifting_test",
    "switch_edges",
    "switch_gain",
    "switching_test",
]

STRICT_TOL = 1e-9
GAIN_TOL = 1e-10


class MoveError(ValueError):
    """A switch or shift precondition does not hold."""


@dataclass(frozen=True)
class Move:
    """A rewiring step: delete ``removed``, insert ``added``.

    ``gain`` is the predicted change of the Rayleigh quotient evaluated at
    the Perron vector of the graph the move was found on.
    """

    kind: str
    removed: tuple[tuple[int, int], ...]
    added: tuple[tuple[int, int], ...]
    gain: float
    note: str = ""

    def apply(self, g: Graph) -> Graph:
        if self.kind == "switch":
            (v1, u1), (v2, u2) = self.removed
            return switch_edges(g, (v1, u1), (v2, u2))
        out = g
        for (w, old), (_, new) in zip(self.removed, self.added):
            out = shift_edge(out, w, old, new)
        return out

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "removed": [list(e) for e in self.removed],
            "added": [list(e) for e in self.added],
            "gain": self.gain,
            "note": self.note,
        }


def switch_gain(f, v1: int, u1: int, v2: int, u2: int) -> float:
    return 2.0 * (f[v1] - f[u2]) * (f[v2] - f[u1])


def shift_gain(f, u: int, v1: int, v2: int) -> float:
    return 2.0 * f[u] * (f[v2] - f[v1])


def switch_edges(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> Graph:
    """Replace ``v1u1`` and ``v2u2`` by ``v1v2`` and ``u1u2``.

    The result has the same per-vertex degrees but may be disconnected.
    """
    v1, u1 = e1
    v2, u2 = e2
    if not g.has_edge(v1, u1):
        raise MoveError(f"edge ({v1}, {u1}) is not in the graph")
    if not g.has_edge(v2, u2):
        raise MoveError(f"edge ({v2}, {u2}) is not in the graph")
    if {v1, u1} == {v2, u2}:
        raise MoveError("the two edges must be distinct")
    if v1 == v2:
        raise MoveError(f"switch would create a loop at {v1}")
    if u1 == u2:
        raise MoveError(f"switch would create a loop at {u1}")
    if g.has_edge(v1, v2):
        raise MoveError(f"edge ({v1}, {v2}) already present")
    if g.has_edge(u1, u2):
        raise MoveError(f"edge ({u1}, {u2}) already present")
    out = g.replace_edges([(v1, u1), (v2, u2)], [(v1, v2), (u1, u2)])
    assert out.degrees() == g.degrees()
    return out


def shift_edge(g: Graph, u: int, v1: int, v2: int) -> Graph:
    """Replace edge ``uv1`` by ``uv2``."""
    if not g.has_edge(u, v1):
        raise MoveError(f"edge ({u}, {v1}) is not in the graph")
    if u == v2:
        raise MoveError(f"shift would create a loop at {u}")
    if g.has_edge(u, v2):
        raise MoveError(f"edge ({u}, {v2}) already present")
    out = g.replace_edges([(u, v1)], [(u, v2)])
    before, after = g.degrees(), out.degrees()
    assert after[v1] == before[v1] - 1 and after[v2] == before[v2] + 1
    assert sum(before) == sum(after)
    return out


# -- non-optimality tests ----------------------------------------------------


def _bfs_dist(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = [src]
    for a in queue:
        for b in g.neighbors(a):
            if dist[b] < 0:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def _shortest_path(g: Graph, src: int, dst: int) -> list[int]:
    """Lexicographically smallest shortest path from ``src`` to ``dst``."""
    dist = _bfs_dist(g, dst)
    if dist[src] < 0:
        raise DisconnectedGraphError(f"no path from {src} to {dst}")
    path = [src]
    while path[-1] != dst:
        here = path[-1]
        path.append(min(b for b in g.neighbors(here) if dist[b] == dist[here] - 1))
    return path


def _shift_move(g: Graph, f: np.ndarray, u: int, v: int) -> Move | None:
    # move c = d(u) - d(v) neighbours of u over to v; degrees of u and v swap
    c = g.degree(u) - g.degree(v)
    nv = g.neighbor_set(v)
    cand = sorted((w for w in g.neighbors(u) if w != v and w not in nv), key=lambda w: (-f[w], w))
    linked = g.has_edge(u, v) or bool(g.neighbor_set(u) & nv)
    if not linked:
        # keep the first step of a u-v path so u stays attached to v
        keep = _shortest_path(g, u, v)[1]
        cand = [w for w in cand if w != keep]
    attempts = [(tuple(cand[:c]), "shift")] if len(cand) >= c else []
    if not linked:
        pool = sorted(w for w in g.neighbors(u) if w != v and w not in nv)
        attempts = chain(attempts, ((ch, "shift-fallback") for ch in combinations(pool, c)))
    for chosen, note in attempts:
        removed = tuple((w, u) for w in chosen)
        added = tuple((w, v) for w in chosen)
        if is_connected(g.replace_edges(removed, added)):
            gain = float(sum(2.0 * f[w] * (f[v] - f[u]) for w in chosen))
            return Move("shift", removed, added, gain, note)
    return None


def iter_shifting_moves(g: Graph, result: PerronResult, tol: float = STRICT_TOL) -> Iterator[Move]:
    """Moves certifying ``d(u) > d(v)`` while ``f(u) < f(v)``."""
    f = result.f
    desc = sorted(range(g.n), key=lambda a: (-f[a], a))
    asc = desc[::-1]
    for v in desc:
        for u in asc:
            if f[u] >= f[v] - tol:
                break
            if g.degree(u) > g.degree(v):
                mv = _shift_move(g, f, u, v)
                if mv is not None:
                    yield mv


def shifting_test(g: Graph, result: PerronResult, tol: float = STRICT_TOL) -> Move | None:
    return next(iter_shifting_moves(g, result, tol), None)


def _switch_partner(g: Graph, f: np.ndarray, v: int, u: int, x: int) -> tuple[int | None, str]:
    """Neighbour ``w`` of ``x`` for the switch ``vu, xw -> vx, uw``.

    Follows the four-case analysis on a shortest ``v``-``x`` path
    ``(v, ..., t, x)`` and falls back to any admissible ``w`` that keeps the
    graph connected.
    """
    nu = g.neighbor_set(u)

    def valid(w):
        return w != u and w not in nu

    path = _shortest_path(g, v, x)
    t = path[-2]
    vu_on_path = path[1] == u
    others = sorted((p for p in g.neighbors(x) if p != t and valid(p)), key=lambda p: (f[p], p))
    w, case = None, ""
    if not vu_on_path:
        if valid(t):
            w, case = t, "case 1"
        else:
            pool = sorted((p for p in g.neighbors(x) if valid(p)), key=lambda p: (f[p], p))
            if pool:
                w, case = pool[0], "case 2"
    elif not others:
        if valid(t):
            w, case = t, "case 3"
    else:
        w, case = others[0], "case 4"

    def connected_after(w):
        return is_connected(g.replace_edges([(v, u), (x, w)], [(v, x), (u, w)]))

    if w is not None and connected_after(w):
        return w, case
    for p in sorted(g.neighbors(x), key=lambda p: (f[p], p)):
        if valid(p) and connected_after(p):
            return p, "fallback"
    return None, ""


def iter_switching_moves(g: Graph, result: PerronResult, tol: float = STRICT_TOL) -> Iterator[Move]:
    """Switches for ``vu`` in E, ``vx`` not in E with ``f(u) < f(x) <= f(v)``
    and ``f(w) <= f(v)`` for every neighbour ``w`` of ``x``."""
    f = result.f
    desc = sorted(range(g.n), key=lambda a: (-f[a], a))
    nmax = [max((f[b] for b in g.neighbors(a)), default=-np.inf) for a in range(g.n)]
    for v in desc:
        nv = g.neighbor_set(v)
        for u in sorted(g.neighbors(v), key=lambda a: (f[a], a)):
            for x in desc:
                if f[x] <= f[u] + tol:
                    break
                if x == v or x in nv or f[x] > f[v] + tol or nmax[x] > f[v] + tol:
                    continue
                w, case = _switch_partner(g, f, v, u, x)
                if w is None:
                    continue
                yield Move(
                    "switch",
                    ((v, u), (x, w)),
                    ((v, x), (u, w)),
                    switch_gain(f, v, u, x, w),
                    case,
                )


def switching_test(g: Graph, result: PerronResult, tol: float = STRICT_TOL) -> Move | None:
    return next(iter_switching_moves(g, result, tol), None)


# -- local search ------------------------------------------------------------


@dataclass(frozen=True)
class ClimbStep:
    move: Move
    lam: float

    def to_dict(self) -> dict:
        return {"move": self.move.to_dict(), "lambda": self.lam}


@dataclass
class ClimbResult:
    """Outcome of :func:`hill_climb`.

    ``fixpoint`` means no admissible move improved the spectral radius. This
    is a necessary condition for a maximiser, not a certificate.
    """

    graph: Graph
    lam: float
    start_lam: float
    trace: list[ClimbStep] = field(default_factory=list)
    fixpoint: bool = False
    rejected: int = 0

    def __iter__(self):
        yield self.graph
        yield self.trace

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "start_lambda": self.start_lam,
            "steps": len(self.trace),
            "fixpoint": self.fixpoint,
            "rejected_moves": self.rejected,
            "trace": [s.to_dict() for s in self.trace],
        }


def hill_climb(
    g0: Graph,
    max_steps: int = 1000,
    strategy: str = "first",
    tol: float = DEFAULT_TOL,
    max_iter: int | None = None,
) -> ClimbResult:
    """Apply improving shift/switch moves until none is left.

    ``strategy="first"`` takes the first improving move in scan order
    (shifts before switches); ``"best"`` ranks all candidates by predicted
    Rayleigh gain. Every accepted step raises the spectral radius by more
    than ``GAIN_TOL``; candidates that do not are counted as rejected.
    """
    if strategy not in {"first", "best"}:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not is_connected(g0):
        raise DisconnectedGraphError("hill_climb() needs a connected graph")
    degs = sorted(g0.degrees())
    g = g0
    res = perron(g, tol, max_iter)
    out = ClimbResult(graph=g, lam=res.lam, start_lam=res.lam)
    while len(out.trace) < max_steps:
        moves = chain(iter_shifting_moves(g, res), iter_switching_moves(g, res))
        if strategy == "best":
            moves = sorted(moves, key=lambda mv: -mv.gain)
        accepted = None
        for mv in moves:
            h = mv.apply(g)
            new = perron(h, tol, max_iter)
            if new.lam > res.lam + GAIN_TOL:
                accepted = (mv, h, new)
                break
            out.rejected += 1
        if accepted is None:
            out.fixpoint = True
            break
        mv, g, res = accepted
        assert sorted(g.degrees()) == degs
        out.trace.append(ClimbStep(mv, res.lam))
    out.graph = g
    out.lam = res.lam
    return out


@dataclass
class MultiStartResult:
    """Best of several hill climbs; ``winner`` indexes ``runs``."""

    best: ClimbResult
    winner: int
    runs: list[ClimbResult]

    def to_dict(self) -> dict:
        return {
            "winner": self.winner,
            "start_lambdas": [r.start_lam for r in self.runs],
            "final_lambdas": [r.lam for r in self.runs],
            "best": self.best.to_dict(),
        }


def maximize(
    start: Graph | Sequence[int],
    restarts: int = 1,
    seed: int = 0,
    max_steps: int = 1000,
    strategy: str = "first",
    tol: float = DEFAULT_TOL,
    max_iter: int | None = None,
) -> MultiStartResult:
    """Multi-start :func:`hill_climb`.

    A graph start is climbed as given; every further start (and every start
    when a degree sequence is given) is a random connected realization drawn
    from ``random.Random(seed)``. The highest final spectral radius wins,
    ties going to the smallest canonical form.
    """
    from .generate import random_connected_realization

    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    rng = random.Random(seed)
    if isinstance(start, Graph):
        pi = sorted(start.degrees(), reverse=True)
        starts = [start]
    else:
        pi = sorted((int(d) for d in start), reverse=True)
        starts = []
    while len(starts) < restarts:
        starts.append(random_connected_realization(pi, rng))
    runs = [hill_climb(g, max_steps, strategy, tol, max_iter) for g in starts]
    top = max(r.lam for r in runs)
    winner = min(
        (k for k, r in enumerate(runs) if r.lam >= top - GAIN_TOL),
        key=lambda k: canonical_form(runs[k].graph),
    )
    return MultiStartResult(runs[winner], winner, runs)
