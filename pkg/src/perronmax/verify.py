"""Exhaustive sweeps that check the structural theorems against the oracle.

Each sweep walks every relevant degree sequence up to a vertex bound and
returns a :class:`SweepReport`. Failures carry the offending graph in graph6
so they can be replayed with the CLI.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .bfd import (
    SearchBudgetExceeded,
    construct_bfd_tree,
    find_bfd_ordering,
    is_bfd_ordering,
    perron_consistency_check,
)
from .graph import DegreeSequence, tree_canonical_form
from .io import encode_graph6
from .majorization import LESS, GREATER, bfd_lambda, chain, compare
from .oracle import TIE_TOL, connected_graphical_sequences, extremal_report, tree_sequences
from .spectral import perron

__all__ = [
    "SweepReport",
    "THEOREMS",
    "run_sweep",
    "sweep_bfd_maximizer",
    "sweep_majorization",
    "sweep_perron_consistent_maximizer",
]

MARGIN = 1e-10


@dataclass
class SweepReport:
    theorem: int
    max_n: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        unit = "pairs" if self.theorem == 3 else "sequences"
        if self.passed:
            return f"PASS: {self.checked} {unit} checked"
        return f"FAIL: {len(self.failures)} of {self.checked} {unit} failed"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "max_n": self.max_n,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
        }


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _collect(theorem: int, max_n: int, outcomes: Iterable[list[dict]], checked: int) -> SweepReport:
    rep = SweepReport(theorem, max_n, checked)
    for fails in outcomes:
        rep.failures.extend(fails)
    return rep


# -- maximizer of the connected class admits a Perron-consistent ordering ----


def _check_connected(pi: DegreeSequence) -> list[dict]:
    rep = extremal_report(pi, "connected", max_n=len(pi))
    fails = []
    for k, g in enumerate(rep.graphs):
        if rep.lambdas[k] < rep.lambda_max - TIE_TOL:
            continue
        res = perron(g)
        try:
            ordering = find_bfd_ordering(g, res.f)
        except SearchBudgetExceeded:
            ordering, reason = None, "search budget exhausted"
        else:
            reason = "no Perron-consistent BFD-ordering"
        if ordering is not None:
            verdict = is_bfd_ordering(g, ordering)
            if verdict and perron_consistency_check(g, ordering, res.f):
                continue
            reason = f"ordering rejected: {verdict}"
        fails.append({"sequence": str(pi), "graph6": encode_graph6(g), "reason": reason})
    return fails


def sweep_perron_consistent_maximizer(max_n: int, jobs: int = 1) -> SweepReport:
    """Every maximizer over connected graphs with ``n <= max_n`` has a BFD-ordering
    consistent with its Perron vector."""
    seqs = [pi for n in range(2, max_n + 1) for pi in connected_graphical_sequences(n)]
    return _collect(1, max_n, _map(_check_connected, seqs, jobs), len(seqs))


# -- BFD-tree is the unique maximizer among trees ----------------------------


def _check_tree(pi: DegreeSequence) -> list[dict]:
    rep = extremal_report(pi, "trees", max_n=len(pi))
    bfd, _ = construct_bfd_tree(pi)
    if rep.argmax_ties != 1:
        return [{"sequence": str(pi), "graph6": encode_graph6(rep.argmax), "reason": f"{rep.argmax_ties} maximizers"}]
    if tree_canonical_form(rep.argmax) != tree_canonical_form(bfd):
        return [{"sequence": str(pi), "graph6": encode_graph6(rep.argmax), "reason": "maximizer is not the BFD-tree"}]
    return []


def sweep_bfd_maximizer(max_n: int, jobs: int = 1, min_n: int = 4) -> SweepReport:
    seqs = [pi for n in range(min_n, max_n + 1) for pi in tree_sequences(n)]
    return _collect(2, max_n, _map(_check_tree, seqs, jobs), len(seqs))


# -- majorization is monotone for BFD-trees ----------------------------------


def _check_pair(args: tuple[DegreeSequence, DegreeSequence, dict]) -> list[dict]:
    lo, hi, lams = args
    fails = []
    if not lams[hi] - lams[lo] > MARGIN:
        fails.append({"sequence": f"{lo} < {hi}", "graph6": encode_graph6(construct_bfd_tree(hi)[0]),
                      "reason": f"lambda {lams[lo]:.12g} !< {lams[hi]:.12g}"})
    steps = chain(lo, hi).sequences
    prev = None
    for s in steps:
        lam = lams.get(s)
        if lam is None:
            lam = bfd_lambda(s)
        if prev is not None and not lam - prev > MARGIN:
            fails.append({"sequence": f"{lo} < {hi}", "graph6": encode_graph6(construct_bfd_tree(s)[0]),
                          "reason": f"chain lambda not increasing at {s}"})
            break
        prev = lam
    return fails


def sweep_majorization(max_n: int, jobs: int = 1, min_n: int = 2) -> SweepReport:
    """All comparable pairs of tree sequences, plus the chain between them."""
    tasks = []
    for n in range(min_n, max_n + 1):
        seqs = tree_sequences(n)
        lams = {pi: bfd_lambda(pi) for pi in seqs}
        for a, b in combinations(seqs, 2):
            rel = compare(a, b)
            if rel == LESS:
                tasks.append((a, b, lams))
            elif rel == GREATER:
                tasks.append((b, a, lams))
    return _collect(3, max_n, _map(_check_pair, tasks, jobs), len(tasks))


THEOREMS: dict[int, Callable[..., SweepReport]] = {
    1: sweep_perron_consistent_maximizer,
    2: sweep_bfd_maximizer,
    3: sweep_majorization,
}


def run_sweep(theorem: int, max_n: int, jobs: int = 1) -> SweepReport:
    try:
        fn = THEOREMS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem}; choose from {sorted(THEOREMS)}") from None
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    return fn(max_n, jobs=jobs)
