"""Majorization order on degree sequences and tree-sequence chains."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .bfd import construct_bfd_tree
from .graph import DegreeSequence, is_tree_sequence
from .spectral import perron

__all__ = [
    "MajorizationChain",
    "bfd_lambda",
    "chain",
    "chain_lambdas",
    "compare",
    "monotonicity_check",
]

LESS, EQUAL, GREATER, INCOMPARABLE = "less", "equal", "greater", "incomparable"


def _sorted(pi) -> tuple[int, ...]:
    return tuple(sorted((int(d) for d in pi), reverse=True))


def compare(pi: DegreeSequence | Sequence[int], other: DegreeSequence | Sequence[int]) -> str:
    """``"less"`` when every prefix sum of ``pi`` is <= that of ``other``."""
    a, b = _sorted(pi), _sorted(other)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if a == b:
        return EQUAL
    diffs = [x - y for x, y in zip(accumulate(a), accumulate(b))]
    if all(d <= 0 for d in diffs):
        return LESS
    if all(d >= 0 for d in diffs):
        return GREATER
    return INCOMPARABLE


@dataclass(frozen=True)
class MajorizationChain:
    sequences: tuple[DegreeSequence, ...]

    def __len__(self):
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)

    @property
    def steps(self) -> int:
        return len(self.sequences) - 1


def chain(pi: DegreeSequence | Sequence[int], target: DegreeSequence | Sequence[int]) -> MajorizationChain:
    """Tree sequences from ``pi`` up to ``target``, one unit step at a time.

    Each step raises the first entry that still differs from ``target`` by
    one, lowers the entry right after it by one and re-sorts.
    """
    cur, goal = list(_sorted(pi)), _sorted(target)
    if not (is_tree_sequence(cur) and is_tree_sequence(goal)):
        raise ValueError("chain() needs two tree sequences")
    rel = compare(cur, goal)
    if rel != LESS:
        raise ValueError(f"chain() needs pi strictly below target, got {rel}")
    out = [DegreeSequence(tuple(cur))]
    limit = sum(goal) * len(goal)  # prefix-sum gap shrinks every step
    while tuple(cur) != goal:
        j = next(i for i, (x, y) in enumerate(zip(cur, goal)) if x != y)
        if cur[j] >= goal[j] or j + 1 >= len(cur):
            raise AssertionError(f"chain rule broken at {cur} (position {j})")
        cur[j] += 1
        cur[j + 1] -= 1
        cur.sort(reverse=True)
        if not is_tree_sequence(cur):
            raise AssertionError(f"chain produced non-tree sequence {cur}")
        out.append(DegreeSequence(tuple(cur)))
        if len(out) > limit:
            raise AssertionError("chain did not reach its target")
    return MajorizationChain(tuple(out))


def bfd_lambda(pi: DegreeSequence | Sequence[int]) -> float:
    return perron(construct_bfd_tree(pi)[0]).lam


def chain_lambdas(ch: MajorizationChain) -> list[float]:
    return [bfd_lambda(pi) for pi in ch]


def monotonicity_check(ch: MajorizationChain, margin: float = 1e-10) -> bool:
    lams = chain_lambdas(ch)
    return all(b - a > margin for a, b in zip(lams, lams[1:]))
