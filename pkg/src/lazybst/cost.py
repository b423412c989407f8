"""Search-cost engines for the two pointer strategies.

A root-finger search always starts at the root, so search i costs
depth(x_i) edges.  A lazy-finger search starts where the previous one
ended, so search i costs the path length between x_{i-1} and x_i; only
the first search descends from the root.  Both are exact integer edge
counts, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidInputError
from .model import NO_NODE, SearchSequence, SearchStats, StaticTree, distance_matrix


@dataclass(frozen=True)
class CostReport:
    transition_cost: int
    initial_descent: int
    total_with_root_start: int
    per_search_avg: Fraction


def _check_universe(tree_n: int, other_n: int) -> None:
    if tree_n != other_n:
        raise InvalidInputError(f"universe mismatch: tree n={tree_n}, input n={other_n}")


def _report(transition: int, descent: int, m: int) -> CostReport:
    total = transition + descent
    avg = Fraction(total, m) if m else Fraction(0)
    return CostReport(transition, descent, total, avg)


def run_root_finger(t: StaticTree, x: SearchSequence) -> CostReport:
    """Total root-finger cost: sum of depths of the searched keys."""
    _check_universe(t.n, x.n)
    if x.m == 0:
        return _report(0, 0, 0)
    depth = np.asarray(t.depth, dtype=np.int64)
    total = int(depth[x.items].sum())
    return _report(total, 0, x.m)


def run_lazy_finger(t: StaticTree, x: SearchSequence) -> CostReport:
    """Simulate a lazy-finger pass with an explicit cursor.

    The cursor climbs to the LCA via the parent table, then descends by
    key comparisons; every edge crossed is counted.  The initial descent
    from the root to x_1 is reported separately from the transition cost.
    """
    _check_universe(t.n, x.n)
    if x.m == 0:
        return _report(0, 0, 0)
    items = x.items.tolist()
    parent = t.parent
    left = t.left
    right = t.right
    depth = t.depth

    def descend(cur: int, target: int) -> int:
        edges = 0
        while cur != target:
            cur = left[cur] if target < cur else right[cur]
            if cur == NO_NODE:
                raise InvalidInputError("search fell off the tree; not a valid BST")
            edges += 1
        return edges

    descent = descend(t.root, items[0])
    transition = 0
    cur = items[0]
    for target in items[1:]:
        i, j = cur, target
        while depth[i] > depth[j]:
            i = parent[i]
        while depth[j] > depth[i]:
            j = parent[j]
        while i != j:
            i = parent[i]
            j = parent[j]
        transition += (depth[cur] - depth[i]) + descend(i, target)
        cur = target
    return _report(transition, descent, x.m)


def cost_from_frequencies(t: StaticTree, s: SearchStats) -> int:
    """Lazy transition cost from a pair-count table: sum of
    pair(a, b) * pathlen(a, b) over all ordered pairs."""
    _check_universe(t.n, s.n)
    if s.pair.shape != (t.n + 1, t.n + 1):
        raise InvalidInputError("pair table has the wrong shape")
    dist = distance_matrix(t)
    return int((s.pair * dist).sum())
