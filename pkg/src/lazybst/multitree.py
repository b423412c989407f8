"""Two-level search structure: a global balanced tree plus, for every
key, a small tree over that key's most frequent successors.

Search cost is counted in key comparisons (one per node inspected), not
edges: after finding x, the next search probes x's successor tree first
and falls back to a fresh descent of the global tree on a miss.  The
jump from wherever a probe ends back to a tree root is free, which is
what makes the comparison model the honest one here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entropy import WeightVector
from .errors import InvalidInputError, UsageError
from .model import NO_NODE, SearchSequence, SearchStats, StaticTree, build_balanced
from .optimize import mehlhorn_build


@dataclass(frozen=True)
class SuccessorTree:
    """Search tree over one key's retained successors.

    ``members`` lists the retained successor keys in ascending order;
    ``shape`` is a tree over positions 1..len(members) (None when no
    successors are retained).  A probe compares against
    members[position - 1] at each node.
    """

    members: tuple[int, ...]
    shape: StaticTree | None


@dataclass(frozen=True, eq=False)
class MultiTree:
    n: int
    d: int
    global_tree: StaticTree
    succ: tuple[SuccessorTree, ...]   # index 0 unused
    links: tuple[int, ...]            # per key: root key of its successor tree, 0 if none


def node_count(mt: MultiTree) -> int:
    """Global nodes plus all successor-tree nodes; at most n * (d + 1)."""
    return mt.n + sum(len(st.members) for st in mt.succ[1:])


def build_multitree(s: SearchStats, d: int) -> MultiTree:
    """Keep each key's top-d successors by transition count (ties to the
    smaller key), arranged by weight bisection over those counts."""
    n = s.n
    if not (1 <= d <= n):
        raise UsageError(f"d must be in 1..{n}, got {d}")
    succ: list[SuccessorTree] = [SuccessorTree((), None)]
    links = [0]
    for i in range(1, n + 1):
        row = s.pair[i]
        present = [(int(row[j]), j) for j in range(1, n + 1) if row[j] > 0]
        present.sort(key=lambda cj: (-cj[0], cj[1]))
        kept = sorted(j for _, j in present[:d])
        if not kept:
            succ.append(SuccessorTree((), None))
            links.append(0)
            continue
        weights = [int(row[j]) for j in kept]
        shape = mehlhorn_build(WeightVector.from_values(weights))
        succ.append(SuccessorTree(tuple(kept), shape))
        links.append(kept[shape.root - 1])
    return MultiTree(n=n, d=d, global_tree=build_balanced(n),
                     succ=tuple(succ), links=tuple(links))


def probe(st: SuccessorTree, target: int) -> tuple[bool, int]:
    """Search one successor tree; returns (hit, comparisons made)."""
    if st.shape is None:
        return False, 0
    members = st.members
    shape = st.shape
    pos = shape.root
    comparisons = 0
    while pos != NO_NODE:
        comparisons += 1
        key = members[pos - 1]
        if target == key:
            return True, comparisons
        pos = shape.left[pos] if target < key else shape.right[pos]
    return False, comparisons


def search_costs(mt: MultiTree, x: SearchSequence) -> list[int]:
    """Per-search comparison counts for a full pass over the sequence."""
    if mt.n != x.n:
        raise InvalidInputError(f"universe mismatch: structure n={mt.n}, input n={x.n}")
    gdepth = mt.global_tree.depth
    costs = []
    prev = 0
    for target in x.items.tolist():
        if prev == 0:
            costs.append(gdepth[target] + 1)
        else:
            hit, comparisons = probe(mt.succ[prev], target)
            if hit:
                costs.append(comparisons)
            else:
                costs.append(comparisons + gdepth[target] + 1)
        prev = target
    return costs


def run_multitree(mt: MultiTree, x: SearchSequence) -> int:
    """Total comparisons for the sequence."""
    return sum(search_costs(mt, x))
