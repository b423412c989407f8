"""Shared helpers for the test suite: random instances, independent
oracles, and the Eulerian stitcher that turns a count table back into a
sequence."""

from __future__ import annotations

import math
import random
from collections import deque

import numpy as np

from lazybst import (SearchSequence, SearchStats, StaticTree, build_tree,
                     frequencies_from_sequence)


def random_tree(rng: random.Random, n: int) -> StaticTree:
    """Uniform random root per interval; covers paths through balanced shapes."""
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    top = 0
    stack = [(1, n, 0, False)]
    while stack:
        lo, hi, parent, as_left = stack.pop()
        r = rng.randint(lo, hi)
        if parent == 0:
            top = r
        elif as_left:
            left[parent] = r
        else:
            right[parent] = r
        if lo < r:
            stack.append((lo, r - 1, r, True))
        if r < hi:
            stack.append((r + 1, hi, r, False))
    return build_tree(n, top, left, right)


def path_tree(n: int, ascending: bool = True) -> StaticTree:
    """A single chain: root 1 with right spine (ascending) or root n with
    left spine."""
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    if ascending:
        for k in range(1, n):
            right[k] = k + 1
        return build_tree(n, 1, left, right)
    for k in range(2, n + 1):
        left[k] = k - 1
    return build_tree(n, n, left, right)


def vee_tree(n: int) -> StaticTree:
    """Root in the middle, two full-length chains hanging off it; its
    equal-depth leaf pairs give the weight inequality its thinnest margins."""
    mid = (n + 1) // 2
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    for k in range(2, mid + 1):
        left[k] = k - 1
    for k in range(mid, n):
        right[k] = k + 1
    return build_tree(n, mid, left, right)


def caterpillar_tree(n: int) -> StaticTree:
    """Descending spine of every other key, each spine node carrying its
    successor as a pendant leaf."""
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    spine = list(range(n, 0, -2))
    for up, down in zip(spine, spine[1:]):
        left[up] = down
    for k in spine:
        if k + 1 <= n:
            right[k] = k + 1
    if spine[-1] == 2:
        left[2] = 1
    return build_tree(n, n, left, right)


def random_sequence(rng: random.Random, n: int, m: int) -> SearchSequence:
    return SearchSequence(n, [rng.randint(1, n) for _ in range(m)])


def random_pair_stats(rng: random.Random, n: int, max_count: int = 9) -> SearchStats:
    """Raw random count table; need not be realizable by one sequence."""
    pair = np.zeros((n + 1, n + 1), dtype=np.int64)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if rng.random() < 0.6:
                pair[a, b] = rng.randint(0, max_count)
    return SearchStats.from_pair_counts(n, pair)


def walk_step_oracle(t: StaticTree, i: int, j: int) -> int:
    """Path length by ancestor sets; shares no code with step_cost/lca."""
    up_i = {}
    v, d = i, 0
    while True:
        up_i[v] = d
        if v == t.root:
            break
        v = t.parent[v]
        d += 1
    v, d = j, 0
    while v not in up_i:
        v = t.parent[v]
        d += 1
    return d + up_i[v]


def closed_form_lazy_total(t: StaticTree, x: SearchSequence) -> int:
    """2 * sum(depth(x_i) - depth(LCA(x_i, x_{i-1}))) - depth(x_m), with
    x_0 = root.  Uses its own LCA-by-ancestor-sets, not the library's."""
    if x.m == 0:
        return 0
    items = x.items.tolist()
    total = 0
    prev = t.root
    for tgt in items:
        anc = set()
        v = prev
        while True:
            anc.add(v)
            if v == t.root:
                break
            v = t.parent[v]
        v = tgt
        while v not in anc:
            v = t.parent[v]
        total += t.depth[tgt] - t.depth[v]
        prev = tgt
    return 2 * total - t.depth[items[-1]]


def stitch_sequence(s: SearchStats) -> SearchSequence:
    """Rebuild some sequence with exactly the pair counts of s (Hierholzer
    walk over the transition multigraph, starting at s.first)."""
    assert s.m >= 1
    succ: dict[int, deque[int]] = {}
    for a in range(1, s.n + 1):
        run = []
        for b in range(1, s.n + 1):
            c = int(s.pair[a, b])
            if c:
                run.extend([b] * c)
        if run:
            succ[a] = deque(run)
    stack = [s.first]
    out: list[int] = []
    while stack:
        v = stack[-1]
        q = succ.get(v)
        if q:
            stack.append(q.popleft())
        else:
            out.append(stack.pop())
    out.reverse()
    seq = SearchSequence(s.n, out)
    assert np.array_equal(frequencies_from_sequence(seq).pair, s.pair)
    return seq


def exact_weight_inequality_holds(t: StaticTree, dist: np.ndarray) -> bool:
    """Check step_cost(i,j) <= lg(range-sum / min endpoint weight) for all
    pairs with exact integers: weights scaled by 4^maxdepth."""
    n = t.n
    big = max(t.depth[1:])
    scaled = [0] * (n + 1)
    pre = [0] * (n + 1)
    for k in range(1, n + 1):
        scaled[k] = 1 << (2 * (big - t.depth[k]))
        pre[k] = pre[k - 1] + scaled[k]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lo, hi = (i, j) if i <= j else (j, i)
            rng_sum = pre[hi] - pre[lo - 1]
            minw = min(scaled[i], scaled[j])
            if minw << int(dist[i, j]) > rng_sum:
                return False
    return True


def lg(v: float) -> float:
    return math.log2(v)
