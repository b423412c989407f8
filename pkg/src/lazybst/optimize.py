"""Tree builders: exact optimizers, enumeration, and heuristic constructions.

The two lazy-finger optimizers minimize the transition cost (the
quantity ``cost_from_frequencies`` reports) over all BSTs on 1..n.
Interval subproblems count every crossing of the interval root's child
edges, including transitions that leave the interval, so subtree
optimality composes.  ``optimal_lazy_naive`` evaluates every sum by
brute force in O(n^5) and exists as a cross-check for the O(n^3)
``optimal_lazy_dp``; ``enumerate_optimal`` scores every tree shape and
is the ground-truth oracle for small n.  All tie-breaks prefer the
smallest root per interval, which makes every optimizer deterministic.
"""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass

import numpy as np

from .entropy import WeightVector
from .errors import InvalidInputError, UsageError
from .model import SearchStats, StaticTree, build_tree, distance_matrix


@dataclass(frozen=True, eq=False)
class PrefixTable:
    """2D inclusive prefix sums over a pair-count table.

    ``P[i, j]`` holds the sum of counts over rows 1..i, cols 1..j, so
    any rectangle sums in O(1) via rect().
    """

    n: int
    P: np.ndarray

    def rect(self, r1: int, r2: int, c1: int, c2: int) -> int:
        """Sum of counts over rows r1..r2, cols c1..c2 (inclusive, 1-based).

        Empty ranges return 0.
        """
        if r1 > r2 or c1 > c2:
            return 0
        P = self.P
        return int(P[r2, c2] - P[r1 - 1, c2] - P[r2, c1 - 1] + P[r1 - 1, c1 - 1])


def prefix_sums(s: SearchStats) -> PrefixTable:
    n = s.n
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[1:, 1:] = s.pair[1:, 1:].cumsum(axis=0).cumsum(axis=1)
    return PrefixTable(n=n, P=P)


@dataclass(frozen=True)
class OptResult:
    tree: StaticTree
    cost: int


def _tree_from_root_table(n: int, root_at) -> StaticTree:
    """Materialize the tree encoded by a per-interval root choice."""
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    top = root_at(1, n)
    stack = [(1, n)]
    while stack:
        a, b = stack.pop()
        r = root_at(a, b)
        if a <= r - 1:
            left[r] = root_at(a, r - 1)
            stack.append((a, r - 1))
        if r + 1 <= b:
            right[r] = root_at(r + 1, b)
            stack.append((r + 1, b))
    return build_tree(n, top, left, right)


def optimal_lazy_naive(s: SearchStats) -> OptResult:
    """Reference lazy-finger optimizer with all sums evaluated literally.

    For interval [a, b] and candidate root r, the root's child edges are
    crossed by: transitions between the two sides (twice each),
    transitions between r and the rest of the interval (once each), and
    transitions between the interval minus r and the outside world (once
    each).  O(n^5); use optimal_lazy_dp for anything but tiny n.
    """
    n = s.n
    f = [[int(v) for v in row] for row in s.pair.tolist()]
    cost = [[0] * (n + 1) for _ in range(n + 2)]
    root = [[0] * (n + 1) for _ in range(n + 1)]
    for ln in range(1, n + 1):
        for a in range(1, n - ln + 2):
            b = a + ln - 1
            best = None
            best_r = 0
            for r in range(a, b + 1):
                sub = cost[a][r - 1] + cost[r + 1][b]
                both = 0
                for i in range(a, r):
                    for j in range(r + 1, b + 1):
                        both += f[i][j] + f[j][i]
                to_root = 0
                for i in range(a, b + 1):
                    if i != r:
                        to_root += f[i][r] + f[r][i]
                outside = 0
                for i in range(a, b + 1):
                    if i == r:
                        continue
                    for j in range(1, a):
                        outside += f[i][j] + f[j][i]
                    for j in range(b + 1, n + 1):
                        outside += f[i][j] + f[j][i]
                total = sub + 2 * both + to_root + outside
                if best is None or total < best:
                    best = total
                    best_r = r
            cost[a][b] = best
            root[a][b] = best_r
    tree = _tree_from_root_table(n, lambda a, b: root[a][b])
    return OptResult(tree=tree, cost=cost[1][n])


def optimal_lazy_dp(s: SearchStats) -> OptResult:
    """Lazy-finger optimizer in O(n^3) via prefix tables.

    Same recurrence as optimal_lazy_naive; every per-root sum collapses
    to O(1) rectangle and row/column range lookups, and the minimum over
    roots is taken vectorized (argmin returns the first minimum, i.e.
    the smallest root).
    """
    n = s.n
    pair = s.pair
    P = prefix_sums(s).P
    R = pair.cumsum(axis=1)          # R[i, j] = sum of f[i, 1..j]
    C = pair.cumsum(axis=0)          # C[i, j] = sum of f[1..i, j]
    rowtot = R[:, n].copy()
    coltot = C[n, :].copy()
    srow = np.zeros(n + 1, dtype=np.int64)
    srow[1:] = np.cumsum(rowtot[1:])
    scol = np.zeros(n + 1, dtype=np.int64)
    scol[1:] = np.cumsum(coltot[1:])
    diag = np.diagonal(pair).copy()

    cost = np.zeros((n + 2, n + 1), dtype=np.int64)
    root = np.zeros((n + 1, n + 1), dtype=np.int32)
    for ln in range(1, n + 1):
        for a in range(1, n - ln + 2):
            b = a + ln - 1
            r = np.arange(a, b + 1)
            rm1 = r - 1
            sub = cost[a, a - 1:b] + cost[a + 1:b + 2, b]
            lr = (P[rm1, b] - P[a - 1, b] - P[rm1, r] + P[a - 1, r]) \
                + (P[b, rm1] - P[b, a - 1] - P[r, rm1] + P[r, a - 1])
            row_in = R[r, b] - R[r, a - 1]
            col_in = C[b, r] - C[a - 1, r]
            to_root = row_in + col_in - 2 * diag[r]
            box = P[b, b] - P[a - 1, b] - P[b, a - 1] + P[a - 1, a - 1]
            block_out = (srow[b] - srow[a - 1]) + (scol[b] - scol[a - 1]) - 2 * box
            outside = block_out - (rowtot[r] - row_in) - (coltot[r] - col_in)
            total = sub + 2 * lr + to_root + outside
            k = int(np.argmin(total))
            cost[a, b] = total[k]
            root[a, b] = a + k
    tree = _tree_from_root_table(n, lambda a, b: int(root[a, b]))
    return OptResult(tree=tree, cost=int(cost[1, n]))


def _all_shapes(lo: int, hi: int, memo: dict):
    """All BST shapes over [lo, hi] as nested (root, left, right) tuples."""
    if lo > hi:
        return (None,)
    key = (lo, hi)
    got = memo.get(key)
    if got is None:
        out = []
        for r in range(lo, hi + 1):
            for L in _all_shapes(lo, r - 1, memo):
                for R in _all_shapes(r + 1, hi, memo):
                    out.append((r, L, R))
        got = memo[key] = tuple(out)
    return got


def enumerate_optimal(s: SearchStats, max_n: int = 10) -> OptResult:
    """Score every BST shape; ties go to the lexicographically smallest
    preorder.  Refuses n > max_n (Catalan growth)."""
    n = s.n
    if n > max_n:
        raise UsageError(f"enumeration over n={n} trees refused (max_n={max_n})")
    pair = s.pair
    best_cost = None
    best_pre = None
    best_shape = None
    for shape in _all_shapes(1, n, {}):
        left = [0] * (n + 1)
        right = [0] * (n + 1)
        pre = []
        stack = [shape]
        while stack:
            node = stack.pop()
            r, L, R = node
            pre.append(r)
            if R is not None:
                right[r] = R[0]
            if L is not None:
                left[r] = L[0]
            # push right first so the left subtree is visited next
            if R is not None:
                stack.append(R)
            if L is not None:
                stack.append(L)
        tree = build_tree(n, shape[0], left, right)
        cost = int((pair * distance_matrix(tree)).sum())
        pre_t = tuple(pre)
        if best_cost is None or cost < best_cost or \
                (cost == best_cost and pre_t < best_pre):
            best_cost = cost
            best_pre = pre_t
            best_shape = tree
    return OptResult(tree=best_shape, cost=best_cost)


def optimal_root_dp(s: SearchStats, accelerated: bool = True) -> OptResult:
    """Minimize the root-finger cost sum searches(a) * depth(a).

    The classic interval recurrence; with ``accelerated`` the root scan
    per interval is restricted to the monotone window between the roots
    of the two shorter intervals, giving O(n^2) total.  Both variants
    break ties toward the smallest root.
    """
    n = s.n
    w = [0] * (n + 1)
    for k in range(1, n + 1):
        w[k] = w[k - 1] + int(s.searches[k])
    sv = [int(v) for v in s.searches.tolist()]

    if not accelerated:
        cost = np.zeros((n + 2, n + 1), dtype=np.int64)
        root = np.zeros((n + 1, n + 1), dtype=np.int32)
        s_arr = np.asarray(s.searches, dtype=np.int64)
        for ln in range(1, n + 1):
            for a in range(1, n - ln + 2):
                b = a + ln - 1
                r = np.arange(a, b + 1)
                total = cost[a, a - 1:b] + cost[a + 1:b + 2, b] \
                    + (w[b] - w[a - 1]) - s_arr[r]
                k = int(np.argmin(total))
                cost[a, b] = total[k]
                root[a, b] = a + k
        tree = _tree_from_root_table(n, lambda a, b: int(root[a, b]))
        return OptResult(tree=tree, cost=int(cost[1, n]))

    cost = [[0] * (n + 2) for _ in range(n + 2)]
    root = [[0] * (n + 2) for _ in range(n + 2)]
    for a in range(1, n + 1):
        root[a][a] = a
    for ln in range(2, n + 1):
        for a in range(1, n - ln + 2):
            b = a + ln - 1
            lo = root[a][b - 1]
            hi = root[a + 1][b]
            base = w[b] - w[a - 1]
            best = None
            best_r = 0
            for r in range(lo, hi + 1):
                total = cost[a][r - 1] + cost[r + 1][b] + base - sv[r]
                if best is None or total < best:
                    best = total
                    best_r = r
            cost[a][b] = best
            root[a][b] = best_r
    tree = _tree_from_root_table(n, lambda a, b: root[a][b])
    return OptResult(tree=tree, cost=cost[1][n])


def mehlhorn_build(w: WeightVector) -> StaticTree:
    """Weight-bisection tree: each interval's root minimizes the absolute
    difference between left and right subtree weight, ties to the
    smaller key.  Guarantees depth(j) <= 2 + 1.45 lg(W / w_j)."""
    n = w.n
    prefix = w.prefix
    left = [0] * (n + 1)
    right = [0] * (n + 1)

    def pick(lo: int, hi: int) -> int:
        # g(r) = left weight - right weight is strictly increasing in r;
        # the minimizer of |g| is at the sign change.
        target = prefix[lo - 1] + prefix[hi]
        a, b = lo, hi
        while a < b:  # smallest r with prefix[r-1] + prefix[r] >= target
            mid = (a + b) // 2
            if prefix[mid - 1] + prefix[mid] >= target:
                b = mid
            else:
                a = mid + 1
        r = a
        if prefix[r - 1] + prefix[r] < target:
            return r  # every split leans left; r == hi
        if r > lo:
            g_r = (prefix[r - 1] + prefix[r]) - target
            g_prev = target - (prefix[r - 2] + prefix[r - 1])
            if g_prev <= g_r:
                return r - 1
        return r

    top = pick(1, n)
    stack = [(1, n)]
    while stack:
        lo, hi = stack.pop()
        r = pick(lo, hi)
        if lo < r:
            left[r] = pick(lo, r - 1)
            stack.append((lo, r - 1))
        if r < hi:
            right[r] = pick(r + 1, hi)
            stack.append((r + 1, hi))
    return build_tree(n, top, left, right)


def treap_build(w: WeightVector, seed: int) -> StaticTree:
    """Random tree where each interval's root is drawn with probability
    proportional to its weight.

    Deterministic given (weights, seed): a single random.Random(seed)
    (Mersenne Twister) generator, intervals processed in preorder (node,
    then left subinterval, then right), one uniform draw per interval
    mapped onto the weight prefix sums.
    """
    n = w.n
    rng = random.Random(seed)
    prefix = w.prefix.tolist()
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    top = 0
    # stack entries: (lo, hi, parent, as_left); pushed so that pops give preorder
    stack = [(1, n, 0, False)]
    while stack:
        lo, hi, parent, as_left = stack.pop()
        total = prefix[hi] - prefix[lo - 1]
        u = prefix[lo - 1] + rng.random() * total
        r = bisect.bisect_right(prefix, u, lo, hi + 1)
        if r > hi:  # float edge: u landed at or past the last prefix
            r = hi
        if parent == 0:
            top = r
        elif as_left:
            left[parent] = r
        else:
            right[parent] = r
        if r < hi:
            stack.append((r + 1, hi, r, False))
        if lo < r:
            stack.append((lo, r - 1, r, True))
    return build_tree(n, top, left, right)
