"""Workload generators and the sequence -> count-table reduction.

All randomized kinds draw from numpy's default_rng seeded with the
given seed, so a (kind, parameters, seed) triple always reproduces the
same sequence byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .model import SearchSequence, SearchStats

KINDS = ("sequential", "bitrev", "rounds", "markov", "uniform")
RANDOM_KINDS = ("rounds", "markov", "uniform")


@dataclass(frozen=True, eq=False)
class GeneratorSpec:
    kind: str
    n: int
    m: int
    seed: int = 0
    k: int | None = None              # rounds: distinct keys per round
    matrix: np.ndarray | None = None  # markov: row-stochastic (n, n)
    concentration: float = 0.2        # markov: Dirichlet parameter for default rows


def _bit_reversed_cycle(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    if bits == 0:
        return np.array([1], dtype=np.int64)
    vals = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    for _ in range(bits):
        rev = (rev << 1) | (vals & 1)
        vals >>= 1
    return rev + 1


def _tile(cycle: np.ndarray, m: int) -> np.ndarray:
    reps = -(-m // cycle.size)
    return np.tile(cycle, reps)[:m]


def _default_matrix(rng: np.random.Generator, n: int, concentration: float) -> np.ndarray:
    # Normalized Gamma rows == Dirichlet rows; one matrix-shaped draw
    # keeps the byte layout of the randomness fixed.
    g = rng.gamma(concentration, 1.0, size=(n, n))
    sums = g.sum(axis=1)
    for i in np.nonzero(sums == 0.0)[0]:  # float underflow only; keep deterministic
        g[i, :] = 1.0
        sums[i] = float(n)
    return g / sums[:, None]


def _check_matrix(matrix: np.ndarray, n: int) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.shape != (n, n):
        raise UsageError(f"transition matrix must be {n} x {n}")
    if not np.all(np.isfinite(matrix)) or matrix.min() < 0.0:
        raise UsageError("transition matrix entries must be nonnegative")
    if np.abs(matrix.sum(axis=1) - 1.0).max() > 1e-9:
        raise UsageError("transition matrix rows must sum to 1")
    return matrix


def generate(spec: GeneratorSpec) -> SearchSequence:
    """Produce the sequence described by spec.

    sequential cycles 1..n; bitrev cycles the bit-reversal permutation
    (n must be a power of two); rounds repeatedly picks k distinct keys
    then searches n times uniformly among them; markov walks a
    row-stochastic chain from a uniform start; uniform is i.i.d.
    """
    kind, n, m = spec.kind, spec.n, spec.m
    if kind not in KINDS:
        raise UsageError(f"unknown generator kind {kind!r}")
    if n < 1:
        raise UsageError("n must be >= 1")
    if m < 0:
        raise UsageError("m must be >= 0")

    if kind == "sequential":
        return SearchSequence(n, _tile(np.arange(1, n + 1, dtype=np.int64), m))

    if kind == "bitrev":
        if n & (n - 1) or n < 1:
            raise UsageError("bitrev needs n to be a power of two")
        return SearchSequence(n, _tile(_bit_reversed_cycle(n), m))

    rng = np.random.default_rng(spec.seed)

    if kind == "uniform":
        return SearchSequence(n, rng.integers(1, n + 1, size=m, dtype=np.int64))

    if kind == "rounds":
        k = spec.k if spec.k is not None else max(1, math.ceil(math.log2(n)))
        if not (1 <= k <= n):
            raise UsageError(f"rounds needs k in 1..{n}, got {k}")
        chunks = []
        have = 0
        while have < m:
            picks = rng.choice(np.arange(1, n + 1, dtype=np.int64), size=k,
                               replace=False)
            repeats = picks[rng.integers(0, k, size=n)]
            chunks.append(picks)
            chunks.append(repeats)
            have += k + n
        return SearchSequence(n, np.concatenate(chunks)[:m] if chunks
                              else np.zeros(0, dtype=np.int64))

    # markov
    matrix = spec.matrix
    if matrix is None:
        matrix = _default_matrix(rng, n, spec.concentration)
    matrix = _check_matrix(matrix, n)
    if m == 0:
        return SearchSequence(n, np.zeros(0, dtype=np.int64))
    cum = matrix.cumsum(axis=1)
    items = np.empty(m, dtype=np.int64)
    cur = int(rng.integers(1, n + 1))
    items[0] = cur
    draws = rng.random(m - 1)
    for i in range(1, m):
        nxt = int(np.searchsorted(cum[cur - 1], draws[i - 1], side="right")) + 1
        cur = min(nxt, n)  # guard the u == 1.0-epsilon edge of the last bucket
        items[i] = cur
    return SearchSequence(n, items)


def frequencies_from_sequence(x: SearchSequence) -> SearchStats:
    """Count table of x: per-key totals, consecutive-pair counts, endpoints."""
    n = x.n
    items = x.items
    m = x.m
    pair = np.zeros((n + 1, n + 1), dtype=np.int64)
    if m >= 2:
        np.add.at(pair, (items[:-1], items[1:]), 1)
    searches = np.bincount(items, minlength=n + 1).astype(np.int64)
    first = int(items[0]) if m else 0
    last = int(items[-1]) if m else 0
    return SearchStats(n=n, m=m, pair=pair, searches=searches, first=first, last=last)
