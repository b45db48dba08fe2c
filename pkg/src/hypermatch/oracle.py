"""Exponential-time ground truth for small instances.

These deciders share no code with the polynomial algorithms they check:
matching is by dynamic programming over vertex subsets, orderability by
exhaustive backtracking, separability by enumerating bounded labelings.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable

import numpy as np

from .core import Hypergraph, Labeling, Matching, SizeLimitError, subset_sum

MATCHING_LIMITS = {1: 20, 2: 20, 3: 18, 4: 16, 5: 15}
MATCHING_DEFAULT_LIMIT = 15
ORDERABLE_LIMIT = 8
SEPARABLE_MAX_N = 5
SEPARABLE_MAX_B = 8


class MembershipOracle:
    """Answers "is this k-set an edge?" for an explicit or implicit
    hypergraph on ``1..n``."""

    def __init__(self, n: int, k: int, member: Callable[[tuple[int, ...]], bool]):
        self.n = n
        self.k = k
        self._member = member

    def __call__(self, E: tuple[int, ...]) -> bool:
        return bool(self._member(tuple(sorted(E))))

    @classmethod
    def from_hypergraph(cls, H: Hypergraph) -> "MembershipOracle":
        return cls(H.n, H.k, H.edges.__contains__)

    @classmethod
    def from_labeling(cls, lab: Labeling, mode: str = "geq") -> "MembershipOracle":
        """Edges are the k-sets with label sum ``>= 0`` (``mode="geq"``) or
        ``== 0`` (``mode="eq"``, the 3-partition hypergraph)."""
        if mode == "geq":
            return cls(lab.n, lab.k, lambda E: subset_sum(lab, E) >= 0)
        if mode == "eq":
            return cls(lab.n, lab.k, lambda E: subset_sum(lab, E) == 0)
        raise ValueError(f"unknown mode {mode!r}")


def brute_force_matching(oracle: MembershipOracle | Hypergraph, n: int | None = None,
                         k: int | None = None, limit: int | None = None) -> Matching | None:
    """A perfect matching, or None if none exists.

    Each state is the set of still-unmatched vertices; its lowest vertex
    must be covered by some edge inside the state, which fixes the order
    in which edges are chosen and visits every subset at most once.
    """
    if isinstance(oracle, Hypergraph):
        oracle = MembershipOracle.from_hypergraph(oracle)
    n = oracle.n if n is None else n
    k = oracle.k if k is None else k
    if limit is None:
        limit = MATCHING_LIMITS.get(k, MATCHING_DEFAULT_LIMIT)
    if n > limit:
        raise SizeLimitError(f"brute-force matching is limited to n <= {limit} for k = {k}")
    if n % k:
        return None

    # edge bitmasks grouped by their lowest vertex (bit v - 1)
    by_low: list[list[int]] = [[] for _ in range(n)]
    for E in combinations(range(1, n + 1), k):
        if oracle(E):
            by_low[E[0] - 1].append(sum(1 << (v - 1) for v in E))

    @lru_cache(maxsize=None)
    def solve(mask: int) -> int | None:
        # returns the mask of the edge to take next, or 0 when mask is empty
        if not mask:
            return 0
        low = (mask & -mask).bit_length() - 1
        for e in by_low[low]:
            if e & mask == e and solve(mask ^ e) is not None:
                return e
        return None

    full = (1 << n) - 1
    if solve(full) is None:
        return None
    edges = []
    mask = full
    while mask:
        e = solve(mask)
        edges.append(tuple(v + 1 for v in range(n) if e >> v & 1))
        mask ^= e
    return Matching(frozenset(edges))


def brute_force_orderable(H: Hypergraph, limit: int = ORDERABLE_LIMIT) -> bool:
    """Whether some ordering of the vertices is an elimination order.

    Searches over which vertex comes last: it must be dominating or
    isolating in the whole remaining set, after which the rest must be
    orderable.  Every branch is tried, so no exchange argument is needed.
    """
    if H.n > limit:
        raise SizeLimitError(f"brute-force orderability is limited to n <= {limit}")
    k = H.k

    @lru_cache(maxsize=None)
    def orderable(remaining: frozenset[int]) -> bool:
        if len(remaining) <= k:
            return True
        for v in remaining:
            found = {tuple(sorted((v,) + rest)) in H.edges
                     for rest in combinations(remaining - {v}, k - 1)}
            if len(found) == 1 and orderable(remaining - {v}):
                return True
        return False

    return orderable(frozenset(H.vertices))


@lru_cache(maxsize=None)
def _separator_table(n: int, k: int, B: int) -> dict[int, tuple[int, ...]]:
    """Map each edge-set bitmask realised by a labeling in [-B, B]^n to the
    first such labeling in lexicographic order."""
    if n == 0:
        return {0: ()}
    ksets = list(combinations(range(n), k))
    values = np.arange(-B, B + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([values] * n), indexing="ij"), axis=-1).reshape(-1, n)
    incidence = np.zeros((n, len(ksets)), dtype=np.int64)
    for j, E in enumerate(ksets):
        incidence[list(E), j] = 1
    is_edge = (grid @ incidence) >= 0
    keys = is_edge.astype(np.int64) @ (np.int64(1) << np.arange(len(ksets), dtype=np.int64))
    uniq, first = np.unique(keys, return_index=True)
    return {int(key): tuple(int(x) for x in grid[i]) for key, i in zip(uniq, first)}


def brute_force_separable(H: Hypergraph, B: int = SEPARABLE_MAX_B) -> Labeling | None:
    """A labeling with entries in ``[-B, B]`` whose hypergraph is ``H``, or
    None.  None only rules out separators within the bound."""
    if H.n > SEPARABLE_MAX_N or B > SEPARABLE_MAX_B or B < 0:
        raise SizeLimitError(
            f"bounded separator search needs n <= {SEPARABLE_MAX_N} and 0 <= B <= {SEPARABLE_MAX_B}")
    ksets = list(combinations(range(1, H.n + 1), H.k))
    key = sum(1 << j for j, E in enumerate(ksets) if E in H.edges)
    a = _separator_table(H.n, H.k, B).get(key)
    return None if a is None else Labeling(H.k, a)
