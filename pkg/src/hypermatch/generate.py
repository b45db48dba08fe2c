"""Seeded random instances.

Every generator takes a :class:`random.Random`, so a fixed seed gives the
same instance on every run and platform.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .core import (D, I, MAX_KSETS, EliminationOrder, Hypergraph, Labeling,
                   Role, check_ksets)


def orderable_from_order(O: EliminationOrder, k: int, limit: int | None = MAX_KSETS) -> Hypergraph:
    """The hypergraph for which ``O`` is an elimination order: a k-set is an
    edge iff its last vertex in the order is dominating."""
    check_ksets(O.n, k, limit)
    pos = O.position()
    edges = frozenset(
        E for E in combinations(range(1, O.n + 1), k)
        if O.roles[max(pos[v] for v in E) - 1] is D)
    return Hypergraph(k, O.n, edges)


def random_order(n: int, k: int, rng: random.Random, p: float = 0.5,
                 shuffle: bool = False) -> EliminationOrder:
    """Roles dominating with probability ``p``; the first ``k - 1``
    positions are vacuous and always dominating."""
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    roles = tuple(D if i < k - 1 or rng.random() < p else I for i in range(n))
    vertices = list(range(1, n + 1))
    if shuffle:
        rng.shuffle(vertices)
    return EliminationOrder(tuple(vertices), roles)


def random_orderable(n: int, k: int, rng: random.Random, p: float = 0.5,
                     shuffle: bool = False,
                     roles: str | Sequence[Role] | None = None) -> tuple[Hypergraph, EliminationOrder]:
    if roles is not None:
        O = EliminationOrder.from_roles(roles)
        if O.n != n:
            raise ValueError(f"{O.n} roles given for n = {n}")
    else:
        O = random_order(n, k, rng, p, shuffle)
    return orderable_from_order(O, k), O


def random_hypergraph(n: int, k: int, rng: random.Random, density: float = 0.5) -> Hypergraph:
    check_ksets(n, k)
    edges = frozenset(E for E in combinations(range(1, n + 1), k) if rng.random() < density)
    return Hypergraph(k, n, edges)


def random_labeling(n: int, k: int, rng: random.Random, value_range: int = 5) -> Labeling:
    return Labeling(k, tuple(rng.randint(-value_range, value_range) for _ in range(n)))


def random_three_partition(m: int, rng: random.Random, value_range: int = 6) -> Labeling:
    """``3m`` labels in ``[-value_range, value_range]`` summing to 0.

    The first ``3m - 1`` labels are drawn freely and the last one is set to
    cancel them; draws whose last label would fall out of range are
    rejected.
    """
    if m < 0 or value_range < 0:
        raise ValueError("m and value_range must be nonnegative")
    if m == 0:
        return Labeling(3, ())
    while True:
        a = [rng.randint(-value_range, value_range) for _ in range(3 * m - 1)]
        last = -sum(a)
        if abs(last) <= value_range:
            return Labeling(3, tuple(a) + (last,))
