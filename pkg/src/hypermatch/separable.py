"""Separable hypergraphs: exact recognition by linear programming, and the
conversions between elimination orders and separating labelings.

``H`` is separable when some integer labeling ``a`` makes the edges exactly
the k-sets ``E`` with ``a(E) >= 0``.  Equivalently the system

    a(E) >= 0   for every edge E
    a(E) <= -1  for every k-set E that is not an edge

has a rational solution.  We solve its Farkas alternative, which has only
``n + 1`` equality rows: nonnegative weights ``w`` on the k-sets with

    sum(w_E * 1_E : E edge) = sum(w_E * 1_E : E non-edge),
    sum(w_E : E non-edge) = 1.

A feasible ``w`` proves non-separability (adding the weighted rows gives
``0 <= -1``); when no such ``w`` exists, the phase-one duals are a
separating labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from .core import (D, I, MAX_KSETS, EliminationOrder, Hypergraph, Labeling,
                   Role, check_ksets, materialize)
from .lp import phase_one


@dataclass(frozen=True)
class LPSystem:
    """One row per k-subset in lexicographic order; ``is_edge[i]`` selects
    the sense ``>= 0`` (edge) or ``<= -1`` (non-edge)."""

    n: int
    k: int
    ksets: tuple[tuple[int, ...], ...]
    is_edge: tuple[bool, ...]

    def satisfied_by(self, a: Sequence) -> bool:
        for E, edge in zip(self.ksets, self.is_edge):
            s = sum(a[v - 1] for v in E)
            if (edge and s < 0) or (not edge and s > -1):
                return False
        return True


@dataclass(frozen=True)
class NotSeparable:
    """Row weights (one per k-set, lexicographic) proving infeasibility."""

    dual: tuple[Fraction, ...]
    pivots: int = 0

    def to_dict(self) -> dict:
        return {"infeasible": True, "dual": [str(w) for w in self.dual]}


def separating_system(H: Hypergraph, limit: int | None = MAX_KSETS) -> LPSystem:
    check_ksets(H.n, H.k, limit)
    ksets = tuple(combinations(H.vertices, H.k))
    return LPSystem(H.n, H.k, ksets, tuple(E in H.edges for E in ksets))


def check_infeasibility_certificate(system: LPSystem, dual: Sequence) -> bool:
    """Verify that the weighted rows of ``system`` sum to ``0 <= -1``."""
    if len(dual) != len(system.ksets):
        return False
    w = [Fraction(x) for x in dual]
    if any(x < 0 for x in w):
        return False
    if sum(x for x, edge in zip(w, system.is_edge) if not edge) != 1:
        return False
    balance = [Fraction(0)] * (system.n + 1)
    for x, E, edge in zip(w, system.ksets, system.is_edge):
        if x:
            for v in E:
                balance[v] += x if edge else -x
    return not any(balance)


def find_separating_labeling(H: Hypergraph, limit: int | None = MAX_KSETS) -> Labeling | NotSeparable:
    """An integer labeling whose materialization is ``H``, or a certificate
    that none exists.

    The rational labeling from the LP is scaled by the lcm of its
    denominators; every result is checked exactly before it is returned.
    """
    system = separating_system(H, limit)
    n = H.n
    columns = []
    for E, edge in zip(system.ksets, system.is_edge):
        col = [0] * (n + 1)
        for v in E:
            col[v - 1] = 1 if edge else -1
        col[n] = 0 if edge else 1
        columns.append(col)
    A = [[col[i] for col in columns] for i in range(n + 1)]
    b = [0] * n + [1]
    result = phase_one(A, b)

    if result.feasible:
        cert = NotSeparable(result.x, result.pivots)
        if not check_infeasibility_certificate(system, cert.dual):
            raise AssertionError("LP returned an invalid infeasibility certificate")
        return cert

    y = result.farkas
    rational = [-y[i] for i in range(n)]
    scale = lcm(1, *(q.denominator for q in rational))
    a = tuple(int(q * scale) for q in rational)
    lab = Labeling(H.k, a)
    if not system.satisfied_by(a):
        raise AssertionError("LP labeling violates the separating system")
    return lab


def order_to_labeling(O: EliminationOrder, k: int) -> Labeling:
    """Label the vertex at position ``i`` with ``2**i`` if dominating and
    ``-2**i`` if isolating.

    The last vertex of any k-set then outweighs all earlier ones, so the
    sign of the sum is its role.  Vacuous positions keep their given role,
    which is harmless since no k-set has its last vertex there.
    """
    a = [0] * O.n
    for i, (v, role) in enumerate(O, start=1):
        a[v - 1] = 2**i if role is D else -(2**i)
    return Labeling(k, tuple(a))


def labeling_to_order_k2(lab: Labeling) -> EliminationOrder:
    """Elimination order of the graph (``k = 2``) or 1-hypergraph defined by
    ``lab``.

    For ``k = 2`` the vertex placed last is one whose label dominates
    every other in absolute value: a nonnegative such label makes it
    dominating, a negative one isolating.  Ties go to the largest label,
    then the smallest id.
    """
    if lab.k == 1:
        vertices = tuple(range(1, lab.n + 1))
        return EliminationOrder(vertices, tuple(D if lab[v] >= 0 else I for v in vertices))
    if lab.k != 2:
        raise ValueError(f"only k = 1 or 2 is supported, got k = {lab.k}")

    remaining = set(range(1, lab.n + 1))
    tail: list[tuple[int, Role]] = []
    while remaining:
        candidates = []
        for w in remaining:
            aw = lab[w]
            others = [lab[v] for v in remaining if v != w]
            if aw >= 0 and all(aw >= abs(x) for x in others):
                candidates.append((-aw, w, D))
            elif aw < 0 and all(-aw > x for x in others):
                candidates.append((-aw, w, I))
        _, w, role = min(candidates)
        tail.append((w, role))
        remaining.remove(w)
    tail.reverse()
    return EliminationOrder(tuple(v for v, _ in tail), tuple(r for _, r in tail))


def counterexample(k: int, n: int) -> Labeling:
    """A separable, non-orderable k-hypergraph on ``n`` vertices.

    Labels ``0, 1, ..., 1, -(k - 1)`` on the first ``k + 1`` vertices give
    exactly the two edges ``{1..k}`` and ``{2..k+1}``; extra vertices get
    label ``-k`` and lie in no edge.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if n < k + 1:
        raise ValueError(f"n must be >= k + 1 = {k + 1}, got {n}")
    lab = Labeling(k, (0,) + (1,) * (k - 1) + (-(k - 1),) + (-k,) * (n - k - 1))
    expected = {tuple(range(1, k + 1)), tuple(range(2, k + 2))}
    if set(materialize(lab, limit=None).edges) != expected:
        raise AssertionError("counterexample does not have the two prescribed edges")
    return lab

