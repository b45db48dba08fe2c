"""Orderable hypergraphs: recognition by vertex elimination, the r-sequence
matching criterion, and construction of a perfect matching.

A vertex ``v`` is *dominating* in a vertex set ``S`` if every k-set ``E``
with ``v in E <= S`` is an edge, and *isolating* if none is.  A hypergraph
is orderable when its vertices can be listed so that each vertex is
dominating or isolating within the prefix ending at it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import (D, I, EliminationOrder, Hypergraph, Matching, Role,
                   RSequence, canonical_edge)


class Classification(enum.Enum):
    DOMINATING = "dominating"
    ISOLATING = "isolating"
    NEITHER = "neither"
    BOTH = "both"

    @property
    def eligible(self) -> bool:
        return self is not Classification.NEITHER

    def as_role(self) -> Role:
        # vacuous (BOTH) positions are designated dominating
        return I if self is Classification.ISOLATING else D


class NotOrderableError(ValueError):
    def __init__(self, stuck: frozenset[int]):
        self.stuck = stuck
        super().__init__(
            f"hypergraph is not orderable; no vertex of {sorted(stuck)} is "
            f"dominating or isolating")


@dataclass(frozen=True)
class RecognitionResult:
    order: EliminationOrder | None
    stuck: frozenset[int] | None
    membership_tests: int

    @property
    def orderable(self) -> bool:
        return self.order is not None


def classify_vertex(H: Hypergraph, v: int, S: Iterable[int]) -> tuple[Classification, int]:
    """Classify ``v`` within the vertex set ``S`` of ``H``.

    Returns the classification and the number of edge-membership tests
    made; scanning stops as soon as both an edge and a non-edge are seen.
    """
    S = set(S)
    if v not in S:
        raise ValueError(f"vertex {v} is not in the tested set")
    others = sorted(S - {v})
    seen_edge = seen_non_edge = False
    tests = 0
    for rest in combinations(others, H.k - 1):
        tests += 1
        if canonical_edge((v,) + rest) in H.edges:
            seen_edge = True
        else:
            seen_non_edge = True
        if seen_edge and seen_non_edge:
            return Classification.NEITHER, tests
    if seen_edge:
        return Classification.DOMINATING, tests
    if seen_non_edge:
        return Classification.ISOLATING, tests
    return Classification.BOTH, tests


def find_elimination_order(H: Hypergraph) -> RecognitionResult:
    """Build an elimination order from the back, or report the vertex set
    at which no vertex can be eliminated.

    While more than ``k`` vertices remain, the highest-id vertex that is
    dominating or isolating in the remaining set is placed last and
    removed.  The final ``k`` (or fewer) vertices go in ascending order,
    all dominating except the last, which is isolating when the remaining
    k-set is not an edge.
    """
    k = H.k
    remaining = set(H.vertices)
    tail: list[tuple[int, Role]] = []
    tests = 0
    while len(remaining) > k:
        for v in sorted(remaining, reverse=True):
            cls, used = classify_vertex(H, v, remaining)
            tests += used
            if cls.eligible:
                tail.append((v, cls.as_role()))
                remaining.remove(v)
                break
        else:
            return RecognitionResult(None, frozenset(remaining), tests)

    head = sorted(remaining)
    roles = [D] * len(head)
    if len(head) == k and k > 0:
        tests += 1
        if tuple(head) not in H.edges:
            roles[-1] = I
    vertices = head + [v for v, _ in reversed(tail)]
    roles += [r for _, r in reversed(tail)]
    return RecognitionResult(EliminationOrder(tuple(vertices), tuple(roles)), None, tests)


def verify_elimination_order(H: Hypergraph, O: EliminationOrder) -> tuple[bool, int]:
    """Check every position of ``O`` against its prefix.

    Positions whose prefix has fewer than ``k`` vertices are vacuous and
    accept either role.  Returns (valid, membership tests).
    """
    if O.n != H.n:
        raise ValueError(f"order covers {O.n} vertices, hypergraph has {H.n}")
    tests = 0
    prefix: list[int] = []
    for v, role in O:
        want = role is D
        for rest in combinations(prefix, H.k - 1):
            tests += 1
            if (canonical_edge((v,) + rest) in H.edges) != want:
                return False, tests
        prefix.append(v)
    return True, tests


def designate_vacuous(O: EliminationOrder, k: int) -> EliminationOrder:
    """Mark the first ``k - 1`` positions dominating."""
    roles = tuple(D if i < k - 1 else r for i, r in enumerate(O.roles))
    return EliminationOrder(O.vertices, roles)


def _r_update(r_next: int, role: Role, k: int) -> int:
    return r_next + k - 1 if role is D else r_next - 1


def compute_r_sequence(O: EliminationOrder, k: int) -> RSequence:
    """Compute ``r_n, ..., r_1`` backwards from ``r_{n+1} = 0``: add ``k - 1``
    at a dominating vertex, subtract 1 at an isolating one."""
    O = designate_vacuous(O, k)
    values = [0] * O.n
    r = 0
    for j in range(O.n - 1, -1, -1):
        r = _r_update(r, O.roles[j], k)
        values[j] = r
    return RSequence(k, tuple(values))


def _recognize(H: Hypergraph) -> EliminationOrder:
    result = find_elimination_order(H)
    if not result.orderable:
        raise NotOrderableError(result.stuck)
    return designate_vacuous(result.order, H.k)


def decide_matching_orderable(H: Hypergraph) -> bool:
    """Whether an orderable ``H`` has a perfect matching.

    Raises NotOrderableError when the recognizer fails.
    """
    order = _recognize(H)
    if H.n % H.k:
        return False
    return compute_r_sequence(order, H.k).all_nonnegative()


def construct_matching_orderable(H: Hypergraph) -> Matching | None:
    """A perfect matching of an orderable ``H``, or None if there is none.

    The vertices are traversed from last to first.  Dominating vertices
    wait in ``D``; isolating ones collect in ``I`` until ``k - 1`` of them
    can be closed into an edge with the latest-positioned waiting
    dominating vertex.  Leftovers are finished with the latest-positioned
    members of ``D``, and the rest of ``D`` is cut into consecutive blocks.
    """
    order = _recognize(H)
    k = H.k
    if H.n % k or not compute_r_sequence(order, k).all_nonnegative():
        return None
    if k == 1:
        matching = Matching(H.edges)
    else:
        matching = Matching(frozenset(_backward_traversal(order, k)))
    for e in matching.edges:
        if e not in H.edges:
            raise AssertionError(f"constructed set {e} is not an edge")
    return matching


def _backward_traversal(order: EliminationOrder, k: int) -> list[tuple[int, ...]]:
    # D holds positions in decreasing order, so D[0] is the largest index
    dom: list[int] = []
    iso: list[int] = []
    blocks: list[list[int]] = []
    for j in range(order.n - 1, -1, -1):
        if order.roles[j] is D:
            dom.append(j)
        elif len(iso) < k - 2:
            iso.append(j)
        else:
            blocks.append(iso + [j, dom.pop(0)])
            iso = []
    if iso or dom:
        need = k - len(iso)
        if need > len(dom):
            raise AssertionError("too few dominating vertices left; r-sequence is negative")
        blocks.append(iso + dom[:need])
        rest = sorted(dom[need:])
        blocks += [rest[i:i + k] for i in range(0, len(rest), k)]
    return [canonical_edge(order.vertices[j] for j in b) for b in blocks]
