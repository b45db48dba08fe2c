"""Instance maps from 3-partition to perfect matching in separable
hypergraphs, and from separable 3-hypergraphs to separable k-hypergraphs.

3-partition asks whether the vertices split into triples of label sum 0
(the hypergraph ``H_eq``).  When the labels total 0, that happens exactly
when the separable hypergraph ``H_geq`` of triples with nonnegative sum
has a perfect matching, since the matched triples' sums are nonnegative
and add up to 0.

The lift to ``k >= 4`` pads with ``(k - 3) m`` new vertices labelled
``3b`` and rescales each original label to ``k a(v) - (k - 3) b``, where
``b`` exceeds every label sum over at most ``k`` vertices.  A lifted edge
then contains at most three original vertices, so perfect matchings
correspond one to one up to the choice of padding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Labeling, Matching, canonical_edge, encode_int, subset_sum


@dataclass(frozen=True)
class NoMatchingShortcut:
    """The input is a trivial NO instance; ``reason`` says why."""

    reason: str


@dataclass(frozen=True)
class LiftedInstance:
    original: Labeling
    k_target: int
    b: int
    labeling_prime: Labeling

    @property
    def original_n(self) -> int:
        return self.original.n

    @property
    def m(self) -> int:
        return self.original.n // 3

    @property
    def n_prime(self) -> int:
        return self.labeling_prime.n

    @property
    def padding(self) -> range:
        """The new vertices, numbered after the original ones."""
        return range(self.original.n + 1, self.labeling_prime.n + 1)

    def to_dict(self) -> dict:
        return {"original_n": self.original_n, "k": self.k_target, "b": str(self.b),
                "a_prime": [encode_int(x) for x in self.labeling_prime.a]}


def in_h_eq(lab: Labeling, E: Iterable[int]) -> bool:
    return subset_sum(lab, E) == 0


def in_h_geq(lab: Labeling, E: Iterable[int]) -> bool:
    return subset_sum(lab, E) >= 0


def three_partition_to_geq(lab: Labeling) -> Labeling | NoMatchingShortcut:
    """Map a 3-partition instance to the separable 3-hypergraph ``H_geq``.

    The labeling itself defines ``H_geq``; what changes is the question
    asked of it.  Instances whose total is nonzero or whose size is not a
    multiple of 3 are reported as trivial NO instances.
    """
    if lab.k != 3:
        raise ValueError(f"3-partition instances have k = 3, got k = {lab.k}")
    if lab.n % 3:
        return NoMatchingShortcut(f"n = {lab.n} is not a multiple of 3")
    if lab.total != 0:
        return NoMatchingShortcut(f"labels sum to {lab.total}, not 0")
    return lab


def compute_b(lab: Labeling, k: int) -> int:
    """One more than the largest label sum over a set of at most ``k``
    vertices (the empty set counts, so the result is at least 1)."""
    positives = sorted((x for x in lab.a if x > 0), reverse=True)
    return 1 + sum(positives[:k])


def lift_to_k(lab: Labeling, k_target: int) -> LiftedInstance | NoMatchingShortcut:
    if lab.k != 3:
        raise ValueError(f"the lift starts from k = 3, got k = {lab.k}")
    if k_target < 4:
        raise ValueError(f"target k must be >= 4, got {k_target}")
    n = lab.n
    if n % 3:
        return NoMatchingShortcut(f"n = {n} is not a multiple of 3")
    top = sorted(lab.a, reverse=True)[:3]
    if n and sum(top) < 0:
        return NoMatchingShortcut("the 3-hypergraph has no edges")
    m = n // 3
    b = compute_b(lab, k_target)
    a_prime = [k_target * x - (k_target - 3) * b for x in lab.a]
    a_prime += [3 * b] * ((k_target - 3) * m)
    return LiftedInstance(lab, k_target, b, Labeling(k_target, tuple(a_prime)))


def _check_perfect(lab: Labeling, M: Matching, what: str) -> None:
    covered = M.covered()
    if covered != set(range(1, lab.n + 1)) or len(M) * lab.k != lab.n:
        raise ValueError(f"{what} does not cover every vertex exactly once")
    for e in M:
        if len(e) != lab.k or subset_sum(lab, e) < 0:
            raise ValueError(f"{what} contains {e}, which is not an edge")


def push_forward_matching(M: Matching, L: LiftedInstance) -> Matching:
    """Extend each matched triple by a block of ``k - 3`` padding vertices.

    Triples are taken in sorted order and paired with consecutive
    ascending blocks of the padding.
    """
    _check_perfect(L.original, M, "matching")
    width = L.k_target - 3
    pad = list(L.padding)
    lifted = [canonical_edge(e + tuple(pad[i * width:(i + 1) * width]))
              for i, e in enumerate(sorted(M))]
    out = Matching(frozenset(lifted))
    _check_perfect(L.labeling_prime, out, "lifted matching")
    return out


def pull_back_matching(M_prime: Matching, L: LiftedInstance) -> Matching:
    """Restrict each lifted edge to the original vertices."""
    _check_perfect(L.labeling_prime, M_prime, "lifted matching")
    n = L.original_n
    triples = []
    for e in M_prime:
        core = tuple(v for v in e if v <= n)
        if len(core) != 3:
            raise ValueError(f"lifted edge {e} meets the original vertices in "
                             f"{len(core)} places, expected 3")
        triples.append(core)
    out = Matching(frozenset(triples))
    _check_perfect(L.original, out, "pulled-back matching")
    return out
