"""Data model for k-hypergraphs, vertex labelings, elimination orders and
matchings, plus the canonical JSON instance format.

Vertices are the integers ``1..n``.  Edges are stored as strictly ascending
tuples so that two hypergraphs with the same edge set compare equal.
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, ...]

# C(30, 3): largest explicit hypergraph materialize() builds by default.
MAX_KSETS = comb(30, 3)

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


class InstanceError(ValueError):
    """Malformed hypergraph, labeling, order or matching."""


class SizeLimitError(ValueError):
    """An exhaustive construction would exceed its configured bound."""


def check_ksets(n: int, k: int, limit: int | None = MAX_KSETS) -> int:
    """Return C(n, k), raising SizeLimitError above ``limit``."""
    count = comb(n, k)
    if limit is not None and count > limit:
        raise SizeLimitError(
            f"C({n},{k}) = {count} k-sets exceeds the limit of {limit}")
    return count


def canonical_edge(vertices: Iterable[int]) -> Edge:
    return tuple(sorted(vertices))


class Role(enum.Enum):
    DOMINATING = "D"
    ISOLATING = "I"

    @classmethod
    def parse(cls, text: str) -> "Role":
        try:
            return cls(text.upper())
        except ValueError:
            raise InstanceError(f"unknown role {text!r}") from None


D = Role.DOMINATING
I = Role.ISOLATING


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on the vertex set ``1..n``."""

    k: int
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.k < 1:
            raise InstanceError(f"edge cardinality k must be >= 1, got {self.k}")
        if self.n < 0:
            raise InstanceError(f"vertex count must be >= 0, got {self.n}")
        edges = set()
        for e in self.edges:
            ce = canonical_edge(e)
            if len(ce) != self.k or len(set(ce)) != self.k:
                raise InstanceError(f"edge {e} does not have {self.k} distinct vertices")
            if ce[0] < 1 or ce[-1] > self.n:
                raise InstanceError(f"edge {e} has a vertex outside 1..{self.n}")
            if ce in edges:
                raise InstanceError(f"duplicate edge {ce}")
            edges.add(ce)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def complete(cls, k: int, n: int) -> "Hypergraph":
        return cls(k, n, frozenset(combinations(range(1, n + 1), k)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def __contains__(self, edge) -> bool:
        return canonical_edge(edge) in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def induced(self, keep: Iterable[int]) -> "Hypergraph":
        """Induced subhypergraph on ``keep``, relabelled to ``1..len(keep)``
        in ascending order of the kept ids."""
        keep = sorted(set(keep))
        index = {v: i + 1 for i, v in enumerate(keep)}
        edges = frozenset(
            tuple(index[v] for v in e) for e in self.edges
            if all(v in index for v in e))
        return Hypergraph(self.k, len(keep), edges)


@dataclass(frozen=True)
class EliminationOrder:
    """Vertices listed first to last, each tagged with its role."""

    vertices: tuple[int, ...]
    roles: tuple[Role, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "roles", tuple(self.roles))
        if len(self.vertices) != len(self.roles):
            raise InstanceError("order and roles differ in length")
        if sorted(self.vertices) != list(range(1, len(self.vertices) + 1)):
            raise InstanceError("order is not a permutation of 1..n")

    @classmethod
    def from_roles(cls, roles: str | Sequence[Role]) -> "EliminationOrder":
        """Identity order 1..n with roles given as e.g. ``"DDDIDI"``."""
        if isinstance(roles, str):
            roles = [Role.parse(c) for c in roles]
        return cls(tuple(range(1, len(roles) + 1)), tuple(roles))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[tuple[int, Role]]:
        return iter(zip(self.vertices, self.roles))

    def position(self) -> dict[int, int]:
        """Map vertex id -> 1-based position in the order."""
        return {v: i + 1 for i, v in enumerate(self.vertices)}

    def role_string(self) -> str:
        return "".join(r.value for r in self.roles)

    def to_certificate(self) -> dict:
        return {"order": list(self.vertices), "roles": [r.value for r in self.roles]}

    @classmethod
    def from_certificate(cls, data: dict) -> "EliminationOrder":
        return cls(tuple(data["order"]), tuple(Role.parse(r) for r in data["roles"]))


@dataclass(frozen=True)
class Labeling:
    """Integer vertex labels; ``a[v - 1]`` is the label of vertex ``v``.

    The labeling defines the separable hypergraph whose edges are the
    k-sets with nonnegative label sum.
    """

    k: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.k < 1:
            raise InstanceError(f"edge cardinality k must be >= 1, got {self.k}")

    @property
    def n(self) -> int:
        return len(self.a)

    def __getitem__(self, v: int) -> int:
        if not 1 <= v <= len(self.a):
            raise InstanceError(f"vertex {v} outside 1..{len(self.a)}")
        return self.a[v - 1]

    @property
    def total(self) -> int:
        return sum(self.a)

    @property
    def unary_size(self) -> int:
        """Length of the labeling written in unary: sum of |a(v)| plus n."""
        return sum(abs(x) for x in self.a) + len(self.a)


@dataclass(frozen=True)
class RSequence:
    """The values ``r_1..r_n`` stored in position order (``values[0]`` is
    ``r_1``); ``r_{n+1} = 0`` is implicit."""

    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        nxt = 0
        for r in reversed(self.values):
            if r - nxt not in (self.k - 1, -1):
                raise InstanceError(f"consecutive r values {r}, {nxt} violate the update rule")
            nxt = r

    def __getitem__(self, j: int) -> int:
        """``r_j`` for 1-based ``j``; ``r_{n+1}`` is 0."""
        if j == len(self.values) + 1:
            return 0
        if not 1 <= j <= len(self.values):
            raise IndexError(j)
        return self.values[j - 1]

    def __len__(self) -> int:
        return len(self.values)

    def backward(self) -> tuple[int, ...]:
        """``(r_n, ..., r_1)``, the order in which the values are computed."""
        return self.values[::-1]

    def all_nonnegative(self) -> bool:
        return all(r >= 0 for r in self.values)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges."""

    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset(canonical_edge(e) for e in self.edges)
        seen: set[int] = set()
        for e in edges:
            if seen.intersection(e):
                raise InstanceError(f"edge {e} overlaps another matching edge")
            seen.update(e)
        object.__setattr__(self, "edges", edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if isinstance(other, Matching):
            return self.edges == other.edges
        if isinstance(other, (set, frozenset)):
            return self.edges == frozenset(canonical_edge(e) for e in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.edges)

    def covered(self) -> set[int]:
        return {v for e in self.edges for v in e}


def subset_sum(lab: Labeling, vertices: Iterable[int]) -> int:
    """Sum of the labels of ``vertices`` (0 for the empty set)."""
    return sum(lab[v] for v in vertices)


def materialize(lab: Labeling, limit: int | None = MAX_KSETS) -> Hypergraph:
    """The explicit hypergraph of all k-sets with nonnegative label sum.

    Enumerates all C(n, k) subsets, so ``n`` is guarded by ``limit``.
    """
    check_ksets(lab.n, lab.k, limit)
    a = (0,) + lab.a
    edges = frozenset(
        e for e in combinations(range(1, lab.n + 1), lab.k)
        if sum(a[v] for v in e) >= 0)
    return Hypergraph(lab.k, lab.n, edges)


def is_perfect_matching(H: Hypergraph, M: Iterable[Iterable[int]]) -> bool:
    """True iff ``M`` consists of edges of ``H`` partitioning ``1..n``.

    ``M`` need not be a valid :class:`Matching`; overlapping or foreign
    sets simply make the answer False.
    """
    covered: set[int] = set()
    count = 0
    for e in M:
        e = canonical_edge(e)
        if e not in H.edges or covered.intersection(e):
            return False
        covered.update(e)
        count += 1
    return covered == set(H.vertices) and count * H.k == H.n


# --------------------------------------------------------------------------
# JSON instance format


def encode_int(x: int):
    return x if _INT64_MIN <= x <= _INT64_MAX else str(x)


def decode_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InstanceError(f"expected an integer, got {x!r}")
    try:
        return int(x)
    except ValueError:
        raise InstanceError(f"expected an integer, got {x!r}") from None


def to_dict(obj) -> dict:
    if isinstance(obj, Hypergraph):
        return {"type": "hypergraph", "k": obj.k, "n": obj.n,
                "edges": [list(e) for e in obj.sorted_edges()]}
    if isinstance(obj, Labeling):
        return {"type": "labeling", "k": obj.k, "n": obj.n,
                "a": [encode_int(x) for x in obj.a]}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def matching_to_dict(M: Matching, k: int, n: int) -> dict:
    return {"type": "matching", "k": k, "n": n, "edges": [list(e) for e in M]}


def from_dict(data: dict):
    """Parse a hypergraph, labeling or matching object.

    Matchings are returned as ``(Matching, k, n)`` since the edge set alone
    does not record the ground set.
    """
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    try:
        kind = data["type"]
        k = decode_int(data["k"])
        n = decode_int(data["n"])
        if kind == "hypergraph":
            return Hypergraph(k, n, frozenset(tuple(decode_int(v) for v in e)
                                              for e in data["edges"]))
        if kind == "labeling":
            a = tuple(decode_int(x) for x in data["a"])
            if len(a) != n:
                raise InstanceError(f"labeling has {len(a)} labels but n = {n}")
            return Labeling(k, a)
        if kind == "matching":
            edges = [tuple(decode_int(v) for v in e) for e in data["edges"]]
            if any(len(e) != k for e in edges):
                raise InstanceError(f"matching edge with size != {k}")
            return Matching(frozenset(edges)), k, n
    except (KeyError, TypeError) as exc:
        raise InstanceError(f"malformed instance: {exc!r}") from None
    raise InstanceError(f"unknown instance type {kind!r}")


def dumps(obj, **kwargs) -> str:
    return json.dumps(to_dict(obj), **kwargs)


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"invalid JSON: {exc}") from None
    return from_dict(data)


def read_instance(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_instance(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
        fh.write("\n")


def digest(obj) -> str:
    """Content hash of the canonical serialization."""
    text = json.dumps(to_dict(obj), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()[:16]
