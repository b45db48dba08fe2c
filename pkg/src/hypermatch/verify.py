"""Randomized cross-checks of the polynomial algorithms against the
brute-force oracles.

A suite is a list of properties.  Each property draws instances from a
seeded generator and checks one claim on each; the first failing instance
is shrunk by deleting vertices while it still fails.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, Iterable

from . import orderable, reductions, separable
from .core import (D, EliminationOrder, Hypergraph, Labeling, is_perfect_matching,
                   materialize, subset_sum, to_dict)
from .generate import (random_hypergraph, random_labeling, random_orderable,
                       random_three_partition)
from .oracle import MembershipOracle, brute_force_matching, brute_force_orderable, brute_force_separable


@dataclass
class Case:
    instance: Hypergraph | Labeling
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"instance": to_dict(self.instance), "params": self.params}


@dataclass
class Property:
    name: str
    generate: Callable[[random.Random], Case]
    check: Callable[[Case], bool]
    fixed: list[Case] | None = None  # exhaustive list instead of random draws


@dataclass
class PropertyOutcome:
    name: str
    trials: int
    passed: int
    counterexample: Case | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.trials


def _smaller(case: Case) -> Iterable[Case]:
    obj = case.instance
    if isinstance(obj, Hypergraph):
        for v in obj.vertices:
            yield Case(obj.induced(u for u in obj.vertices if u != v), case.params)
        # single deletions break k | n, which hides matching bugs
        if obj.k > 1:
            for drop in combinations(obj.vertices, obj.k):
                yield Case(obj.induced(u for u in obj.vertices if u not in drop), case.params)
    else:
        for i in range(obj.n):
            yield Case(Labeling(obj.k, obj.a[:i] + obj.a[i + 1:]), case.params)


def _fails(prop: Property, case: Case) -> bool:
    try:
        return not prop.check(case)
    except Exception:
        return True


def shrink(prop: Property, case: Case) -> Case:
    improved = True
    while improved:
        improved = False
        for smaller in _smaller(case):
            if _fails(prop, smaller):
                case, improved = smaller, True
                break
    return case


def run_property(prop: Property, trials: int, rng: random.Random) -> PropertyOutcome:
    cases = prop.fixed if prop.fixed is not None else (prop.generate(rng) for _ in range(trials))
    count = passed = 0
    for case in cases:
        count += 1
        try:
            good = prop.check(case)
            error = None
        except Exception as exc:
            good, error = False, f"{type(exc).__name__}: {exc}"
        if not good:
            return PropertyOutcome(prop.name, count, passed, shrink(prop, case), error)
        passed += 1
    return PropertyOutcome(prop.name, count, passed)


# --------------------------------------------------------------------------
# orderable suite


def _gen_small_mixed(rng: random.Random) -> Case:
    n = rng.randint(1, 7)
    k = rng.choice((2, 3))
    if rng.random() < 0.5:
        H, _ = random_orderable(n, k, rng, p=rng.random(), shuffle=True)
        if H.n >= k and rng.random() < 0.5:
            # flip one k-set; usually destroys orderability
            E = tuple(sorted(rng.sample(range(1, n + 1), k)))
            H = Hypergraph(k, n, H.edges ^ {E})
        return Case(H)
    return Case(random_hypergraph(n, k, rng, density=rng.random()))


def _gen_orderable_matching(rng: random.Random) -> Case:
    k = rng.choice((2, 3, 3))
    m = rng.randint(1, 5 if k == 3 else 6)
    H, _ = random_orderable(k * m, k, rng, p=rng.choice((0.5, 0.6, 0.7)), shuffle=True)
    return Case(H)


def _recognizer_agrees(case: Case) -> bool:
    H = case.instance
    return orderable.find_elimination_order(H).orderable == brute_force_orderable(H)


def _certificate_valid(case: Case) -> bool:
    H = case.instance
    result = orderable.find_elimination_order(H)
    return not result.orderable or orderable.verify_elimination_order(H, result.order)[0]


def _test_budget(case: Case) -> bool:
    H = case.instance
    return orderable.find_elimination_order(H).membership_tests <= H.n ** (H.k + 1)


def _criterion_agrees(case: Case) -> bool:
    H = case.instance
    return orderable.decide_matching_orderable(H) == (brute_force_matching(H) is not None)


def _construction_perfect(case: Case) -> bool:
    H = case.instance
    M = orderable.construct_matching_orderable(H)
    if M is None:
        return not orderable.decide_matching_orderable(H)
    return is_perfect_matching(H, M)


def _r_identity(case: Case) -> bool:
    H = case.instance
    order = orderable.designate_vacuous(orderable.find_elimination_order(H).order, H.k)
    r = orderable.compute_r_sequence(order, H.k)
    for j in range(1, H.n + 1):
        later = order.roles[j - 1:]
        d = sum(1 for x in later if x is D)
        if r[j] != (H.k - 1) * d - (len(later) - d):
            return False
    return True


def orderable_suite() -> list[Property]:
    return [
        Property("recognizer agrees with exhaustive search", _gen_small_mixed, _recognizer_agrees),
        Property("elimination order certificate verifies", _gen_small_mixed, _certificate_valid),
        Property("membership tests within n^(k+1)", _gen_small_mixed, _test_budget),
        Property("r-sequence identity r_j = (k-1)d_j - i_j", _gen_orderable_matching, _r_identity),
        Property("r-criterion agrees with brute-force matching", _gen_orderable_matching, _criterion_agrees),
        Property("constructed matching is perfect", _gen_orderable_matching, _construction_perfect),
    ]


# --------------------------------------------------------------------------
# separable suite


def _gen_tiny(rng: random.Random) -> Case:
    n = rng.randint(1, 5)
    k = rng.choice((2, 3))
    if rng.random() < 0.5:
        lab = random_labeling(n, k, rng, value_range=4)
        return Case(materialize(lab))
    return Case(random_hypergraph(n, k, rng, density=rng.random()))


def _lp_agrees_with_search(case: Case) -> bool:
    H = case.instance
    result = separable.find_separating_labeling(H)
    bounded = brute_force_separable(H)
    if isinstance(result, Labeling):
        return materialize(result) == H and bounded is not None
    system = separable.separating_system(H)
    return bounded is None and separable.check_infeasibility_certificate(system, result.dual)


def _gen_orderable_medium(rng: random.Random) -> Case:
    k = rng.choice((1, 2, 3))
    n = rng.randint(0, 9)
    H, O = random_orderable(n, k, rng, p=rng.random(), shuffle=True)
    return Case(H, {"order": O.to_certificate()})


def _containment(case: Case) -> bool:
    H = case.instance
    O = EliminationOrder.from_certificate(case.params["order"]) if "order" in case.params else None
    if O is None or O.n != H.n:
        result = orderable.find_elimination_order(H)
        if not result.orderable:
            return True
        O = result.order
    lab = separable.find_separating_labeling(H)
    return (isinstance(lab, Labeling) and materialize(lab) == H
            and materialize(separable.order_to_labeling(O, H.k)) == H)


def _gen_k2_labeling(rng: random.Random) -> Case:
    return Case(random_labeling(rng.randint(0, 9), rng.choice((1, 2)), rng, value_range=6))


def _k2_equivalence(case: Case) -> bool:
    lab = case.instance
    H = materialize(lab)
    O = separable.labeling_to_order_k2(lab)
    return (orderable.find_elimination_order(H).orderable
            and orderable.verify_elimination_order(H, O)[0])


def _strictness(case: Case) -> bool:
    k, n = case.params["k"], case.params["n"]
    lab = separable.counterexample(k, n)
    H = materialize(lab)
    return (len(H) == 2 and isinstance(separable.find_separating_labeling(H), Labeling)
            and not orderable.find_elimination_order(H).orderable)


def separable_suite() -> list[Property]:
    strict_cases = [Case(separable.counterexample(k, n), {"k": k, "n": n})
                    for k in (3, 4, 5) for n in range(k + 1, k + 5)]
    return [
        Property("LP agrees with bounded separator search", _gen_tiny, _lp_agrees_with_search),
        Property("orderable implies separable", _gen_orderable_medium, _containment),
        Property("separable graphs are orderable", _gen_k2_labeling, _k2_equivalence),
        Property("counterexamples are separable, not orderable", None, _strictness, strict_cases),
    ]


# --------------------------------------------------------------------------
# reductions suite


def _gen_three_partition(rng: random.Random) -> Case:
    return Case(random_three_partition(rng.randint(1, 4), rng, value_range=6))


def _three_partition_equivalence(case: Case) -> bool:
    lab = case.instance
    if lab.k != 3:
        return True
    reduced = reductions.three_partition_to_geq(lab)
    eq = brute_force_matching(MembershipOracle.from_labeling(lab, "eq"))
    if isinstance(reduced, reductions.NoMatchingShortcut):
        return eq is None
    geq = brute_force_matching(MembershipOracle.from_labeling(reduced, "geq"))
    if geq is not None and any(subset_sum(lab, e) != 0 for e in geq):
        return False
    return (eq is None) == (geq is None)


def _gen_lift(rng: random.Random) -> Case:
    m = rng.randint(1, 3)
    lab = random_labeling(3 * m, 3, rng, value_range=4)
    return Case(lab, {"k_target": rng.choice((4, 5))})


def _lift_checks(case: Case) -> bool:
    lab = case.instance
    if lab.k != 3 or lab.n % 3:
        return True
    L = reductions.lift_to_k(lab, case.params["k_target"])
    M = brute_force_matching(MembershipOracle.from_labeling(lab))
    if isinstance(L, reductions.NoMatchingShortcut):
        return M is None
    H_prime = materialize(L.labeling_prime)
    if any(sum(1 for v in E if v <= lab.n) > 3 for E in H_prime.edges):
        return False
    M_prime = brute_force_matching(H_prime)
    if (M is None) != (M_prime is None):
        return False
    if M is not None:
        pushed = reductions.push_forward_matching(M, L)
        if not is_perfect_matching(H_prime, pushed):
            return False
        if reductions.pull_back_matching(pushed, L) != M:
            return False
        pulled = reductions.pull_back_matching(M_prime, L)
        if not is_perfect_matching(materialize(lab), pulled):
            return False
    return L.labeling_prime.unary_size <= 4 * L.k_target * lab.unary_size * max(lab.n, 1)


def reductions_suite() -> list[Property]:
    return [
        Property("3-partition: H_eq matchable iff H_geq matchable", _gen_three_partition,
                 _three_partition_equivalence),
        Property("lift preserves matchability, edge shape, round trip", _gen_lift, _lift_checks),
    ]


SUITES = {
    "orderable": orderable_suite,
    "separable": separable_suite,
    "reductions": reductions_suite,
}


def run_suite(name: str, trials: int, seed: int) -> list[PropertyOutcome]:
    names = list(SUITES) if name == "all" else [name]
    outcomes = []
    for suite in names:
        for i, prop in enumerate(SUITES[suite]()):
            rng = random.Random(f"{seed}:{suite}:{i}")
            outcomes.append(run_property(prop, trials, rng))
    return outcomes


def dump_counterexample(outcome: PropertyOutcome, directory: str | Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    slug = "".join(c if c.isalnum() else "-" for c in outcome.name.lower()).strip("-")
    path = directory / f"counterexample-{slug}.json"
    payload: dict[str, Any] = {"property": outcome.name, "error": outcome.error}
    payload.update(outcome.counterexample.to_dict())
    path.write_text(json.dumps(payload, indent=2) + "\n")
    return path
