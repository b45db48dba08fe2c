"""Acceptance suite.

Each test checks one numbered criterion and records a pass/fail line.  The
lines are printed at the end of the pytest run (see conftest.py) and also when
this file is executed directly.
"""

import json
import random
import time
from pathlib import Path

import numpy as np
import pytest

from hypermatch.core import Labeling, is_perfect_matching, materialize
from hypermatch.generate import random_orderable, random_three_partition
from hypermatch.oracle import (MembershipOracle, brute_force_matching, brute_force_orderable,
                               brute_force_separable)
from hypermatch.orderable import (compute_r_sequence, construct_matching_orderable,
                                  decide_matching_orderable, find_elimination_order)
from hypermatch.reductions import (NoMatchingShortcut, lift_to_k, pull_back_matching,
                                   push_forward_matching, three_partition_to_geq)
from hypermatch.separable import (NotSeparable, check_infeasibility_certificate, counterexample,
                                  find_separating_labeling, order_to_labeling, separating_system)

from conftest import (EXAMPLE1_MATCHING, EXAMPLE1_R_BACKWARD, EXAMPLE1_ROLES, all_hypergraphs,
                      hypergraph_from_roles)

RESULTS: list[str] = []

# membership-test counts gathered by criteria 2 and 3, checked by criterion 4
BUDGET_LOG: dict[str, list[tuple[int, int, int]]] = {}

DUMP_DIR = Path(__file__).resolve().parent.parent / "acceptance-dumps"


def record(number, passed, detail):
    RESULTS.append(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")


def seeded_orderable_k3(count, sizes, seed):
    rng = random.Random(seed)
    probs = (0.5, 0.6, 0.7, 0.8)
    for i in range(count):
        n = sizes[i % len(sizes)]
        H, _ = random_orderable(n, 3, rng, p=probs[(i // len(sizes)) % len(probs)], shuffle=True)
        yield H


def test_criterion_1_example1_golden():
    start = time.perf_counter()
    H = hypergraph_from_roles(EXAMPLE1_ROLES, 3)
    result = find_elimination_order(H)
    r = compute_r_sequence(result.order, 3).backward()
    M = construct_matching_orderable(H)
    elapsed = time.perf_counter() - start
    passed = (r == EXAMPLE1_R_BACKWARD and M == EXAMPLE1_MATCHING and elapsed < 1.0)
    record(1, passed, f"r_15..r_1={r}, matching={sorted(M.edges)}, {elapsed:.3f}s")
    assert r == EXAMPLE1_R_BACKWARD
    assert M == EXAMPLE1_MATCHING
    assert elapsed < 1.0


def test_criterion_2_recognition_exhaustive():
    start = time.perf_counter()
    checked = agree = 0
    log = BUDGET_LOG.setdefault("2", [])
    for k in (3, 2):
        for H in all_hypergraphs(5, k):
            result = find_elimination_order(H)
            log.append((H.n, H.k, result.membership_tests))
            checked += 1
            agree += result.orderable == brute_force_orderable(H)
    elapsed = time.perf_counter() - start
    passed = checked == 2048 and agree == checked and elapsed < 60
    record(2, passed, f"{agree}/{checked} agree, {elapsed:.1f}s")
    assert checked == 2048 and agree == checked
    assert elapsed < 60


def test_criterion_3_matching_criterion():
    start = time.perf_counter()
    checked = agree = perfect = yes = 0
    log = BUDGET_LOG.setdefault("3", [])
    for H in seeded_orderable_k3(510, (9, 12, 15), seed=3):
        log.append((H.n, H.k, find_elimination_order(H).membership_tests))
        decided = decide_matching_orderable(H)
        truth = brute_force_matching(H) is not None
        checked += 1
        agree += decided == truth
        yes += truth
        M = construct_matching_orderable(H)
        perfect += (M is None) if not truth else is_perfect_matching(H, M)
    elapsed = time.perf_counter() - start
    passed = checked >= 500 and agree == checked and perfect == checked and elapsed < 300
    record(3, passed, f"{agree}/{checked} agree ({yes} with a perfect matching), "
                      f"{perfect}/{checked} constructions correct, {elapsed:.1f}s")
    assert checked >= 500 and agree == checked and perfect == checked
    assert elapsed < 300


def test_criterion_4_membership_budget():
    if not {"2", "3"} <= BUDGET_LOG.keys():
        # run standalone: regenerate the instances of criteria 2 and 3
        BUDGET_LOG["2"] = [(5, k, find_elimination_order(H).membership_tests)
                           for k in (3, 2) for H in all_hypergraphs(5, k)]
        BUDGET_LOG["3"] = [(H.n, 3, find_elimination_order(H).membership_tests)
                           for H in seeded_orderable_k3(510, (9, 12, 15), seed=3)]
    entries = BUDGET_LOG["2"] + BUDGET_LOG["3"]
    over = [e for e in entries if e[2] > e[0] ** (e[1] + 1)]

    sizes = (6, 9, 12, 15)
    means = []
    for n in sizes:
        counts = [find_elimination_order(H).membership_tests
                  for H in seeded_orderable_k3(100, (n,), seed=40 + n)]
        means.append(sum(counts) / len(counts))
    slope = float(np.polyfit(np.log(sizes), np.log(means), 1)[0])
    passed = not over and slope <= 4.2
    record(4, passed, f"{len(entries)} instances within n^(k+1) ({len(over)} over), "
                      f"mean counts {[round(m) for m in means]}, log-log slope {slope:.2f}")
    assert not over
    assert slope <= 4.2


def _dump(name, H, lp, bounded):
    DUMP_DIR.mkdir(exist_ok=True)
    path = DUMP_DIR / f"{name}.json"
    path.write_text(json.dumps({
        "k": H.k, "n": H.n, "edges": [list(e) for e in sorted(H.edges)],
        "lp": "separable" if isinstance(lp, Labeling) else "not separable",
        "bounded": None if bounded is None else list(bounded.a),
    }, indent=2) + "\n")
    return path


def test_criterion_5_separability_recognition(p4):
    start = time.perf_counter()
    families = [(n, 2) for n in range(0, 6)] + [(5, 3)]
    checked = yes = 0
    disagreements = []
    for n, k in families:
        for H in all_hypergraphs(n, k):
            lp = find_separating_labeling(H)
            bounded = brute_force_separable(H, B=8)
            checked += 1
            if isinstance(lp, Labeling):
                yes += 1
                ok = materialize(lp) == H and bounded is not None
            else:
                ok = bounded is None and check_infeasibility_certificate(
                    separating_system(H), lp.dual)
            if not ok:
                disagreements.append(_dump(f"separable-{k}-{n}-{len(disagreements)}", H, lp, bounded))
    p4_result = find_separating_labeling(p4)
    p4_ok = isinstance(p4_result, NotSeparable)
    elapsed = time.perf_counter() - start
    passed = not disagreements and p4_ok
    record(5, passed, f"{checked} instances, {yes} separable, {len(disagreements)} disagreements, "
                      f"P4 {'NotSeparable' if p4_ok else 'separable'}, {elapsed:.1f}s")
    assert not disagreements, f"dumped to {disagreements[:3]}"
    assert p4_ok


def test_criterion_6_containment_and_strictness():
    strict_ok = 0
    cases = [(k, n) for k in (3, 4, 5) for n in range(k + 1, k + 5)]
    for k, n in cases:
        H = materialize(counterexample(k, n))
        strict_ok += (len(H) == 2
                      and isinstance(find_separating_labeling(H), Labeling)
                      and not find_elimination_order(H).orderable)

    rng = random.Random(6)
    round_trips = 0
    for _ in range(200):
        k = rng.randint(1, 3)
        H, O = random_orderable(rng.randint(0, 12), k, rng, p=rng.random(), shuffle=True)
        round_trips += materialize(order_to_labeling(O, k)) == H
    passed = strict_ok == len(cases) == 12 and round_trips == 200
    record(6, passed, f"{strict_ok}/{len(cases)} counterexamples strict, "
                      f"{round_trips}/200 order labelings reproduce the hypergraph")
    assert strict_ok == len(cases) == 12
    assert round_trips == 200


def test_criterion_7_reductions():
    start = time.perf_counter()
    rng = random.Random(7)
    tp_checked = tp_agree = tp_yes = 0
    for i in range(240):
        lab = random_three_partition(1 + i % 4, rng, value_range=6)
        assert lab.total == 0 and all(abs(x) <= 6 for x in lab.a)
        eq = brute_force_matching(MembershipOracle.from_labeling(lab, "eq")) is not None
        reduced = three_partition_to_geq(lab)
        if isinstance(reduced, NoMatchingShortcut):
            geq = False
        else:
            geq = brute_force_matching(MembershipOracle.from_labeling(reduced, "geq")) is not None
        tp_checked += 1
        tp_agree += eq == geq
        tp_yes += eq

    lifts = lift_ok = lift_yes = 0
    while lifts < 120:
        m = rng.randint(1, 3)
        k = (4, 5)[lifts % 2]
        lab = Labeling(3, [rng.randint(-4, 4) for _ in range(3 * m)])
        L = lift_to_k(lab, k)
        M = brute_force_matching(MembershipOracle.from_labeling(lab))
        if isinstance(L, NoMatchingShortcut):
            # no lifted instance to check; only count real lifts
            assert M is None
            continue
        lifts += 1
        H_prime = materialize(L.labeling_prime)
        shape = all(sum(1 for v in E if v <= lab.n) <= 3 for E in H_prime.edges)
        M_prime = brute_force_matching(H_prime)
        ok = shape and (M is None) == (M_prime is None)
        if M is not None:
            lift_yes += 1
            ok = ok and pull_back_matching(push_forward_matching(M, L), L) == M
            ok = ok and is_perfect_matching(materialize(lab), pull_back_matching(M_prime, L))
        lift_ok += ok
    elapsed = time.perf_counter() - start
    passed = (tp_checked >= 200 and tp_agree == tp_checked and lifts >= 100
              and lift_ok == lifts and elapsed < 600)
    record(7, passed, f"3-partition {tp_agree}/{tp_checked} agree ({tp_yes} yes), "
                      f"lifts {lift_ok}/{lifts} correct ({lift_yes} yes), {elapsed:.1f}s")
    assert tp_checked >= 200 and tp_agree == tp_checked
    assert lifts >= 100 and lift_ok == lifts
    assert elapsed < 600


def test_criterion_8_hardness_substitute():
    # Asymptotic hardness cannot be measured.  What can be checked is that both
    # reductions are deterministic instance maps whose output size stays
    # polynomial in the unary input size; criterion 7 checks they preserve answers.
    rng = random.Random(8)
    ok = True
    for _ in range(50):
        lab = random_three_partition(rng.randint(1, 4), rng, value_range=6)
        ok &= three_partition_to_geq(lab) == three_partition_to_geq(lab)
        for k in (4, 5, 7):
            L1, L2 = lift_to_k(lab, k), lift_to_k(lab, k)
            if isinstance(L1, NoMatchingShortcut):
                continue
            ok &= L1.labeling_prime == L2.labeling_prime
            ok &= L1.n_prime == lab.n * k // 3
            ok &= L1.labeling_prime.unary_size <= 4 * k * lab.unary_size * max(lab.n, 1)
    record(8, ok, "not measurable at desk scale; substituted by criterion 7 plus "
                  "determinism and size checks of both reductions")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
