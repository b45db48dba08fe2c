import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from hypermatch.core import D, I, EliminationOrder, Hypergraph, is_perfect_matching
from hypermatch.generate import orderable_from_order, random_order, random_orderable
from hypermatch.oracle import brute_force_matching
from hypermatch.orderable import (Classification, NotOrderableError, classify_vertex,
                                  compute_r_sequence, construct_matching_orderable,
                                  decide_matching_orderable, find_elimination_order,
                                  verify_elimination_order)

from conftest import EXAMPLE1_MATCHING, EXAMPLE1_R_BACKWARD, all_hypergraphs


def enumerate_containing(H, v, S):
    """Membership of every k-set E with v in E <= S, by plain enumeration."""
    return [set(E) in map(set, H.edges)
            for E in combinations(sorted(S), H.k) if v in E]


def orderable_by_permutations(H):
    """Definition check: some permutation has every vertex dominating or
    isolating within its prefix."""
    for perm in permutations(H.vertices):
        ok = True
        for i, v in enumerate(perm):
            found = set(enumerate_containing(H, v, perm[:i + 1]))
            if len(found) > 1:
                ok = False
                break
        if ok:
            return True
    return False


def test_classify_example1_last_vertex(example1):
    oracle = enumerate_containing(example1, 15, example1.vertices)
    assert len(oracle) == 91 and all(oracle)
    cls, tests = classify_vertex(example1, 15, example1.vertices)
    assert cls is Classification.DOMINATING
    assert tests == 91


def test_classify_example1_neither(example1):
    oracle = enumerate_containing(example1, 14, example1.vertices)
    assert True in oracle and False in oracle
    assert (13, 14, 15) in example1.edges and (12, 13, 14) not in example1.edges
    cls, tests = classify_vertex(example1, 14, example1.vertices)
    assert cls is Classification.NEITHER
    assert tests <= 91


def test_classify_extremes():
    empty = Hypergraph(3, 5)
    full = Hypergraph.complete(3, 5)
    assert classify_vertex(empty, 1, range(1, 6))[0] is Classification.ISOLATING
    assert classify_vertex(full, 1, range(1, 6))[0] is Classification.DOMINATING
    assert classify_vertex(full, 1, {1, 2}) == (Classification.BOTH, 0)
    with pytest.raises(ValueError):
        classify_vertex(full, 3, {1, 2})


def test_prop2_hypergraph_not_orderable(prop2_hypergraph):
    result = find_elimination_order(prop2_hypergraph)
    assert not result.orderable
    assert result.stuck == {1, 2, 3, 4}


def test_example1_order_recovered(example1):
    result = find_elimination_order(example1)
    assert result.orderable
    assert verify_elimination_order(example1, result.order)[0]
    assert result.order.vertices == tuple(range(1, 16))
    assert result.order.role_string() == "DDDDIDIIIDIIDID"


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_small_instances_orderable(k):
    for n in range(k + 1):
        for H in all_hypergraphs(n, k):
            result = find_elimination_order(H)
            assert result.orderable
            assert verify_elimination_order(H, result.order)[0]


def test_verify_example1(example1, example1_order):
    assert verify_elimination_order(example1, example1_order)[0]
    roles = list(example1_order.roles)
    roles[13], roles[14] = roles[14], roles[13]
    swapped = EliminationOrder(example1_order.vertices, tuple(roles))
    assert not verify_elimination_order(example1, swapped)[0]


def test_verify_vacuous_positions():
    H = Hypergraph(3, 3, frozenset({(1, 2, 3)}))
    for roles in ("DDD", "IID", "IDD"):
        assert verify_elimination_order(H, EliminationOrder.from_roles(roles))[0]
    assert not verify_elimination_order(H, EliminationOrder.from_roles("DDI"))[0]
    assert verify_elimination_order(Hypergraph(3, 2), EliminationOrder.from_roles("II"))[0]


def test_r_sequence_example1(example1_order):
    assert compute_r_sequence(example1_order, 3).backward() == EXAMPLE1_R_BACKWARD


def test_r_sequence_small():
    assert compute_r_sequence(EliminationOrder.from_roles("DDD"), 3).backward() == (2, 4, 6)
    assert compute_r_sequence(EliminationOrder.from_roles("I"), 1).values == (-1,)
    # vacuous positions count as dominating whatever they were tagged
    assert compute_r_sequence(EliminationOrder.from_roles("IID"), 3).backward() == (2, 4, 6)


def test_decide_examples(example1):
    assert decide_matching_orderable(example1)
    assert not decide_matching_orderable(Hypergraph(3, 3))
    assert not decide_matching_orderable(Hypergraph.complete(3, 4))
    assert decide_matching_orderable(Hypergraph(3, 0))


def test_decide_rejects_non_orderable(prop2_hypergraph):
    with pytest.raises(NotOrderableError):
        decide_matching_orderable(prop2_hypergraph)
    with pytest.raises(NotOrderableError):
        construct_matching_orderable(prop2_hypergraph)


def test_construct_example1(example1):
    assert construct_matching_orderable(example1) == EXAMPLE1_MATCHING


def test_construct_k1():
    H = Hypergraph(1, 4, frozenset((v,) for v in range(1, 5)))
    assert construct_matching_orderable(H) == H.edges
    assert construct_matching_orderable(Hypergraph(1, 4, frozenset({(1,), (2,)}))) is None


def test_construct_complete():
    assert construct_matching_orderable(Hypergraph.complete(3, 6)) == {(1, 2, 3), (4, 5, 6)}
    assert construct_matching_orderable(Hypergraph(3, 3)) is None


def test_recognizer_agrees_with_permutation_definition():
    for k, n in [(2, 4), (3, 4), (3, 5)]:
        for H in all_hypergraphs(n, k):
            assert find_elimination_order(H).orderable == orderable_by_permutations(H)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10), st.integers(1, 4), st.floats(0, 1), st.randoms(use_true_random=False))
def test_recognizer_accepts_generated_orderable(n, k, p, rng):
    H, O = random_orderable(n, k, rng, p=p, shuffle=True)
    assert verify_elimination_order(H, O)[0]
    result = find_elimination_order(H)
    assert result.orderable
    assert verify_elimination_order(H, result.order)[0]
    assert result.membership_tests <= max(n, 1) ** (k + 1)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5), st.sampled_from([2, 3]), st.floats(0.3, 0.9),
       st.randoms(use_true_random=False))
def test_criterion_and_construction_against_brute_force(m, k, p, rng):
    H, _ = random_orderable(k * m, k, rng, p=p, shuffle=True)
    truth = brute_force_matching(H) is not None
    assert decide_matching_orderable(H) == truth
    M = construct_matching_orderable(H)
    assert (M is not None) == truth
    if M is not None:
        assert is_perfect_matching(H, M)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 9), st.integers(1, 3), st.randoms(use_true_random=False))
def test_r_sequence_matches_role_counts(n, k, rng):
    O = random_order(n, k, rng)
    r = compute_r_sequence(O, k)
    for j in range(1, n + 1):
        later = O.roles[j - 1:]
        d = sum(1 for i, x in enumerate(later, start=j) if x is D or i <= k - 1)
        assert r[j] == (k - 1) * d - (len(later) - d)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 8), st.integers(1, 3), st.randoms(use_true_random=False))
def test_appending_a_dominating_vertex_keeps_orderability(n, k, rng):
    H, _ = random_orderable(n, k, rng, shuffle=True)
    new = n + 1
    extra = {tuple(sorted(E + (new,))) for E in combinations(range(1, new), k - 1)}
    H2 = Hypergraph(k, new, H.edges | extra)
    result = find_elimination_order(H2)
    assert result.orderable and verify_elimination_order(H2, result.order)[0]


def test_budget_on_adversarial_instances():
    # the Prop. 2 counterexample padded to larger n forces full scans
    rng = random.Random(5)
    for n in range(4, 11):
        for _ in range(20):
            H = Hypergraph(3, n, frozenset(
                E for E in combinations(range(1, n + 1), 3) if rng.random() < 0.5))
            assert find_elimination_order(H).membership_tests <= n ** 4


def test_orderable_from_order_matches_roles():
    O = EliminationOrder((3, 1, 2), (D, D, I))
    H = orderable_from_order(O, 2)
    assert H.edges == {(1, 3)}
    assert verify_elimination_order(H, O)[0]
