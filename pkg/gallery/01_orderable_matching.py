"""
Perfect matchings in orderable hypergraphs
==========================================

Build the 15-vertex 3-hypergraph whose vertex roles read DDDDIDIIIDIIDID,
recover an elimination order, and read off a perfect matching from the
r-sequence.
"""

import random
from itertools import combinations

import numpy as np

from hypermatch import orderable
from hypermatch.core import Hypergraph, is_perfect_matching
from hypermatch.generate import random_orderable

roles = "DDDDIDIIIDIIDID"
n, k = len(roles), 3

# a k-set is an edge exactly when its largest vertex is dominating
H = Hypergraph(k, n, frozenset(E for E in combinations(range(1, n + 1), k)
                               if roles[max(E) - 1] == "D"))
print(f"{len(H)} edges on {n} vertices")

###############################################################################
# The recognizer returns the order together with the number of membership
# tests it spent.

result = orderable.find_elimination_order(H)
print("order:", result.order.role_string())
print("membership tests:", result.membership_tests, "budget:", n ** (k + 1))

###############################################################################
# Walking the order backwards, r grows by k-1 at a dominating vertex and
# drops by 1 at an isolating one.  A perfect matching exists iff r never
# goes negative.

r = orderable.compute_r_sequence(result.order, k)
print("r_15..r_1:", r.backward())
M = orderable.construct_matching_orderable(H)
print("matching:", sorted(M.edges), is_perfect_matching(H, M))

###############################################################################
# Growth of the membership-test counter on random orderable instances.

rng = np.random.default_rng(0)
sizes = np.array([6, 9, 12, 15, 18])
means = []
for size in sizes:
    counts = []
    for seed in rng.integers(0, 2**31, size=40):
        G, _ = random_orderable(int(size), k, random.Random(int(seed)), shuffle=True)
        counts.append(orderable.find_elimination_order(G).membership_tests)
    means.append(np.mean(counts))
slope = np.polyfit(np.log(sizes), np.log(means), 1)[0]
print("mean tests:", np.round(means).astype(int), f"log-log slope {slope:.2f}")
