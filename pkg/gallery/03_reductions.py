"""
Hardness reductions for separable hypergraphs
=============================================

3-partition asks for a split of zero-sum labels into zero-sum triples.  It
maps to perfect matching in a separable 3-hypergraph, and a padding lift
carries that to any k >= 4.
"""

import random

from hypermatch.core import Labeling, materialize
from hypermatch.generate import random_three_partition
from hypermatch.oracle import MembershipOracle, brute_force_matching
from hypermatch.reductions import (lift_to_k, pull_back_matching, push_forward_matching,
                                   three_partition_to_geq)

lab = random_three_partition(3, random.Random(0), value_range=6)
print("labels:", lab.a, "total:", lab.total)

###############################################################################
# With zero total, a perfect matching of sum >= 0 triples must use triples of
# sum exactly 0, so both hypergraphs agree.

eq = brute_force_matching(MembershipOracle.from_labeling(lab, "eq"))
geq = brute_force_matching(MembershipOracle.from_labeling(three_partition_to_geq(lab), "geq"))
print("H^= matching:", eq and sorted(eq.edges))
print("H^>= matching:", geq and sorted(geq.edges))

###############################################################################
# Lift to k = 5.  Each padding vertex carries 3b, the originals k*a(v)-2b,
# so any edge meets the original vertices in at most three places.

L = lift_to_k(Labeling(3, lab.a), 5)
print("b =", L.b, "labels:", L.labeling_prime.a)
H5 = materialize(L.labeling_prime)
M5 = brute_force_matching(H5)
print("lifted matching:", M5 and sorted(M5.edges))
if geq is not None:
    pushed = push_forward_matching(geq, L)
    print("pushed:", sorted(pushed.edges))
    print("round trip:", sorted(pull_back_matching(pushed, L).edges))
