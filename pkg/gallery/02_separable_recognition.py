"""
Recognizing separable hypergraphs
=================================

A hypergraph is separable when some integer labeling makes the edges exactly
the k-sets of nonnegative label sum.  Recognition is a small exact LP.
"""

from hypermatch.core import EliminationOrder, Hypergraph, materialize
from hypermatch.orderable import find_elimination_order
from hypermatch.separable import (NotSeparable, counterexample, find_separating_labeling,
                                  order_to_labeling)

###############################################################################
# The path on four vertices is not a threshold graph.  The LP says so and
# returns nonnegative multipliers proving infeasibility.

P4 = Hypergraph(2, 4, frozenset({(1, 2), (2, 3), (3, 4)}))
cert = find_separating_labeling(P4)
print(type(cert).__name__, [str(x) for x in cert.dual])
assert isinstance(cert, NotSeparable)

###############################################################################
# Every orderable hypergraph is separable: label the vertex at position i with
# +2^i when dominating and -2^i when isolating.

O = EliminationOrder.from_roles("DDIDI")
lab = order_to_labeling(O, 3)
print("labels:", lab.a, "edges:", sorted(materialize(lab).edges))

###############################################################################
# The converse fails for k >= 3.  These labelings give exactly two edges that
# overlap in k-1 vertices, and no elimination order exists.

for k in (3, 4, 5):
    lab = counterexample(k, k + 2)
    H = materialize(lab)
    print(k, lab.a, sorted(H.edges),
          "orderable" if find_elimination_order(H).orderable else "not orderable",
          "separable" if not isinstance(find_separating_labeling(H), NotSeparable) else "?")
