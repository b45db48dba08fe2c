"""Perfect matching in orderable and separable hypergraphs."""

from .core import (D, I, EliminationOrder, Hypergraph, InstanceError, Labeling,
                   Matching, Role, RSequence, SizeLimitError, is_perfect_matching,
                   materialize, subset_sum)
from .orderable import (Classification, NotOrderableError, RecognitionResult,
                        classify_vertex, compute_r_sequence, construct_matching_orderable,
                        decide_matching_orderable, find_elimination_order,
                        verify_elimination_order)
from .separable import (NotSeparable, counterexample, find_separating_labeling,
                        labeling_to_order_k2, order_to_labeling)
from .reductions import (LiftedInstance, NoMatchingShortcut, compute_b, lift_to_k,
                         pull_back_matching, push_forward_matching, three_partition_to_geq)
from .oracle import (MembershipOracle, brute_force_matching, brute_force_orderable,
                     brute_force_separable)

__version__ = "0.1.0"
