"""
Cross-checking the engines against brute force
==============================================

The oracle module evaluates every definition literally: all vertex subsets,
all windows, all vertex orderings.  On small graphs the fast engines must
agree with it exactly.
"""

from temporal_closure import (
    ClosureParams,
    enumerate_patterns,
    gen_random_evolving,
    pairwise_instability,
    weak_closure_number,
)
from temporal_closure.oracle import oracle_enumerate, oracle_pairwise_eta, oracle_weak_orderings

agree = total = 0
for seed in range(30):
    g = gen_random_evolving(6, 10, 0.4, 0.1, seed=seed)
    for kind, k in (("clique", 0), ("plex", 1), ("defective", 2)):
        total += 1
        agree += enumerate_patterns(g, 1, kind, k) == oracle_enumerate(g, 1, kind, k)
    total += 2
    agree += pairwise_instability(g, 2) == oracle_pairwise_eta(g, 2)
    p = ClosureParams(0, 1, 0)
    agree += weak_closure_number(g, p).value == oracle_weak_orderings(g, p)
print(f"{agree}/{total} comparisons agree")
