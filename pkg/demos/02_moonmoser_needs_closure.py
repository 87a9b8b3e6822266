"""
Stability alone does not tame it either
=======================================

The temporal Moon-Moser graph never changes (local instability 0) and still
has 3**parts maximal cliques.  Its closure number is what grows.
"""

from temporal_closure import (
    ClosureParams,
    closure_number,
    enumerate_maximal_cliques,
    gen_moonmoser,
    local_instability,
    weak_closure_number,
)

delta = 2
print("parts  n  cliques  eta  c  gamma")
for parts in range(1, 6):
    g = gen_moonmoser(parts, delta)
    p = ClosureParams()
    count = len(enumerate_maximal_cliques(g, delta))
    gamma = weak_closure_number(g, p).value + 1
    print(f"{parts:5d} {g.n:2d}  {count:7d}  {local_instability(g):3d}  {closure_number(g, p)}  {gamma}")
