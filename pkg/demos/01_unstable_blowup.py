"""
Closure alone does not tame the clique count
============================================

Every non-empty vertex subset of this family lives as its own short-lived
clique, so the number of maximal delta-cliques is 2**n - 1 even though the
graph is 1-closed.  What grows with n is the local instability.
"""

from temporal_closure import ClosureParams, closure_number, enumerate_maximal_cliques, gen_example1, local_instability

delta = 1
print(" n  lifetime  cliques  c  local-eta")
for n in range(2, 8):
    g = gen_example1(n, delta)
    cliques = enumerate_maximal_cliques(g, delta)
    c = closure_number(g, ClosureParams(0, delta, 0))
    print(f"{n:2d}  {g.lifetime:8d}  {len(cliques):7d}  {c}  {local_instability(g):9d}")

# a few of the patterns for n = 3; singletons span the whole lifetime
for p in enumerate_maximal_cliques(gen_example1(3, delta), delta):
    print(p.vertices, p.window)
