"""Static-graph reference values computed from scratch, for degeneration checks."""

from itertools import combinations, permutations


def static_closure(n, edges):
    """1 + the largest common-neighbour count of a non-adjacent pair."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    worst = 0
    for u, v in combinations(range(n), 2):
        if v not in adj[u]:
            worst = max(worst, len(adj[u] & adj[v]))
    return worst + 1


def static_weak_closure(n, edges):
    """Least gamma over all vertex orderings, each suffix evaluated on its induced graph."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = None
    for order in permutations(range(n)):
        worst = 0
        for i, v in enumerate(order):
            rest = set(order[i:])
            for u in rest - {v}:
                if u not in adj[v]:
                    worst = max(worst, len(adj[u] & adj[v] & rest))
        best = worst if best is None else min(best, worst)
    return (best or 0) + 1
