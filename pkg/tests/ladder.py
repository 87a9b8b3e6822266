"""Exhaustive scans of the neighbourhood-growth inequalities, vectorised over vertex pairs."""

import numpy as np


def _tables(g):
    lt, n = g.lifetime, g.n
    adj = np.zeros((lt + 1, lt + 1, n, n), dtype=bool)
    for s in range(1, lt + 1):
        for e in range(s, lt + 1):
            adj[s, e] = g.interval_adjacency(s, e)
    deg = adj.sum(axis=3)
    a = adj.astype(np.int64)
    cn = a @ a
    return adj, deg, cn


def growth_violations(g, eta):
    """Violations of per-vertex growth <= eta * w and common-neighbour growth <= 2 * eta * w."""
    lt = g.lifetime
    if g.n == 0:
        return []
    _, deg, cn = _tables(g)
    off = ~np.eye(g.n, dtype=bool)
    bad = []
    for a in range(1, lt + 1):
        for b in range(a, lt + 1):
            for s in range(1, a + 1):
                for e in range(b, lt + 1):
                    w = (a - s) + (e - b)
                    if (deg[s, e] - deg[a, b] > eta * w).any():
                        bad.append(("vertex", a, b, s, e))
                    if ((cn[s, e] > cn[a, b] + 2 * eta * w) & off).any():
                        bad.append(("pair", a, b, s, e))
    return bad


def cap_violations(g, p, c, eta):
    """Pairs non-adjacent on a long window whose common neighbourhood exceeds c - 1 + 2 eta (b - a - d1)."""
    lt = g.lifetime
    if g.n < 2:
        return []
    adj, _, cn = _tables(g)
    off = ~np.eye(g.n, dtype=bool)
    bad = []
    for a in range(1, lt + 1):
        for b in range(a + p.total, lt + 1):
            cap = c - 1 + 2 * eta * (b - a - p.d1)
            if ((cn[a, b] > cap) & ~adj[a, b] & off).any():
                bad.append((a, b))
    return bad
