"""Brute-force reference implementations.

Everything here evaluates the definitions literally over all quantifiers and
deliberately shares no window predicate with the production engines: time
windows are checked by scanning the raw edge labels.  Intended for small
instances only; the enumerators fail loudly above their size guards.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .closure import ClosureParams
from .core import Interval, TemporalGraph, induced_subgraph
from .enumeration import DensePattern
from .exceptions import GraphError, SizeGuardError

__all__ = [
    "oracle_enumerate",
    "oracle_closure",
    "oracle_vertex_closure",
    "oracle_local_eta",
    "oracle_pairwise_eta",
    "oracle_vertex_pairwise_eta",
    "oracle_weak_orderings",
]

MAX_ENUM_VERTICES = 20
MAX_ORDER_VERTICES = 7


def _active(steps, start, end):
    return any(start <= t <= end for t in steps)


def _label_table(g):
    return {(u, v): ts for u, v, ts in g.edges()} | {(v, u): ts for u, v, ts in g.edges()}


# ---------------------------------------------------------------------------
# enumeration


def oracle_enumerate(g: TemporalGraph, delta: int, kind: str = "clique", k: int = 0) -> list[DensePattern]:
    """Every maximal pattern, found by testing all vertex subsets at all window positions."""
    n = g.n
    if n > MAX_ENUM_VERTICES:
        raise SizeGuardError(f"oracle enumeration limited to {MAX_ENUM_VERTICES} vertices, got {n}")
    if kind not in ("clique", "plex", "defective"):
        raise GraphError(f"unknown pattern kind {kind!r}")
    span = g.lifetime - delta
    if span < 1 or n == 0:
        return []
    lab = _label_table(g)
    # missing[t, u, v] = 1 iff u != v and uv has no activation in [t+1, t+1+delta]
    missing = np.ones((span, n, n), dtype=np.int32)
    for t in range(span):
        for u in range(n):
            missing[t, u, u] = 0
            for v in range(n):
                if (u, v) in lab and _active(lab[(u, v)], t + 1, t + 1 + delta):
                    missing[t, u, v] = 0
    masks = np.arange(1, 1 << n)
    member = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int32)
    good = np.empty((span, masks.size), dtype=bool)
    for t in range(span):
        q = (member @ missing[t]) * member  # q[X, v]: non-neighbours of v inside X (0 if v not in X)
        if kind == "clique":
            good[t] = q.sum(axis=1) == 0
        elif kind == "plex":
            good[t] = q.max(axis=1) <= k
        else:
            good[t] = q.sum(axis=1) // 2 <= k
    # time-maximal runs per subset
    runs: dict[int, list[tuple[int, int]]] = {}
    padded = np.zeros((span + 2, masks.size), dtype=np.int8)
    padded[1:-1] = good
    diff = np.diff(padded, axis=0)
    for col in np.flatnonzero(good.any(axis=0)):
        starts = np.flatnonzero(diff[:, col] == 1)
        ends = np.flatnonzero(diff[:, col] == -1) - 1
        runs[int(masks[col])] = list(zip(starts.tolist(), ends.tolist()))
    out = []
    for x, spans in runs.items():
        outside = [1 << w for w in range(n) if not x >> w & 1]
        for s, e in spans:
            if any(good[s : e + 1, (x | b) - 1].all() for b in outside):
                continue
            vs = tuple(w for w in range(n) if x >> w & 1)
            out.append(DensePattern(kind, vs, Interval(s + 1, e + 1 + delta), k if kind != "clique" else 0, delta))
    out.sort(key=lambda p: p.sort_key)
    return out


# ---------------------------------------------------------------------------
# parameters


def _nbr_table(g):
    """``N[(v, s, e)]`` for every vertex and every interval inside ``[1, lifetime]``."""
    lab = _label_table(g)
    table = {}
    for v in range(g.n):
        incident = [(w, lab[(v, w)]) for w in range(g.n) if (v, w) in lab]
        for s in range(1, g.lifetime + 1):
            for e in range(s, g.lifetime + 1):
                table[(v, s, e)] = frozenset(w for w, ts in incident if _active(ts, s, e))
    return lab, table


def oracle_vertex_closure(g: TemporalGraph, v: int, p: ClosureParams) -> int:
    lab, nbr = _nbr_table(g)
    return _vertex_closure(g, lab, nbr, v, p.d0, p.d1, p.d2)


def _vertex_closure(g, lab, nbr, v, d0, d1, d2):
    best = 0
    lt = g.lifetime
    for u in range(g.n):
        if u == v:
            continue
        for a in range(1 + d0, lt - d2 + 1):
            for b in range(a, lt - d2 + 1):
                if b - a > d1:
                    break
                if (u, v) in lab and _active(lab[(u, v)], a - d0, b + d2):
                    continue
                best = max(best, len(nbr[(u, a, b)] & nbr[(v, a, b)]))
    return best


def oracle_closure(g: TemporalGraph, p: ClosureParams) -> int:
    """Least ``c >= 1`` making every eligible non-adjacent pair have fewer than ``c`` common neighbours."""
    lab, nbr = _nbr_table(g)
    return 1 + max((_vertex_closure(g, lab, nbr, v, p.d0, p.d1, p.d2) for v in range(g.n)), default=0)


def oracle_local_eta(g: TemporalGraph) -> int:
    lab = _label_table(g)
    eta = 0
    for v in range(g.n):
        snaps = [{w for (x, w), ts in lab.items() if x == v and t in ts} for t in range(g.lifetime + 1)]
        for t in range(1, g.lifetime):
            eta = max(eta, len(snaps[t] - snaps[t + 1]), len(snaps[t + 1] - snaps[t]))
    return eta


def _pair_eta(g, nbr, u, v, d1, mode):
    lt = g.lifetime
    eta = 0
    for a in range(1, lt + 1):
        for b in range(a, lt + 1):
            if b - a > d1 or (mode == "exact-length" and b - a != d1):
                continue
            base = nbr[(u, a, b)] & nbr[(v, a, b)]
            for left in range(0, a):
                for right in range(0, lt - b + 1):
                    if left + right == 0:
                        continue
                    grown = (nbr[(u, a - left, b + right)] & nbr[(v, a - left, b + right)]) - base
                    need = -(-len(grown) // (left + right))
                    eta = max(eta, need)
    return eta


def oracle_pairwise_eta(g: TemporalGraph, d1: int, mode: str = "exact-length") -> int:
    mode = getattr(mode, "value", mode)
    _, nbr = _nbr_table(g)
    return max((_pair_eta(g, nbr, u, v, d1, mode) for u in range(g.n) for v in range(u + 1, g.n)), default=0)


def oracle_vertex_pairwise_eta(g: TemporalGraph, v: int, d1: int, mode: str = "exact-length") -> int:
    mode = getattr(mode, "value", mode)
    _, nbr = _nbr_table(g)
    return max((_pair_eta(g, nbr, u, v, d1, mode) for u in range(g.n) if u != v), default=0)


# ---------------------------------------------------------------------------
# orderings


def oracle_weak_orderings(g: TemporalGraph, p: ClosureParams, metric: str = "closure",
                          mode: str = "exact-length") -> int:
    """Minimum over all vertex orderings of the largest suffix value of ``metric``.

    ``metric`` is ``"closure"``, ``"pairwise"`` or ``"combined"`` (the maximum
    of the two).  Each suffix is evaluated on its own induced subgraph.
    """
    n = g.n
    if n > MAX_ORDER_VERTICES:
        raise SizeGuardError(f"ordering oracle limited to {MAX_ORDER_VERTICES} vertices, got {n}")
    if metric not in ("closure", "pairwise", "combined"):
        raise GraphError(f"unknown metric {metric!r}")
    mode = getattr(mode, "value", mode)
    d0, d1, d2 = p.d0, p.d1, p.d2

    @lru_cache(maxsize=None)
    def table(suffix: frozenset):
        keep = sorted(suffix)
        h = g if len(keep) == n else induced_subgraph(g, keep)
        return (h, keep) + _nbr_table(h)

    @lru_cache(maxsize=None)
    def value(suffix: frozenset, v: int) -> int:
        h, keep, lab, nbr = table(suffix)
        hv = keep.index(v)
        out = 0
        if metric in ("closure", "combined"):
            out = _vertex_closure(h, lab, nbr, hv, d0, d1, d2)
        if metric in ("pairwise", "combined"):
            out = max(out, max((_pair_eta(h, nbr, u, hv, d1, mode) for u in range(h.n) if u != hv), default=0))
        return out

    best = None
    for perm in permutations(range(n)):
        worst = 0
        for i, v in enumerate(perm):
            worst = max(worst, value(frozenset(perm[i:]), v))
            if best is not None and worst >= best:
                break
        if best is None or worst < best:
            best = worst
    return best if best is not None else 0
