"""Temporal triadic-closure parameters.

For window parameters ``(d0, d1, d2)``, the closure of a vertex ``v`` is the
largest number of common neighbours ``v`` has with some ``u`` during an
interval ``[a, b]`` with ``b - a <= d1`` and ``[a, b]`` inside
``[1 + d0, lifetime - d2]``, where ``u`` and ``v`` are *not* adjacent during
the padded interval ``[a - d0, b + d2]``.  The closure number is one more than
the largest vertex closure; the weak closure number is obtained from a
min-removal ordering.

All routines are numpy-vectorised over vertex pairs and over chunks of
windows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import TemporalGraph
from .exceptions import GraphError

__all__ = [
    "ClosureParams",
    "OrderingResult",
    "CurvePoint",
    "ClosureRateCurve",
    "vertex_closure",
    "vertex_closures",
    "closure_number",
    "weak_closure_number",
    "closure_rate_curve",
    "greedy_ordering",
]

# Max number of float32 entries materialised per chunk of windows.
_CHUNK_ELEMS = 1 << 22


@dataclass(frozen=True)
class ClosureParams:
    d0: int = 0
    d1: int = 0
    d2: int = 0

    def __post_init__(self):
        if min(self.d0, self.d1, self.d2) < 0:
            raise GraphError(f"closure parameters must be non-negative, got {self}")

    @property
    def total(self) -> int:
        return self.d0 + self.d1 + self.d2

    def __str__(self):
        return f"({self.d0},{self.d1},{self.d2})"


@dataclass(frozen=True)
class OrderingResult:
    """A vertex elimination ordering and the value of each vertex when it was removed.

    ``value`` is the maximum of ``per_step_value`` (0 for an empty graph).  For
    :func:`weak_closure_number` the weak closure number is ``value + 1``.
    """

    order: tuple[int, ...]
    per_step_value: tuple[int, ...]

    @property
    def value(self) -> int:
        return max(self.per_step_value, default=0)


@dataclass(frozen=True)
class CurvePoint:
    x: int
    support: int
    rate: float


@dataclass(frozen=True)
class ClosureRateCurve:
    points: tuple[CurvePoint, ...]
    cumulative: bool = True

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


# ---------------------------------------------------------------------------
# shared helpers


def last_step_matrix(g: TemporalGraph) -> np.ndarray:
    m = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, ts in g.edges():
        m[u, v] = m[v, u] = ts[-1]
    return m


def sub_lifetime(g: TemporalGraph, alive: np.ndarray, last: np.ndarray) -> int:
    """Lifetime of the subgraph induced by ``alive`` (the graph's own lifetime if nothing is removed)."""
    if alive.all():
        return g.lifetime
    idx = np.flatnonzero(alive)
    if idx.size < 2:
        return 1
    return max(int(last[np.ix_(idx, idx)].max()), 1)


def window_stack(cum: np.ndarray, starts: np.ndarray, ends: np.ndarray) -> np.ndarray:
    """Adjacency matrices of ``G_[s, e]`` for many windows at once, clipped to the lifetime."""
    lifetime = cum.shape[0] - 1
    lo = np.clip(starts, 1, lifetime + 1) - 1
    hi = np.clip(ends, 0, lifetime)
    return (cum[np.maximum(hi, lo)] - cum[lo]) > 0


def greedy_ordering(
    g: TemporalGraph,
    values: Callable[[np.ndarray, np.ndarray], np.ndarray],
) -> OrderingResult:
    """Repeatedly remove the vertex of minimum value (ties: smallest id).

    ``values(alive, rows)`` must return the values of the vertices ``rows`` in
    the subgraph induced by the boolean mask ``alive``.  The value of a vertex
    may only depend on vertices within distance two of it and on the lifetime
    of the current subgraph; only those vertices are re-evaluated after a
    removal.
    """
    n = g.n
    alive = np.ones(n, dtype=bool)
    if n == 0:
        return OrderingResult((), ())
    last = last_step_matrix(g)
    foot = last > 0
    current = np.zeros(n, dtype=np.int64)
    current[:] = values(alive, np.arange(n))
    lifetime = sub_lifetime(g, alive, last)
    order, per_step = [], []
    while alive.any():
        idx = np.flatnonzero(alive)
        v = int(idx[np.argmin(current[idx])])
        order.append(v)
        per_step.append(int(current[v]))
        near = foot[v] & alive
        alive[v] = False
        if not alive.any():
            break
        new_lifetime = sub_lifetime(g, alive, last)
        if new_lifetime != lifetime:
            rows = np.flatnonzero(alive)
            lifetime = new_lifetime
        else:
            touched = near | foot[:, near].any(axis=1)
            rows = np.flatnonzero(touched & alive)
        if rows.size:
            current[rows] = values(alive, rows)
    return OrderingResult(tuple(order), tuple(per_step))


# ---------------------------------------------------------------------------
# closure


def _windows(lifetime: int, p: ClosureParams, exact: bool = False) -> tuple[np.ndarray, np.ndarray]:
    lo, hi = 1 + p.d0, lifetime - p.d2
    starts, ends = [], []
    for a in range(lo, hi + 1):
        if exact:
            if a + p.d1 <= hi:
                starts.append(a)
                ends.append(a + p.d1)
        else:
            for b in range(a, min(a + p.d1, hi) + 1):
                starts.append(a)
                ends.append(b)
    return np.asarray(starts, dtype=np.int64), np.asarray(ends, dtype=np.int64)


def _closure_rows(g, p, alive, rows, lifetime):
    n = g.n
    rows = np.asarray(rows, dtype=np.intp)
    best = np.zeros(rows.size, dtype=np.int64)
    starts, ends = _windows(lifetime, p)
    if starts.size == 0 or rows.size == 0:
        return best
    cum = g.cumulative_counts()
    both = alive[:, None] & alive[None, :]
    partner = np.broadcast_to(alive, (rows.size, n)).copy()
    partner[np.arange(rows.size), rows] = False
    chunk = max(1, _CHUNK_ELEMS // max(1, n * n))
    for i in range(0, starts.size, chunk):
        a, b = starts[i : i + chunk], ends[i : i + chunk]
        nb = window_stack(cum, a, b) & both
        nf = nb.astype(np.float32)
        cn = nf[:, rows, :] @ nf
        pad = window_stack(cum, a - p.d0, b + p.d2)[:, rows, :]
        ok = ~pad & partner
        val = np.where(ok, cn, 0).max(axis=(0, 2))
        np.maximum(best, val.astype(np.int64), out=best)
    return best


def vertex_closures(g: TemporalGraph, p: ClosureParams) -> np.ndarray:
    """Closure of every vertex, as an integer array of length ``n``."""
    alive = np.ones(g.n, dtype=bool)
    return _closure_rows(g, p, alive, np.arange(g.n), g.lifetime)


def vertex_closure(g: TemporalGraph, v: int, p: ClosureParams) -> int:
    g.check_vertex(v)
    alive = np.ones(g.n, dtype=bool)
    return int(_closure_rows(g, p, alive, [v], g.lifetime)[0])


def closure_number(g: TemporalGraph, p: ClosureParams) -> int:
    """Least ``c >= 1`` for which ``g`` is ``(d0, d1, d2, c)``-closed."""
    if g.n == 0:
        return 1
    return 1 + int(vertex_closures(g, p).max())


def closure_values_fn(g: TemporalGraph, p: ClosureParams):
    last = last_step_matrix(g)

    def values(alive, rows):
        return _closure_rows(g, p, alive, rows, sub_lifetime(g, alive, last))

    return values


def weak_closure_number(g: TemporalGraph, p: ClosureParams) -> OrderingResult:
    """Greedy min-closure elimination ordering; the weak closure number is ``result.value + 1``.

    Vertex closure can only drop when vertices are deleted, so the greedy
    ordering is optimal.
    """
    return greedy_ordering(g, closure_values_fn(g, p))


def closure_rate_curve(g: TemporalGraph, p: ClosureParams, cumulative: bool = True) -> ClosureRateCurve:
    """Closure rate over windows ``[a, a + d1]`` inside ``[1 + d0, lifetime - d2]``.

    A tuple is an unordered pair ``{u, v}`` with one such window.  In the
    cumulative mode, the point at ``x`` covers tuples with at least ``x``
    common neighbours in the window; otherwise exactly ``x``.  ``rate`` is the
    fraction of those tuples whose pair is adjacent during
    ``[a - d0, a + d1 + d2]``.  In exact mode, values of ``x`` with no support
    are omitted.
    """
    n = g.n
    starts, ends = _windows(g.lifetime, p, exact=True)
    if starts.size == 0 or n < 2:
        return ClosureRateCurve((), cumulative)
    cum = g.cumulative_counts()
    iu = np.triu_indices(n, k=1)
    total = np.zeros(n - 1, dtype=np.int64)
    closed = np.zeros(n - 1, dtype=np.int64)
    chunk = max(1, _CHUNK_ELEMS // max(1, n * n))
    for i in range(0, starts.size, chunk):
        a, b = starts[i : i + chunk], ends[i : i + chunk]
        nf = window_stack(cum, a, b).astype(np.float32)
        cn = (nf @ nf)[:, iu[0], iu[1]].astype(np.int64).ravel()
        adj = window_stack(cum, a - p.d0, b + p.d2)[:, iu[0], iu[1]].ravel()
        total += np.bincount(cn, minlength=n - 1)[: n - 1]
        closed += np.bincount(cn[adj], minlength=n - 1)[: n - 1]
    top = int(np.flatnonzero(total).max())
    if cumulative:
        sup = np.cumsum(total[::-1])[::-1]
        hit = np.cumsum(closed[::-1])[::-1]
    else:
        sup, hit = total, closed
    points = tuple(
        CurvePoint(x, int(sup[x]), float(hit[x]) / float(sup[x]))
        for x in range(top + 1)
        if sup[x] > 0
    )
    return ClosureRateCurve(points, cumulative)
