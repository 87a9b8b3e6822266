"""Temporal graph data model and interval-indexed neighbourhood queries.

Vertices are dense integer ids ``0..n-1`` and time-steps are 1-based.  A
:class:`TemporalGraph` is immutable; every operation that "changes" a graph
returns a new one.

Interval queries are total: an interval reaching past the lifetime is clipped
to ``[1, lifetime]`` instead of raising.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from .exceptions import GraphError

__all__ = [
    "Interval",
    "StaticGraph",
    "TemporalGraph",
    "graph_in_interval",
    "neighbors_in_interval",
    "common_neighbors",
    "remove_vertex",
    "induced_subgraph",
]


@dataclass(frozen=True, order=True)
class Interval:
    """Closed discrete time range ``[start, end]``."""

    start: int
    end: int

    def __post_init__(self):
        if self.start < 1 or self.end < self.start:
            raise GraphError(f"invalid interval [{self.start}, {self.end}]")

    def __len__(self):
        return self.end - self.start + 1

    def __contains__(self, t):
        return self.start <= t <= self.end

    def __iter__(self):
        return iter(range(self.start, self.end + 1))

    def issubset(self, other: "Interval") -> bool:
        return other.start <= self.start and self.end <= other.end

    def __str__(self):
        return f"[{self.start},{self.end}]"


@dataclass(frozen=True)
class StaticGraph:
    """Simple undirected graph on ``0..n-1``; edges are stored as ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "StaticGraph":
        return cls(n, frozenset(edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(b if a == v else a for a, b in self.edges if v in (a, b)))

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            m[u, v] = m[v, u] = True
        return m


class TemporalGraph:
    """A footprint graph plus, for every edge, the sorted set of active time-steps.

    Parameters
    ----------
    n:
        Number of vertices.
    edges:
        Either a mapping ``{(u, v): steps}`` or an iterable of ``(u, v, steps)``.
        Repeated pairs are merged.  ``steps`` must be a non-empty collection of
        integers ``>= 1``.
    lifetime:
        Optional explicit lifetime.  Defaults to the largest active step (or 1
        for an edgeless graph).  An explicit value must not be smaller than the
        largest active step; larger values append empty snapshots.
    """

    __slots__ = ("_n", "_lifetime", "_adj", "_tensor", "_cum")

    def __init__(self, n: int, edges=(), lifetime: int | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj: list[dict[int, set[int]]] = [dict() for _ in range(n)]
        if isinstance(edges, Mapping):
            edges = ((u, v, steps) for (u, v), steps in edges.items())
        for u, v, steps in edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            steps = [int(t) for t in steps]
            if not steps:
                raise GraphError(f"edge ({u}, {v}) has no active time-step")
            if min(steps) < 1:
                raise GraphError(f"edge ({u}, {v}) has a time-step < 1")
            adj[u].setdefault(v, set()).update(steps)
            adj[v].setdefault(u, set()).update(steps)
        self._n = n
        self._adj = tuple({w: tuple(sorted(ts)) for w, ts in sorted(row.items())} for row in adj)
        top = max((ts[-1] for row in self._adj for ts in row.values()), default=1)
        if lifetime is None:
            lifetime = top
        elif lifetime < top:
            raise GraphError(f"lifetime {lifetime} is smaller than the last active step {top}")
        self._lifetime = int(lifetime)
        self._tensor = None
        self._cum = None

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def lifetime(self) -> int:
        return self._lifetime

    @property
    def vertices(self) -> range:
        return range(self._n)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    def steps(self, u: int, v: int) -> tuple[int, ...]:
        """Active time-steps of ``uv`` (empty tuple for a non-edge)."""
        self.check_vertex(u)
        self.check_vertex(v)
        return self._adj[u].get(v, ())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Footprint neighbourhood of ``v``."""
        self.check_vertex(v)
        return tuple(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        """Yield ``(u, v, steps)`` for every footprint edge, ``u < v``, in sorted order."""
        for u, row in enumerate(self._adj):
            for v, ts in row.items():
                if u < v:
                    yield u, v, ts

    @property
    def num_edges(self) -> int:
        return sum(len(row) for row in self._adj) // 2

    def footprint(self) -> StaticGraph:
        return StaticGraph(self._n, frozenset((u, v) for u, v, _ in self.edges()))

    def snapshot(self, t: int) -> StaticGraph:
        return graph_in_interval(self, Interval(t, t))

    def is_active(self, u: int, v: int, start: int, end: int) -> bool:
        """True iff ``uv`` has an active step in ``[start, end]``."""
        ts = self._adj[u].get(v)
        if not ts:
            return False
        i = bisect_left(ts, start)
        return i < len(ts) and ts[i] <= end

    # -- dense views (cached; the graph is immutable) ---------------------

    def snapshot_tensor(self) -> np.ndarray:
        """Boolean array ``S`` of shape ``(lifetime + 1, n, n)``; ``S[t]`` is snapshot ``t``, ``S[0]`` is empty."""
        if self._tensor is None:
            s = np.zeros((self._lifetime + 1, self._n, self._n), dtype=bool)
            for u, v, ts in self.edges():
                idx = np.fromiter(ts, dtype=np.intp)
                s[idx, u, v] = True
                s[idx, v, u] = True
            s.setflags(write=False)
            self._tensor = s
        return self._tensor

    def cumulative_counts(self) -> np.ndarray:
        """Prefix sums of :meth:`snapshot_tensor` along time; ``C[b] - C[a-1]`` counts activations in ``[a, b]``."""
        if self._cum is None:
            c = np.cumsum(self.snapshot_tensor(), axis=0, dtype=np.int32)
            c.setflags(write=False)
            self._cum = c
        return self._cum

    def interval_adjacency(self, start: int, end: int) -> np.ndarray:
        """Adjacency matrix of ``G_[start, end]`` (clipped to ``[1, lifetime]``)."""
        return interval_adjacency(self.cumulative_counts(), start, end)

    # -- dunder -----------------------------------------------------------

    def _key(self):
        return self._n, self._lifetime, tuple(self.edges())

    def __eq__(self, other):
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"TemporalGraph(n={self._n}, m={self.num_edges}, lifetime={self._lifetime})"


def interval_adjacency(cum: np.ndarray, start: int, end: int) -> np.ndarray:
    lifetime = cum.shape[0] - 1
    a, b = max(start, 1), min(end, lifetime)
    if a > b:
        return np.zeros(cum.shape[1:], dtype=bool)
    return (cum[b] - cum[a - 1]) > 0


def _as_interval(i) -> Interval:
    return i if isinstance(i, Interval) else Interval(*i)


def graph_in_interval(g: TemporalGraph, i) -> StaticGraph:
    """``G_I``: the footprint edges with at least one active step inside ``I``."""
    i = _as_interval(i)
    return StaticGraph(g.n, frozenset((u, v) for u, v, _ in g.edges() if g.is_active(u, v, i.start, i.end)))


def neighbors_in_interval(g: TemporalGraph, v: int, i) -> tuple[int, ...]:
    """``N_I(v)`` as a sorted tuple."""
    i = _as_interval(i)
    g.check_vertex(v)
    return tuple(w for w in g.neighbors(v) if g.is_active(v, w, i.start, i.end))


def common_neighbors(g: TemporalGraph, u: int, v: int, i) -> tuple[int, ...]:
    """``CN_I(u, v) = N_I(u) & N_I(v)``.

    The two edges to a common neighbour may be active at different steps of ``I``.
    """
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    nu = set(neighbors_in_interval(g, u, i))
    return tuple(w for w in neighbors_in_interval(g, v, i) if w in nu)


def induced_subgraph(g: TemporalGraph, s: Iterable[int]) -> TemporalGraph:
    """Temporal subgraph induced by ``s``, relabelled so that ``sorted(s)[i]`` becomes ``i``.

    Edge labels are kept in full; the lifetime is recomputed from the kept edges.
    """
    keep = sorted(set(s))
    for v in keep:
        g.check_vertex(v)
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [(new_id[u], new_id[v], ts) for u, v, ts in g.edges() if u in new_id and v in new_id]
    return TemporalGraph(len(keep), edges)


def remove_vertex(g: TemporalGraph, v: int) -> tuple[TemporalGraph, dict[int, int]]:
    """``G - v``.  Returns the new graph and the ``old id -> new id`` map for the survivors."""
    g.check_vertex(v)
    keep = [w for w in g.vertices if w != v]
    return induced_subgraph(g, keep), {w: i for i, w in enumerate(keep)}
