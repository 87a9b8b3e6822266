"""Local and pairwise neighbourhood instability, and their ordering-based variants."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .closure import (
    ClosureParams,
    OrderingResult,
    closure_values_fn,
    greedy_ordering,
    last_step_matrix,
    sub_lifetime,
    window_stack,
)
from .core import TemporalGraph

__all__ = [
    "PairwiseMode",
    "InstabilityReport",
    "local_instability",
    "pairwise_instability",
    "pairwise_matrix",
    "weak_pairwise_instability",
    "combined_weak_value",
    "instability_report",
]


class PairwiseMode(str, Enum):
    """Base windows scanned by the pairwise instability computation.

    ``EXACT``: every ``[a, a + d1]``.  ``UP_TO``: every ``[a, b]`` with ``b - a <= d1``.
    """

    EXACT = "exact-length"
    UP_TO = "up-to-length"

    @classmethod
    def _missing_(cls, value):
        # the tabulated restricted computation scans exactly the [a, a + d1] windows
        if value in ("all-starts-restricted", "restricted"):
            return cls.EXACT
        return None


@dataclass(frozen=True)
class InstabilityReport:
    local_eta: int
    pairwise_eta: int
    weak_pairwise: OrderingResult
    combined: OrderingResult
    mode: PairwiseMode

    @property
    def weak_pairwise_eta(self) -> int:
        return self.weak_pairwise.value

    @property
    def combined_b(self) -> int:
        return self.combined.value


def local_instability(g: TemporalGraph) -> int:
    """Least ``eta`` with ``|N_t(v) - N_{t+1}(v)|`` and ``|N_{t+1}(v) - N_t(v)|`` at most ``eta`` for all ``v`` and ``t``."""
    s = g.snapshot_tensor()[1:]
    if s.shape[0] < 2 or g.n == 0:
        return 0
    lost = (s[:-1] & ~s[1:]).sum(axis=2).max()
    gained = (s[1:] & ~s[:-1]).sum(axis=2).max()
    return int(max(lost, gained))


def _bases(lifetime: int, d1: int, mode: PairwiseMode) -> list[int]:
    """Base-window lengths ``b - a`` scanned in ``mode``."""
    if mode is PairwiseMode.EXACT:
        return [d1] if d1 < lifetime else []
    return list(range(min(d1, lifetime - 1) + 1))


def _pairwise_rows(g, d1, mode, alive, rows, lifetime):
    """Per-pair least eta for pairs ``(r, j)``, ``r`` in ``rows``; shape ``(len(rows), n)``.

    For an extended window ``[s, e]`` every base of length ``m`` inside it is
    widened by the same ``(e - s) - m`` steps, so only the smallest base count
    matters; it is kept as a running minimum while ``e`` grows.
    """
    n = g.n
    rows = np.asarray(rows, dtype=np.intp)
    eta = np.zeros((rows.size, n), dtype=np.int64)
    lengths = _bases(lifetime, d1, PairwiseMode(mode))
    if not lengths or rows.size == 0:
        return eta
    both = alive[:, None] & alive[None, :]
    snaps = g.snapshot_tensor()
    cum = g.cumulative_counts()
    base = {}
    for m in lengths:
        starts = np.arange(1, lifetime - m + 1)
        nb = (window_stack(cum, starts, starts + m) & both).astype(np.float32)
        base[m] = (nb[:, rows, :] @ nb).astype(np.int32)  # base[m][a - 1]: counts on [a, a + m]
        del nb
    for s in range(1, lifetime + 1):
        ext = np.zeros((n, n), dtype=bool)
        low = {m: None for m in lengths}
        for e in range(s, lifetime + 1):
            ext |= snaps[e]
            cn = None
            for m in lengths:
                a = e - m
                if a < s:
                    continue
                low[m] = base[m][a - 1] if low[m] is None else np.minimum(low[m], base[m][a - 1])
                width = e - s - m
                if width == 0:
                    continue
                if cn is None:
                    ef = (ext & both).astype(np.float32)
                    cn = (ef[rows] @ ef).astype(np.int32)
                np.maximum(eta, -((low[m] - cn) // width), out=eta)
    eta[np.arange(rows.size), rows] = 0
    return eta


def pairwise_matrix(g: TemporalGraph, d1: int, mode=PairwiseMode.EXACT) -> np.ndarray:
    """Symmetric ``n x n`` matrix of the least pairwise ``eta`` for each vertex pair."""
    alive = np.ones(g.n, dtype=bool)
    return _pairwise_rows(g, d1, mode, alive, np.arange(g.n), g.lifetime)


def pairwise_instability(g: TemporalGraph, d1: int, mode=PairwiseMode.EXACT) -> int:
    """Least ``eta`` such that widening any base window of a pair by ``l`` steps left and
    ``l'`` steps right adds at most ``eta * (l + l')`` common neighbours."""
    if g.n < 2:
        return 0
    return int(pairwise_matrix(g, d1, mode).max())


def _pairwise_values_fn(g, d1, mode):
    last = last_step_matrix(g)

    def values(alive, rows):
        lifetime = sub_lifetime(g, alive, last)
        return _pairwise_rows(g, d1, mode, alive, rows, lifetime).max(axis=1, initial=0)

    return values


def weak_pairwise_instability(g: TemporalGraph, d1: int, mode=PairwiseMode.EXACT) -> OrderingResult:
    """Greedy elimination ordering on per-vertex pairwise instability inside the remaining subgraph."""
    return greedy_ordering(g, _pairwise_values_fn(g, d1, mode))


def combined_weak_value(g: TemporalGraph, p: ClosureParams, mode=PairwiseMode.EXACT) -> OrderingResult:
    """Greedy ordering on ``max(closure, pairwise instability)`` of each vertex; the value is the "b" column."""
    closure = closure_values_fn(g, p)
    pairwise = _pairwise_values_fn(g, p.d1, mode)

    def values(alive, rows):
        return np.maximum(closure(alive, rows), pairwise(alive, rows))

    return greedy_ordering(g, values)


def instability_report(g: TemporalGraph, p: ClosureParams, mode=PairwiseMode.EXACT) -> InstabilityReport:
    mode = PairwiseMode(mode)
    return InstabilityReport(
        local_eta=local_instability(g),
        pairwise_eta=pairwise_instability(g, p.d1, mode),
        weak_pairwise=weak_pairwise_instability(g, p.d1, mode),
        combined=combined_weak_value(g, p, mode),
        mode=mode,
    )
