"""Maximal Delta-cliques, (Delta, k)-plexes and (Delta, k)-defective cliques.

A pattern ``(X, [a, b])`` is checked window by window: for every
``tau in [a, b - delta]`` the set ``X`` must be dense (a clique, a k-plex, or a
k-defective clique) in the static graph ``G_[tau, tau + delta]``.  Every
density notion used here is hereditary, so for a fixed ``X`` the admissible
``tau`` form a union of runs, and each maximal run ``[s, e]`` gives the
time-maximal pattern ``(X, [s, e + delta])``.

Sets of ``tau`` values are Python ints used as bitsets (bit ``tau - 1``).

Cliques are enumerated with a Bron-Kerbosch recursion whose candidates carry a
run of admissible ``tau``.  Plexes and defective cliques use a set-enumeration
tree over (vertex set, maximal run) states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import Interval, TemporalGraph
from .exceptions import GraphError

__all__ = [
    "KINDS",
    "DensePattern",
    "edge_valid_intervals",
    "enumerate_maximal_cliques",
    "enumerate_maximal_plexes",
    "enumerate_maximal_defective",
    "enumerate_patterns",
    "check_patterns",
    "format_pattern",
    "parse_pattern",
]

KINDS = ("clique", "plex", "defective")


@dataclass(frozen=True)
class DensePattern:
    kind: str
    vertices: tuple[int, ...]
    window: Interval
    k: int = 0
    delta: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown pattern kind {self.kind!r}")
        if not self.vertices:
            raise GraphError("pattern with an empty vertex set")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise GraphError(f"pattern vertices must be strictly increasing: {self.vertices}")
        if self.window.end - self.window.start < self.delta:
            raise GraphError(f"window {self.window} shorter than delta + 1 = {self.delta + 1}")

    @property
    def sort_key(self):
        return self.window.start, self.window.end, self.vertices

    def __len__(self):
        return len(self.vertices)


def format_pattern(p: DensePattern, labels: Sequence[str] | None = None) -> str:
    """``kind a b v1,v2,...``"""
    names = [labels[v] for v in p.vertices] if labels is not None else [str(v) for v in p.vertices]
    return f"{p.kind} {p.window.start} {p.window.end} {','.join(names)}"


def parse_pattern(line: str, k: int = 0, delta: int = 0) -> DensePattern:
    kind, a, b, vs = line.split()
    return DensePattern(kind, tuple(sorted(int(v) for v in vs.split(","))), Interval(int(a), int(b)), k, delta)


def edge_valid_intervals(g: TemporalGraph, u: int, v: int, delta: int) -> list[Interval]:
    """Maximal intervals on which every length-``delta + 1`` window sees an activation of ``uv``."""
    steps = g.steps(u, v)
    if not steps:
        raise GraphError(f"({u}, {v}) is not an edge")
    lifetime = g.lifetime
    out = []
    first = prev = steps[0]
    for t in list(steps[1:]) + [None]:
        if t is not None and t - prev < delta + 2:
            prev = t
            continue
        a, b = max(1, first - delta), min(lifetime, prev + delta)
        if b - a >= delta:
            out.append(Interval(a, b))
        if t is not None:
            first = prev = t
    return out


# ---------------------------------------------------------------------------
# bitset helpers


def _runs(mask: int) -> Iterator[int]:
    """Split a bitset into its maximal runs of consecutive ones (each yielded as a bitset)."""
    while mask:
        low = mask & -mask
        run = mask & ~(mask + low)
        yield run
        mask ^= run


def _run_bounds(run: int) -> tuple[int, int]:
    lo = (run & -run).bit_length()
    return lo, run.bit_length()


def _pair_masks(g: TemporalGraph, delta: int) -> list[dict[int, int]]:
    """``good[u][v]``: bitset of ``tau`` such that ``uv`` is active in ``[tau, tau + delta]``."""
    good: list[dict[int, int]] = [dict() for _ in g.vertices]
    for u, v, _ in g.edges():
        m = 0
        for iv in edge_valid_intervals(g, u, v, delta):
            s, e = iv.start, iv.end - delta
            m |= ((1 << (e - s + 1)) - 1) << (s - 1)
        if m:
            good[u][v] = good[v][u] = m
    return good


def _emit(kind, vertices, run, k, delta):
    lo, hi = _run_bounds(run)
    return DensePattern(kind, tuple(sorted(vertices)), Interval(lo, hi + delta), k, delta)


# ---------------------------------------------------------------------------
# cliques


def _clique_search(n, good, full, delta, out):
    def expand(clique, span, cand, excl):
        if clique and not any(m == span for _, m in cand) and not any(m == span for _, m in excl):
            out.append(_emit("clique", clique, span, 0, delta))
        if not cand:
            return
        pivot, best = None, -1
        for u, m in cand + excl:
            if m != span:
                continue
            gu = good[u]
            covered = sum(1 for w, mw in cand if gu.get(w, 0) & mw == mw)
            if covered > best:
                pivot, best = u, covered
        gp = good[pivot] if pivot is not None else {}
        todo = [(w, m) for w, m in cand if not (gp.get(w, 0) & m == m)]
        cand = list(cand)
        for item in todo:
            w, m = item
            gw = good[w]
            new_cand = [
                (y, r) for y, my in cand if y != w for r in _runs(my & m & gw.get(y, 0))
            ]
            new_excl = [
                (y, r) for y, my in excl if y != w for r in _runs(my & m & gw.get(y, 0))
            ]
            expand(clique + [w], m, new_cand, new_excl)
            cand.remove(item)
            excl = excl + [item]

    expand([], full, [(v, full) for v in range(n)], [])


def enumerate_maximal_cliques(g: TemporalGraph, delta: int, min_size: int = 1) -> list[DensePattern]:
    """All maximal Delta-cliques with at least ``min_size`` vertices, canonically ordered."""
    _check_args(delta, 0, min_size)
    span = g.lifetime - delta
    if span < 1 or g.n == 0:
        return []
    out: list[DensePattern] = []
    _clique_search(g.n, _pair_masks(g, delta), (1 << span) - 1, delta, out)
    return _finish(out, min_size)


# ---------------------------------------------------------------------------
# plexes and defective cliques


def _window_neighbours(g: TemporalGraph, delta: int, span: int) -> list[list[int]]:
    """``nb[tau - 1][v]``: neighbours of ``v`` in ``G_[tau, tau + delta]`` as a vertex bitset."""
    good = _pair_masks(g, delta)
    nb = [[0] * g.n for _ in range(span)]
    for u, row in enumerate(good):
        for v, m in row.items():
            for tau0 in _bits(m):
                nb[tau0][u] |= 1 << v
    return nb


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _dense_at(kind, members, xmask, nbt, k):
    if kind == "plex":
        for v in members:
            if ((xmask & ~nbt[v]) & ~(1 << v)).bit_count() > k:
                return False
        return True
    missing = 0
    for v in members:
        missing += ((xmask & ~nbt[v]) & ~(1 << v)).bit_count()
    return missing // 2 <= k


def _hereditary_search(kind, n, nb, full, k, delta, out):
    def good_taus(members, xmask, within):
        m = 0
        for tau0 in _bits(within):
            if _dense_at(kind, members, xmask, nb[tau0], k):
                m |= 1 << tau0
        return m

    stack = [([v], 1 << v, full) for v in reversed(range(n))]
    while stack:
        members, xmask, span = stack.pop()
        extensible = False
        children = []
        for w in range(n):
            if xmask >> w & 1:
                continue
            ok = good_taus(members + [w], xmask | (1 << w), span)
            if ok == span:
                extensible = True
            if w > members[-1] and ok:
                children.extend((members + [w], xmask | (1 << w), r) for r in _runs(ok))
        if not extensible:
            out.append(_emit(kind, members, span, k, delta))
        stack.extend(reversed(children))


def _enumerate_hereditary(kind, g, delta, k, min_size):
    _check_args(delta, k, min_size)
    span = g.lifetime - delta
    if span < 1 or g.n == 0:
        return []
    out: list[DensePattern] = []
    _hereditary_search(kind, g.n, _window_neighbours(g, delta, span), (1 << span) - 1, k, delta, out)
    return _finish(out, min_size)


def enumerate_maximal_plexes(g: TemporalGraph, delta: int, k: int, min_size: int = 1) -> list[DensePattern]:
    """All maximal (Delta, k)-plexes: in each window every member misses at most ``k`` other members."""
    return _enumerate_hereditary("plex", g, delta, k, min_size)


def enumerate_maximal_defective(g: TemporalGraph, delta: int, k: int, min_size: int = 1) -> list[DensePattern]:
    """All maximal (Delta, k)-defective cliques: in each window at most ``k`` member pairs are inactive."""
    return _enumerate_hereditary("defective", g, delta, k, min_size)


def enumerate_patterns(g: TemporalGraph, delta: int, kind: str = "clique", k: int = 0, min_size: int = 1):
    if kind == "clique":
        return enumerate_maximal_cliques(g, delta, min_size)
    if kind == "plex":
        return enumerate_maximal_plexes(g, delta, k, min_size)
    if kind == "defective":
        return enumerate_maximal_defective(g, delta, k, min_size)
    raise GraphError(f"unknown pattern kind {kind!r}")


def _check_args(delta, k, min_size):
    if delta < 0 or k < 0:
        raise GraphError("delta and k must be non-negative")
    if min_size < 1:
        raise GraphError("min_size must be positive")


def _finish(out, min_size):
    return sorted((p for p in out if len(p) >= min_size), key=lambda p: p.sort_key)


# ---------------------------------------------------------------------------
# self-checks


def _is_dense(g: TemporalGraph, p_kind: str, vertices: Iterable[int], window: Interval, delta: int, k: int) -> bool:
    vs = sorted(vertices)
    if window.start < 1 or window.end > g.lifetime or window.end - window.start < delta:
        return False
    for tau in range(window.start, window.end - delta + 1):
        missing = {v: 0 for v in vs}
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                if not g.is_active(u, v, tau, tau + delta):
                    missing[u] += 1
                    missing[v] += 1
        if p_kind == "clique" and any(missing.values()):
            return False
        if p_kind == "plex" and max(missing.values()) > k:
            return False
        if p_kind == "defective" and sum(missing.values()) // 2 > k:
            return False
    return True


def check_patterns(g: TemporalGraph, patterns: Sequence[DensePattern]) -> list[str]:
    """Re-check density, time- and vertex-maximality and non-overlap; returns a list of problems."""
    problems = []
    by_set: dict[tuple, list[tuple[int, int]]] = {}
    for p in patterns:
        w, d, k = p.window, p.delta, p.k
        if not _is_dense(g, p.kind, p.vertices, w, d, k):
            problems.append(f"not dense: {format_pattern(p)}")
            continue
        for wider in ((w.start - 1, w.end), (w.start, w.end + 1)):
            if wider[0] >= 1 and _is_dense(g, p.kind, p.vertices, Interval(max(1, wider[0]), wider[1]), d, k):
                problems.append(f"not time-maximal: {format_pattern(p)}")
        for x in g.vertices:
            if x not in p.vertices and _is_dense(g, p.kind, set(p.vertices) | {x}, w, d, k):
                problems.append(f"not vertex-maximal (+{x}): {format_pattern(p)}")
        # at most one pattern per (vertex set, tau)
        taus = (w.start, w.end - d)
        for other in by_set.get(p.vertices, []):
            if other[0] <= taus[1] and taus[0] <= other[1]:
                problems.append(f"two windows share a tau for {p.vertices}: {format_pattern(p)}")
        by_set.setdefault(p.vertices, []).append(taus)
    return problems
