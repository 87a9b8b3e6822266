"""Constructors for the explicit graph families and for random slowly-evolving graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import StaticGraph, TemporalGraph
from .exceptions import GraphError, SizeGuardError

__all__ = [
    "GeneratorSpec",
    "MODELS",
    "gen_example1",
    "gen_moonmoser",
    "gen_static_lift",
    "gen_random_evolving",
    "generate",
]

MODELS = ("example1", "moonmoser", "static-lift", "random-evolving")
MAX_EXAMPLE1_VERTICES = 20


def gen_example1(n: int, delta: int) -> TemporalGraph:
    """Complete footprint in which every non-empty vertex subset forms its own short-lived clique.

    Subset ``i`` (``i = 1 .. 2**n - 1``, vertex ``v`` present iff bit ``v`` of
    ``i`` is set) is a clique at step ``(delta + 2) * i - 1`` and at no other
    step, so consecutive subsets are ``delta + 2`` steps apart.  The lifetime
    is ``(delta + 2) * (2**n - 1) - 1``.
    """
    if n < 1:
        raise GraphError("n must be at least 1")
    if n > MAX_EXAMPLE1_VERTICES:
        raise SizeGuardError(f"example1 needs 2**n subsets; n={n} exceeds {MAX_EXAMPLE1_VERTICES}")
    if delta < 0:
        raise GraphError("delta must be non-negative")
    steps: dict[tuple[int, int], list[int]] = {}
    for i in range(1, 1 << n):
        t = (delta + 2) * i - 1
        members = [v for v in range(n) if i >> v & 1]
        for u, v in combinations(members, 2):
            steps.setdefault((u, v), []).append(t)
    return TemporalGraph(n, steps, lifetime=(delta + 2) * ((1 << n) - 1) - 1)


def gen_moonmoser(parts: int, delta: int) -> TemporalGraph:
    """Complete multipartite graph with ``parts`` parts of three vertices, every edge active on ``[1, delta + 1]``.

    Vertex ``v`` belongs to part ``v // 3``.
    """
    if parts < 1:
        raise GraphError("parts must be at least 1")
    if delta < 0:
        raise GraphError("delta must be non-negative")
    n = 3 * parts
    ts = range(1, delta + 2)
    edges = [(u, v, ts) for u, v in combinations(range(n), 2) if u // 3 != v // 3]
    return TemporalGraph(n, edges, lifetime=delta + 1)


def gen_static_lift(static: StaticGraph, lifetime: int = 1) -> TemporalGraph:
    """Every edge of ``static`` active at every step of ``[1, lifetime]``."""
    if lifetime < 1:
        raise GraphError("lifetime must be at least 1")
    ts = range(1, lifetime + 1)
    return TemporalGraph(static.n, [(u, v, ts) for u, v in sorted(static.edges)], lifetime=lifetime)


def gen_random_evolving(n: int, lifetime: int, p_init: float, flip_rate: float, seed=None) -> TemporalGraph:
    """Snapshot-Markov random graph.

    Snapshot 1 is G(n, p_init); each later snapshot flips every vertex pair
    independently with probability ``flip_rate``.  Pairs that are never active
    are not part of the footprint, and the lifetime is the last step with an
    active edge.
    """
    if not (0.0 <= p_init <= 1.0 and 0.0 <= flip_rate <= 1.0):
        raise GraphError("probabilities must lie in [0, 1]")
    if n < 0 or lifetime < 1:
        raise GraphError("need n >= 0 and lifetime >= 1")
    rng = np.random.default_rng(seed)
    iu, iv = np.triu_indices(n, k=1)
    state = rng.random(iu.size) < p_init
    active = np.empty((lifetime, iu.size), dtype=bool)
    active[0] = state
    for t in range(1, lifetime):
        state = state ^ (rng.random(iu.size) < flip_rate)
        active[t] = state
    edges = []
    for j in np.flatnonzero(active.any(axis=0)):
        edges.append((int(iu[j]), int(iv[j]), (np.flatnonzero(active[:, j]) + 1).tolist()))
    return TemporalGraph(n, edges)


@dataclass(frozen=True)
class GeneratorSpec:
    model: str
    n: int = 3
    delta: int = 1
    lifetime: int = 10
    p_init: float = 0.3
    flip_rate: float = 0.05
    seed: int | None = None
    static: StaticGraph | None = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise GraphError(f"unknown model {self.model!r}; choose from {', '.join(MODELS)}")
        if self.model == "static-lift" and self.static is None:
            raise GraphError("static-lift needs a static graph")


def generate(spec: GeneratorSpec) -> TemporalGraph:
    if spec.model == "example1":
        return gen_example1(spec.n, spec.delta)
    if spec.model == "moonmoser":
        return gen_moonmoser(spec.n, spec.delta)
    if spec.model == "static-lift":
        return gen_static_lift(spec.static, spec.lifetime)
    return gen_random_evolving(spec.n, spec.lifetime, spec.p_init, spec.flip_rate, spec.seed)
