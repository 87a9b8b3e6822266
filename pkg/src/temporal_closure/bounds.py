"""Worst-case counting bounds for maximal dense patterns, and a harness that checks them.

With ``e = c - 1 + 2 * eta * (delta + 1 - d1)`` (``gamma`` in place of ``c``
for the weak forms), the bounds are

* ``clique`` / ``clique-weak``: ``3 * 2**e * n**2 * lifetime``
* ``plex``:       ``4 * 2**e * n**max(2k, k + 2) * lifetime``
* ``defective``:  ``4 * 2**e * n**(k + 2) * lifetime``

valid whenever ``delta >= d0 + d1 + d2``.  ``eta`` is the local instability,
or half the pairwise instability (rounded up) for the pairwise form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closure import ClosureParams, closure_number, weak_closure_number
from .core import TemporalGraph
from .enumeration import enumerate_patterns
from .exceptions import PreconditionError
from .instability import PairwiseMode, local_instability, pairwise_instability

__all__ = ["BOUND_KINDS", "BoundCheck", "theorem_bound", "verify_bounds"]

BOUND_KINDS = ("clique", "clique-weak", "plex", "defective")


def _require(delta: int, d0: int, d1: int, d2: int) -> None:
    if delta < d0 + d1 + d2:
        raise PreconditionError(f"delta >= d0 + d1 + d2 violated: {delta} < {d0} + {d1} + {d2}")


def theorem_bound(kind: str, *, c_or_gamma: int, eta: int, d0: int, d1: int, d2: int,
                  delta: int, k: int = 0, n: int, lifetime: int) -> int:
    """Exact (arbitrary precision) value of the counting bound for ``kind``."""
    if kind not in BOUND_KINDS:
        raise ValueError(f"unknown bound kind {kind!r}")
    _require(delta, d0, d1, d2)
    if c_or_gamma < 1:
        raise PreconditionError(f"c_or_gamma >= 1 violated: {c_or_gamma}")
    if min(eta, d0, d1, d2, k, n) < 0 or lifetime < 1:
        raise PreconditionError("eta, d0, d1, d2, k, n must be >= 0 and lifetime >= 1")
    power = 2 ** (c_or_gamma - 1 + 2 * eta * (delta + 1 - d1))
    if kind in ("clique", "clique-weak"):
        return 3 * power * n**2 * lifetime
    if kind == "plex":
        return 4 * power * n ** max(2 * k, k + 2) * lifetime
    return 4 * power * n ** (k + 2) * lifetime


@dataclass(frozen=True)
class BoundCheck:
    kind: str
    eta_source: str  # "local" or "pairwise"
    observed_count: int
    bound_value: int
    c_or_gamma: int
    eta: int
    d0: int
    d1: int
    d2: int
    delta: int
    k: int
    n: int
    lifetime: int

    @property
    def satisfied(self) -> bool:
        return self.observed_count <= self.bound_value


def verify_bounds(g: TemporalGraph, p: ClosureParams, delta: int, k: int = 0, *, counts=None) -> list[BoundCheck]:
    """Compute the parameters of ``g``, count its maximal patterns and compare with every bound.

    Returns one check per bound kind and per instability source (local, and
    pairwise with ``eta = ceil(pairwise / 2)``).  ``counts`` may supply
    precomputed pattern counts keyed by ``"clique"``, ``"plex"``, ``"defective"``.
    """
    _require(delta, p.d0, p.d1, p.d2)
    c = closure_number(g, p)
    gamma = weak_closure_number(g, p).value + 1
    etas = {
        "local": local_instability(g),
        "pairwise": -(-pairwise_instability(g, p.d1, PairwiseMode.EXACT) // 2),
    }
    counts = dict(counts or {})
    for kind in ("clique", "plex", "defective"):
        if kind not in counts:
            counts[kind] = len(enumerate_patterns(g, delta, kind, k if kind != "clique" else 0))
    checks = []
    for source, eta in etas.items():
        for kind in BOUND_KINDS:
            base = "clique" if kind.startswith("clique") else kind
            kk = 0 if base == "clique" else k
            cg = c if kind == "clique" else gamma
            bound = theorem_bound(kind, c_or_gamma=cg, eta=eta, d0=p.d0, d1=p.d1, d2=p.d2,
                                  delta=delta, k=kk, n=g.n, lifetime=g.lifetime)
            checks.append(BoundCheck(kind, source, counts[base], bound, cg, eta,
                                     p.d0, p.d1, p.d2, delta, kk, g.n, g.lifetime))
    return checks
