import pytest

from temporal_closure import (
    ClosureParams,
    PreconditionError,
    closure_number,
    gen_example1,
    gen_moonmoser,
    gen_static_lift,
    theorem_bound,
    verify_bounds,
)
from temporal_closure.core import StaticGraph


def test_clique_bound_value():
    assert theorem_bound("clique", c_or_gamma=1, eta=0, d0=0, d1=0, d2=0, delta=0, n=3, lifetime=20) == 540


def test_plex_bound_value():
    assert theorem_bound("plex", c_or_gamma=1, eta=0, d0=0, d1=0, d2=0, delta=1, k=0, n=3, lifetime=2) == 72
    assert theorem_bound("plex", c_or_gamma=1, eta=1, d0=0, d1=0, d2=0, delta=1, k=0, n=3, lifetime=2) == 4 * 16 * 9 * 2
    assert theorem_bound("defective", c_or_gamma=2, eta=0, d0=0, d1=0, d2=0, delta=1, k=1, n=3, lifetime=2) == 4 * 2 * 27 * 2
    assert theorem_bound("plex", c_or_gamma=1, eta=0, d0=0, d1=0, d2=0, delta=0, k=3, n=2, lifetime=1) == 4 * 2**6


def test_bounds_are_big_integers():
    big = theorem_bound("clique-weak", c_or_gamma=50, eta=20, d0=1, d1=1, d2=1, delta=40, n=100, lifetime=300)
    assert big == 3 * 2 ** (49 + 40 * 40) * 100**2 * 300


def test_precondition_errors():
    with pytest.raises(PreconditionError, match="delta >= d0 \\+ d1 \\+ d2"):
        theorem_bound("clique", c_or_gamma=1, eta=0, d0=0, d1=1, d2=0, delta=0, n=3, lifetime=2)
    with pytest.raises(PreconditionError):
        theorem_bound("clique", c_or_gamma=0, eta=0, d0=0, d1=0, d2=0, delta=0, n=3, lifetime=2)
    with pytest.raises(PreconditionError):
        verify_bounds(gen_moonmoser(1, 1), ClosureParams(1, 1, 1), 2)
    with pytest.raises(ValueError):
        theorem_bound("star", c_or_gamma=1, eta=0, d0=0, d1=0, d2=0, delta=0, n=3, lifetime=2)


def test_example1_bounds():
    checks = verify_bounds(gen_example1(4, 1), ClosureParams(), 1)
    assert len(checks) == 8
    assert {(c.kind, c.eta_source) for c in checks} == {
        (k, s) for k in ("clique", "clique-weak", "plex", "defective") for s in ("local", "pairwise")
    }
    assert all(c.satisfied for c in checks)
    assert all(c.observed_count == 15 for c in checks if c.kind.startswith("clique"))
    assert all(c.c_or_gamma == 1 for c in checks)


def test_moonmoser_bounds():
    g = gen_moonmoser(3, 1)
    c = closure_number(g, ClosureParams())
    assert c > 6
    checks = verify_bounds(g, ClosureParams(), 1)
    assert all(ch.satisfied and ch.eta == 0 for ch in checks)
    assert [ch.observed_count for ch in checks if ch.kind == "clique"] == [27, 27]


def test_complete_constant_graph():
    g = gen_static_lift(StaticGraph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]), 3)
    checks = verify_bounds(g, ClosureParams(), 0)
    assert all(ch.satisfied for ch in checks)
    assert {ch.observed_count for ch in checks if ch.kind == "clique"} == {1}
