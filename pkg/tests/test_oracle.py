import pytest
from hypothesis import given
from hypothesis import strategies as st

from temporal_closure import (
    ClosureParams,
    SizeGuardError,
    TemporalGraph,
    check_patterns,
    gen_example1,
    gen_static_lift,
)
from temporal_closure.core import StaticGraph
from temporal_closure.oracle import (
    oracle_closure,
    oracle_enumerate,
    oracle_local_eta,
    oracle_pairwise_eta,
    oracle_weak_orderings,
)

from conftest import temporal_graphs
from static_ref import static_closure


def test_example1_pattern_count():
    assert len(oracle_enumerate(gen_example1(3, 1), 1)) == 7


def test_complete_constant_parameters():
    g = gen_static_lift(StaticGraph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]), 5)
    assert oracle_closure(g, ClosureParams(1, 1, 1)) == 1
    assert oracle_local_eta(g) == 0
    assert oracle_pairwise_eta(g, 1) == 0


def test_single_vertex_ordering():
    assert oracle_weak_orderings(TemporalGraph(1), ClosureParams()) == 0


def test_size_guards():
    with pytest.raises(SizeGuardError):
        oracle_enumerate(TemporalGraph(21), 0)
    with pytest.raises(SizeGuardError):
        oracle_weak_orderings(TemporalGraph(8), ClosureParams())


def test_static_degeneration():
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]
    g = gen_static_lift(StaticGraph.from_edges(5, edges), 1)
    assert oracle_closure(g, ClosureParams()) == static_closure(5, edges) == 3


@given(temporal_graphs(max_n=6, max_lifetime=6), st.integers(0, 2),
       st.sampled_from(["clique", "plex", "defective"]), st.integers(0, 2))
def test_oracle_output_is_self_consistent(g, delta, kind, k):
    pats = oracle_enumerate(g, delta, kind, k)
    assert check_patterns(g, pats) == []
    assert pats == sorted(pats, key=lambda p: p.sort_key)
    # deterministic across relabelling of the input edge order
    again = TemporalGraph(g.n, reversed([(u, v, ts) for u, v, ts in g.edges()]), lifetime=g.lifetime)
    assert oracle_enumerate(again, delta, kind, k) == pats
