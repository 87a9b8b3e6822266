from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from temporal_closure import (
    ClosureParams,
    PairwiseMode,
    TemporalGraph,
    closure_number,
    combined_weak_value,
    gen_random_evolving,
    gen_static_lift,
    instability_report,
    local_instability,
    pairwise_instability,
    weak_closure_number,
    weak_pairwise_instability,
)
from temporal_closure.core import StaticGraph
from temporal_closure.oracle import oracle_local_eta, oracle_pairwise_eta, oracle_weak_orderings

from conftest import temporal_graphs
from ladder import growth_violations, cap_violations

modes = st.sampled_from(list(PairwiseMode))


def test_mode_names():
    assert PairwiseMode("exact-length") is PairwiseMode.EXACT
    assert PairwiseMode("all-starts-restricted") is PairwiseMode.EXACT
    assert PairwiseMode("up-to-length") is PairwiseMode.UP_TO


def test_constant_graph_is_stable():
    g = gen_static_lift(StaticGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]), 7)
    assert local_instability(g) == 0
    for d1 in range(4):
        assert pairwise_instability(g, d1) == 0
        res = weak_pairwise_instability(g, d1)
        assert res.value == 0 and sorted(res.order) == list(range(5))


def test_single_step_is_stable():
    g = TemporalGraph(4, {(0, 1): [1], (1, 2): [1], (0, 2): [1]})
    assert local_instability(g) == 0
    assert pairwise_instability(g, 0) == 0


def test_star_with_rotating_leaves():
    # centre 0 sees leaf t at step t only
    g = TemporalGraph(6, {(0, t): [t] for t in range(1, 6)})
    assert local_instability(g) == 1
    assert local_instability(g) == oracle_local_eta(g)


def test_regression_fixtures():
    g = gen_random_evolving(8, 15, 0.3, 0.05, seed=7)
    assert (g.lifetime, g.num_edges) == (15, 18)
    assert local_instability(g) == 2
    h = gen_random_evolving(5, 6, 0.5, 0.2, seed=11)
    assert h.lifetime == 6
    assert pairwise_instability(h, 1) == 2 == oracle_pairwise_eta(h, 1)


def test_base_window_longer_than_lifetime():
    g = gen_random_evolving(4, 3, 0.6, 0.3, seed=1)
    assert pairwise_instability(g, g.lifetime) == 0


def test_complete_constant_combined_is_zero():
    g = gen_static_lift(StaticGraph.from_edges(4, combinations(range(4), 2)), 5)
    assert combined_weak_value(g, ClosureParams(1, 1, 1)).value == 0


def test_report_fields():
    g = gen_random_evolving(6, 8, 0.4, 0.1, seed=2)
    p = ClosureParams(0, 1, 0)
    rep = instability_report(g, p)
    assert rep.local_eta == local_instability(g)
    assert rep.pairwise_eta == pairwise_instability(g, 1)
    assert rep.weak_pairwise_eta <= rep.pairwise_eta <= 2 * rep.local_eta
    assert rep.combined_b >= max(rep.weak_pairwise_eta, weak_closure_number(g, p).value)
    assert rep.mode is PairwiseMode.EXACT


@given(temporal_graphs(max_n=6, max_lifetime=8))
def test_local_matches_oracle(g):
    assert local_instability(g) == oracle_local_eta(g)


@given(temporal_graphs(max_n=6, max_lifetime=7), st.integers(0, 3), modes)
def test_pairwise_matches_oracle_and_ladder(g, d1, mode):
    eta = pairwise_instability(g, d1, mode)
    assert eta == oracle_pairwise_eta(g, d1, mode.value)
    assert eta <= 2 * local_instability(g)
    assert weak_pairwise_instability(g, d1, mode).value <= eta


@given(temporal_graphs(max_n=5, max_lifetime=6), st.integers(0, 2), modes)
def test_weak_pairwise_is_optimal(g, d1, mode):
    res = weak_pairwise_instability(g, d1, mode)
    assert res.value == oracle_weak_orderings(g, ClosureParams(0, d1, 0), "pairwise", mode.value)


@given(temporal_graphs(max_n=5, max_lifetime=6), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_combined_ordering(g, d0, d1, d2):
    p = ClosureParams(d0, d1, d2)
    b = combined_weak_value(g, p).value
    assert b >= weak_closure_number(g, p).value
    assert b >= weak_pairwise_instability(g, d1).value
    assert b == oracle_weak_orderings(g, p, "combined")


@given(temporal_graphs(max_n=5, max_lifetime=7))
def test_growth_inequalities(g):
    assert growth_violations(g, local_instability(g)) == []


@given(temporal_graphs(max_n=5, max_lifetime=7), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_common_neighbourhood_cap(g, d0, d1, d2):
    p = ClosureParams(d0, d1, d2)
    assert cap_violations(g, p, closure_number(g, p), local_instability(g)) == []
