from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from temporal_closure import (
    ClosureParams,
    GraphError,
    TemporalGraph,
    closure_number,
    closure_rate_curve,
    gen_example1,
    gen_random_evolving,
    gen_static_lift,
    vertex_closure,
    weak_closure_number,
)
from temporal_closure.core import StaticGraph
from temporal_closure.oracle import oracle_closure, oracle_vertex_closure, oracle_weak_orderings

from conftest import temporal_graphs
from static_ref import static_closure, static_weak_closure

params = st.builds(ClosureParams, st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


def test_params_validation():
    with pytest.raises(GraphError):
        ClosureParams(-1, 0, 0)
    assert ClosureParams(1, 2, 3).total == 6


def test_vacuous_when_padding_covers_lifetime():
    g = gen_random_evolving(6, 7, 0.5, 0.2, seed=3)
    p = ClosureParams(g.lifetime, 0, g.lifetime)
    assert all(vertex_closure(g, v, p) == 0 for v in g.vertices)
    assert closure_number(g, p) == 1


def test_path_vertex_closure(path_graph):
    assert vertex_closure(path_graph, 0, ClosureParams()) == 1
    assert vertex_closure(path_graph, 2, ClosureParams()) == 0
    with pytest.raises(GraphError):
        vertex_closure(path_graph, 3, ClosureParams())


@pytest.mark.parametrize("d1", [0, 1])
def test_example1_is_one_closed(d1):
    g = gen_example1(3, 1)
    for d0 in (0, 1, 2):
        p = ClosureParams(d0, d1, d0)
        assert all(vertex_closure(g, v, p) == 0 for v in g.vertices)
        assert closure_number(g, p) == 1
        assert weak_closure_number(g, p).value + 1 == 1


def test_complete_constant_graph():
    g = gen_static_lift(StaticGraph.from_edges(5, combinations(range(5), 2)), 6)
    assert closure_number(g, ClosureParams(1, 2, 1)) == 1
    curve = closure_rate_curve(g, ClosureParams(0, 1, 0))
    assert all(pt.rate == 1.0 for pt in curve)


def test_crafted_star_with_late_edge():
    # leaves 1 and 2 share centre 0 at step 1, and only meet each other at step 9
    g = TemporalGraph(4, {(0, 1): [1], (0, 2): [1], (1, 2): [9], (0, 3): [5]})
    # frozen from the brute-force oracle
    expected = {
        ClosureParams(0, 0, 0): (2, [0, 1, 1, 0]),
        ClosureParams(2, 0, 2): (1, [0, 0, 0, 0]),
        ClosureParams(0, 2, 0): (2, [0, 1, 1, 0]),
        ClosureParams(1, 1, 1): (1, [0, 0, 0, 0]),
    }
    for p, (c, per_vertex) in expected.items():
        assert closure_number(g, p) == c
        assert [vertex_closure(g, v, p) for v in g.vertices] == per_vertex


def test_trivial_graphs():
    assert closure_number(TemporalGraph(0), ClosureParams()) == 1
    assert closure_number(TemporalGraph(1), ClosureParams()) == 1
    res = weak_closure_number(TemporalGraph(1), ClosureParams())
    assert res.order == (0,) and res.value == 0


def test_weak_closure_triangle_with_pendant():
    g = gen_static_lift(StaticGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]), 3)
    p = ClosureParams()
    res = weak_closure_number(g, p)
    assert res.value == oracle_weak_orderings(g, p)
    assert sorted(res.order) == [0, 1, 2, 3]
    assert res.value == max(res.per_step_value)


def _brute_curve(g, p, cumulative):
    lt = g.lifetime
    tuples = []
    for a in range(1 + p.d0, lt - p.d2 - p.d1 + 1):
        b = a + p.d1
        for u, v in combinations(range(g.n), 2):
            cn = 0
            for w in range(g.n):
                if w not in (u, v) and g.is_active(u, w, a, b) and g.is_active(v, w, a, b):
                    cn += 1
            tuples.append((cn, g.is_active(u, v, a - p.d0, b + p.d2)))
    if not tuples:
        return []
    out = []
    for x in range(max(c for c, _ in tuples) + 1):
        sel = [adj for c, adj in tuples if (c >= x if cumulative else c == x)]
        if sel:
            out.append((x, len(sel), sum(sel) / len(sel)))
    return out


def test_curve_on_fixed_instance():
    g = gen_random_evolving(5, 8, 0.5, 0.2, seed=5)
    curve = closure_rate_curve(g, ClosureParams(0, 1, 0))
    assert [(pt.x, pt.support) for pt in curve] == [(0, 70), (1, 64), (2, 32), (3, 3)]
    assert [round(pt.rate, 6) for pt in curve] == [0.685714, 0.65625, 0.6875, 0.666667]
    exact = closure_rate_curve(g, ClosureParams(0, 1, 0), cumulative=False)
    assert [(pt.x, pt.support) for pt in exact] == [(0, 6), (1, 32), (2, 29), (3, 3)]


def test_curve_edgeless_and_empty():
    g = TemporalGraph(4, lifetime=3)
    curve = closure_rate_curve(g, ClosureParams())
    assert [(pt.x, pt.support, pt.rate) for pt in curve] == [(0, 18, 0.0)]
    assert len(closure_rate_curve(g, ClosureParams(2, 0, 2))) == 0


@given(temporal_graphs(max_n=5, max_lifetime=7), params, st.booleans())
def test_curve_matches_brute_force(g, p, cumulative):
    curve = closure_rate_curve(g, p, cumulative=cumulative)
    got = [(pt.x, pt.support, pt.rate) for pt in curve]
    want = _brute_curve(g, p, cumulative)
    assert [(x, s) for x, s, _ in got] == [(x, s) for x, s, _ in want]
    assert np.allclose([r for *_, r in got], [r for *_, r in want])
    if cumulative:
        assert all(a.support >= b.support for a, b in zip(curve.points, curve.points[1:]))


@given(temporal_graphs(max_n=6, max_lifetime=8), params)
def test_closure_matches_oracle(g, p):
    assert closure_number(g, p) == oracle_closure(g, p)
    for v in g.vertices:
        assert vertex_closure(g, v, p) == oracle_vertex_closure(g, v, p)


@given(temporal_graphs(max_n=5, max_lifetime=6), params)
def test_weak_closure_is_optimal_and_below_c(g, p):
    res = weak_closure_number(g, p)
    assert sorted(res.order) == list(g.vertices)
    assert res.value + 1 <= closure_number(g, p)
    assert res.value == oracle_weak_orderings(g, p)


@given(temporal_graphs(max_n=6, max_lifetime=8), params)
def test_monotone_in_window_parameters(g, p):
    c = closure_number(g, p)
    assert closure_number(g, ClosureParams(p.d0, p.d1 + 1, p.d2)) >= c
    assert closure_number(g, ClosureParams(p.d0 + 1, p.d1, p.d2)) <= c
    assert closure_number(g, ClosureParams(p.d0, p.d1, p.d2 + 1)) <= c


@given(st.integers(1, 6), st.data())
def test_single_step_matches_static(n, data):
    pairs = list(combinations(range(n), 2))
    edges = [e for e in pairs if data.draw(st.booleans())]
    g = gen_static_lift(StaticGraph.from_edges(n, edges), 1)
    assert closure_number(g, ClosureParams()) == static_closure(n, edges)
    assert weak_closure_number(g, ClosureParams()).value + 1 == static_weak_closure(n, edges)
