import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from temporal_closure import TemporalGraph, gen_random_evolving

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def temporal_graphs(draw, max_n=6, max_lifetime=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    lifetime = draw(st.integers(1, max_lifetime))
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            steps = draw(st.sets(st.integers(1, lifetime), max_size=lifetime))
            if steps:
                edges[(u, v)] = steps
    return TemporalGraph(n, edges)


def random_instances(count, max_n=10, max_lifetime=20, seed=0, flips=(0.0, 0.05, 0.2)):
    """Seeded random-evolving instances with varied size, density and flip rate."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        lifetime = rng.randint(1, max_lifetime)
        p = rng.choice((0.2, 0.4, 0.6))
        out.append(gen_random_evolving(n, lifetime, p, flips[i % len(flips)], seed=seed * 100003 + i))
    return out


@pytest.fixture
def path_graph():
    # 0 - 2 - 1, every edge active at every step of [1, 4]
    return TemporalGraph(3, {(0, 2): range(1, 5), (1, 2): range(1, 5)})


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS.values():
            terminalreporter.write_line(line)
