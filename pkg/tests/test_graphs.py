"""Graph, orientation, and subgraph basics."""

from itertools import combinations

import pytest

from sandpile_lab.errors import CapExceededError
from sandpile_lab.graphs import (
    Graph,
    Orientation,
    Subgraph,
    edge,
    enumerate_orientations,
    enumerate_subgraphs,
    make_cycle,
    make_fan,
    make_path,
    make_wheel,
    subgraph_of,
)


def test_wheel_shape():
    g = make_wheel(6)
    assert len(g.vertices) == 7
    assert g.m == 12
    assert g.degree(0) == 6
    assert all(g.degree(i) == 3 for i in range(1, 7))


def test_fan_shape():
    g = make_fan(6)
    assert g.m == 11  # 5 path edges + 6 spokes
    assert g.degree(1) == g.degree(6) == 2
    assert all(g.degree(i) == 3 for i in range(2, 6))


def test_constructor_bounds():
    with pytest.raises(ValueError):
        make_cycle(2)
    with pytest.raises(ValueError):
        make_wheel(2)
    with pytest.raises(ValueError):
        make_fan(1)
    with pytest.raises(ValueError):
        make_path(0)
    assert make_path(1).m == 0


def test_graph_invariants_rejected():
    with pytest.raises(ValueError):
        edge(3, 3)  # loop
    with pytest.raises(ValueError):
        Graph(3, False, frozenset({(1, 2)}))  # vertex 3 disconnected
    with pytest.raises(ValueError):
        Graph(2, False, frozenset({(1, 5)}))  # endpoint out of range


def _clockwise_cycle(n):
    g = make_cycle(n)
    arcs = {(i, i % n + 1) for i in range(1, n + 1)}
    return Orientation(g, frozenset(arcs))


def test_directed_cycle_degrees_and_acyclicity():
    o = _clockwise_cycle(4)
    for v in range(1, 5):
        assert o.in_degree(v) == 1
        assert o.out_degree(v) == 1
    assert not o.is_acyclic()
    assert o.targets() == frozenset()
    assert o.sources() == frozenset()


def test_star_orientation_indegree():
    g = make_wheel(3)
    arcs = {(i, 0) for i in range(1, 4)}
    arcs |= {(1, 2), (2, 3), (3, 1)}  # rim directed cyclically
    o = Orientation(g, frozenset(arcs))
    assert o.in_degree(0) == 3
    assert o.is_zero_rooted()


def test_reference_cycle_orientation():
    # in-degrees (1,2,0,1,2,1,1,0) on the 8-cycle: arcs as drawn
    g = make_cycle(8)
    arcs = {(1, 2), (3, 2), (3, 4), (4, 5), (6, 5), (7, 6), (8, 7), (8, 1)}
    o = Orientation(g, frozenset(arcs))
    assert o.in_degree(5) == 2
    assert o.targets() == frozenset({2, 5})
    assert o.sources() == frozenset({3, 8})
    assert o.is_acyclic()


def test_orientation_requires_every_edge_once():
    g = make_path(3)
    with pytest.raises(ValueError):
        Orientation(g, frozenset({(1, 2)}))  # edge {2,3} missing
    with pytest.raises(ValueError):
        Orientation(g, frozenset({(1, 2), (2, 1), (2, 3)}))


def test_unknown_vertex_rejected():
    o = _clockwise_cycle(4)
    with pytest.raises(ValueError):
        o.in_degree(9)


def test_enumerate_orientations_counts():
    assert sum(1 for _ in enumerate_orientations(make_path(2))) == 2
    orientations = list(enumerate_orientations(make_cycle(4)))
    assert len(orientations) == 16
    assert len(set(orientations)) == 16
    g = make_cycle(4)
    for o in orientations:
        assert sum(o.in_degree(v) for v in g.vertices) == g.m
        for v in g.vertices:
            assert o.in_degree(v) + o.out_degree(v) == g.degree(v)


def test_acyclic_orientations_have_targets_and_sources():
    for o in enumerate_orientations(make_wheel(3)):
        if o.is_acyclic():
            assert o.targets()
            assert o.sources()


def test_orientation_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_orientations(make_wheel(4), cap=3))


def test_subgraph_invariant():
    with pytest.raises(ValueError):
        Subgraph(frozenset({1, 2, 3, 5, 6, 8}), frozenset({(1, 2), (2, 3), (3, 4)}))
    with pytest.raises(ValueError):
        Subgraph(frozenset(), frozenset())
    with pytest.raises(ValueError):
        subgraph_of(make_cycle(4), {1, 2}, {(1, 3)})  # {1,3} is a chord, not an edge


def test_half_filled_example_components():
    # 7 of 8 vertices, 4 edges, 3 components
    s = subgraph_of(
        make_cycle(8),
        {1, 2, 3, 4, 5, 6, 8},
        {(1, 2), (3, 4), (4, 5), (5, 6)},
    )
    comps = s.components()
    assert len(comps) == 3
    assert frozenset({8}) in comps
    assert frozenset({1, 2}) in comps
    assert frozenset({3, 4, 5, 6}) in comps


def _independent_subgraph_count(n):
    """Recount subgraphs of the n-cycle with plain nested loops."""
    verts = list(range(1, n + 1))
    cycle_edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    total = 0
    for size in range(1, n + 1):
        for chosen in combinations(verts, size):
            chosen_set = set(chosen)
            induced = [e for e in cycle_edges if e[0] in chosen_set and e[1] in chosen_set]
            total += 2 ** len(induced)
    return total


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_subgraph_stream_matches_independent_recount(n):
    stream = list(enumerate_subgraphs(make_cycle(n)))
    assert len(stream) == len(set(stream))
    assert len(stream) == _independent_subgraph_count(n)


def test_subgraph_count_small_values():
    # 3 singletons + 3 pairs * 2 + full vertex set * 2^3 = 17
    assert sum(1 for _ in enumerate_subgraphs(make_cycle(3))) == 17
