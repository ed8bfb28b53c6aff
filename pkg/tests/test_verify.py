"""Gamma families, the rotation bijection, and the theorem-check registry."""

import pytest

from sandpile_lab.graphs import Subgraph, edge, subgraph_of, make_cycle
from sandpile_lab.verify import (
    DIFFERED_DELANNOY_ROWS,
    DoublyRootedSubgraph,
    FAN_LEVEL_ROWS_DESC,
    clockwise_first_vertex,
    count_gamma,
    count_gamma_bar,
    enumerate_gamma,
    enumerate_gamma_bar,
    rotate_doubly_rooted,
    theorem_tags,
    unrotate_doubly_rooted,
    verify_binomial_identity,
    verify_theorem,
)


def test_gamma_reference_counts():
    assert count_gamma(4, 3) == 120
    assert count_gamma_bar(4, 3) == 45
    assert 8 * count_gamma_bar(4, 3) == 3 * count_gamma(4, 3)
    assert sum(1 for _ in enumerate_gamma(4, 3)) == 120
    assert sum(1 for _ in enumerate_gamma_bar(4, 3)) == 45


def test_gamma_membership_example():
    # 7 vertices, 4 edges, 3 components on the 8-cycle; vertex 1 present and
    # the closing edge {8, 1} absent, so it also belongs to gamma_bar
    s = subgraph_of(
        make_cycle(8),
        {1, 2, 3, 4, 5, 6, 8},
        {(1, 2), (3, 4), (4, 5), (5, 6)},
    )
    assert s in set(enumerate_gamma(4, 3))
    assert s in set(enumerate_gamma_bar(4, 3))
    # balls-in-boxes encoding of this member, component by component
    # clockwise from vertex 1: (1 edge | 0 missing), (3 edges | 1 missing), (0 | 0)
    comps = sorted(s.components(), key=lambda comp: min(comp))
    edges_per_comp = [sum(1 for e in s.edges if e[0] in comp) for comp in comps]
    assert sorted(edges_per_comp, reverse=True) == [3, 1, 0]
    assert len(set(range(1, 9)) - s.vertices) == 1  # one missing (white) vertex


@pytest.mark.parametrize("n", [2, 3])
def test_gamma_full_component_range(n):
    for k in range(1, n + 1):
        members = list(enumerate_gamma(n, k))
        assert len(members) == count_gamma(n, k)
        for s in members:
            assert s.n_edges == n
            assert s.n_components == k
            assert len(s.vertices) == n + k


def test_gamma_n_equals_k_is_central_binomial():
    from math import comb

    assert sum(1 for _ in enumerate_gamma(3, 3)) == comb(6, 3)


def test_clockwise_first_vertex():
    assert clockwise_first_vertex(frozenset({1, 2, 3}), 8) == 1
    assert clockwise_first_vertex(frozenset({8, 1, 2}), 8) == 8
    assert clockwise_first_vertex(frozenset({5}), 8) == 5
    with pytest.raises(ValueError):
        clockwise_first_vertex(frozenset(range(1, 9)), 8)


def _example_doubly_rooted():
    s = Subgraph(
        frozenset({1, 2, 3, 5, 6, 8}),
        frozenset({edge(1, 2), edge(2, 3), edge(5, 6)}),
    )
    comp = next(c for c in s.components() if 1 in c)
    return DoublyRootedSubgraph(s, 7, comp, 8)


def test_rotation_reference_example():
    g = _example_doubly_rooted()
    g2 = rotate_doubly_rooted(g)
    assert g2.root_vertex == 1
    assert clockwise_first_vertex(g2.root_component, 8) == 3
    assert unrotate_doubly_rooted(g2) == g


def test_rotation_identity_when_root_is_one():
    s = Subgraph(frozenset({1, 2}), frozenset({edge(1, 2)}))
    comp = s.components()[0]
    g = DoublyRootedSubgraph(s, 1, comp, 6)
    assert rotate_doubly_rooted(g) == g


def test_rotation_requires_component_opening_at_one():
    s = Subgraph(frozenset({3, 4}), frozenset({edge(3, 4)}))
    g = DoublyRootedSubgraph(s, 2, s.components()[0], 6)
    with pytest.raises(ValueError):
        rotate_doubly_rooted(g)


def test_doubly_rooted_validation():
    s = Subgraph(frozenset({1, 2}), frozenset({edge(1, 2)}))
    with pytest.raises(ValueError):
        DoublyRootedSubgraph(s, 1, frozenset({1}), 6)  # {1} is not a component
    with pytest.raises(ValueError):
        DoublyRootedSubgraph(s, 9, s.components()[0], 6)


def test_binomial_identity_examples():
    assert verify_binomial_identity(4, 3)
    assert verify_binomial_identity(1, 1)
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert verify_binomial_identity(n, k)


def test_reference_tables_are_consistent():
    # array rows sum to first differences of the central Delannoy numbers
    from sandpile_lab.paths import central_delannoy

    for n, row in DIFFERED_DELANNOY_ROWS.items():
        assert sum(row) == central_delannoy(n) - central_delannoy(n - 1)
    # triangle rows sum to the fan spanning tree counts and end with 2^(n-1)
    from sandpile_lab.tutte import spanning_tree_count
    from sandpile_lab.graphs import make_fan

    for n, row in FAN_LEVEL_ROWS_DESC.items():
        assert row[0] == 1
        assert row[-1] == 2 ** (n - 1)
        if n >= 2:
            assert sum(row) == spanning_tree_count(make_fan(n))


def test_verify_theorem_report_schema():
    report = verify_theorem("thm-3.2", 4)
    assert report["theorem"] == "thm-3.2"
    assert report["n_max"] == 4
    assert report["status"] == "pass"
    assert report["cells"]
    for cell in report["cells"]:
        assert set(cell) == {"params", "lhs", "rhs", "ok"}
        assert cell["ok"] is True


def test_verify_theorem_unknown_tag():
    with pytest.raises(ValueError):
        verify_theorem("thm-nonsense", 3)
    with pytest.raises(ValueError):
        verify_theorem("thm-3.2", 0)


def test_verify_theorem_threads_match_serial():
    serial = verify_theorem("eq-11", 8, threads=1)
    parallel = verify_theorem("eq-11", 8, threads=4)
    assert serial == parallel


# sizes follow each check's stated exhaustive range where that is cheap;
# the expensive scans (thm-4.4, eq-10) run at full size in the acceptance suite
_REGISTRY_SIZES = {
    "eq-11": 30,
    "thm-4.4": 4,
    "eq-10": 4,
    "cor-3.12": 6,
    "thm-2.7": 6,
    "matrix-tree": 6,
    "delannoy-array": 6,
    "prop-5.5": 8,
}


@pytest.mark.parametrize("tag", sorted(set(theorem_tags())))
def test_every_registered_check_passes(tag):
    n_max = _REGISTRY_SIZES.get(tag, 7)
    report = verify_theorem(tag, n_max)
    assert report["status"] == "pass", report
