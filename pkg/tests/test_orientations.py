import random

import pytest

from majdom import (
    CapExceededError,
    Graph,
    compare_with_gamma_maj,
    complete_bipartite_graph,
    cycle_graph,
    directed_cycle,
    double_star_graph,
    enumerate_orientations,
    gamma_maj_out_oracle,
    orientation_bounds,
    path_graph,
    star_graph,
)
from majdom.orientations import _gamma_all_orientations, _leaf_symmetry_representatives


def test_enumerate_orientations_counts():
    assert sum(1 for _ in enumerate_orientations(path_graph(3))) == 4
    oris = list(enumerate_orientations(cycle_graph(3)))
    assert len(oris) == 8
    cycles = [d for d in oris if all(d.out_degree(v) == 1 for v in range(3))]
    assert len(cycles) == 2


def test_orientations_have_one_arc_per_edge():
    G = complete_bipartite_graph(2, 2)
    for d in enumerate_orientations(G):
        assert d.arc_count == G.edge_count
        for u, v in d.arcs():
            assert not d.has_arc(v, u)


def test_enumerate_orientations_cap():
    with pytest.raises(CapExceededError):
        next(enumerate_orientations(complete_bipartite_graph(5, 5)))


def test_batched_kernel_matches_per_orientation_oracle():
    rng = random.Random(31)
    for _ in range(12):
        n = rng.randrange(1, 6)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        G = Graph(n, [p for p in pairs if rng.random() < 0.6])
        batched = _gamma_all_orientations(G)
        for code, D in enumerate(enumerate_orientations(G)):
            assert int(batched[code]) == gamma_maj_out_oracle(D).optimum


def test_orientation_bounds_fixtures():
    b = orientation_bounds(path_graph(6))
    assert (b.dom_plus, b.DOM_plus) == (-2, 0)
    assert b.orientations_enumerated == 32
    b = orientation_bounds(cycle_graph(3))
    assert (b.dom_plus, b.DOM_plus) == (1, 3)
    assert orientation_bounds(complete_bipartite_graph(2, 3)).dom_plus == -1


def test_orientation_bounds_witnesses_are_consistent():
    for G in (path_graph(5), star_graph(5), double_star_graph(1, 2)):
        b = orientation_bounds(G)
        assert gamma_maj_out_oracle(b.dom_orientation).optimum == b.dom_plus
        assert gamma_maj_out_oracle(b.max_orientation).optimum == b.DOM_plus
        assert b.dom_function.weight == b.dom_plus
        assert b.dom_plus <= b.DOM_plus
        # every orientation lands inside the bounds
        for D in enumerate_orientations(G):
            assert b.dom_plus <= gamma_maj_out_oracle(D).optimum <= b.DOM_plus


def test_symmetry_reduction_matches_plain_enumeration():
    for G in (
        star_graph(5),
        star_graph(7),
        double_star_graph(1, 2),
        double_star_graph(2, 3),
        double_star_graph(3, 3),
    ):
        plain = orientation_bounds(G)
        reduced = orientation_bounds(G, symmetry="stars")
        assert (plain.dom_plus, plain.DOM_plus) == (reduced.dom_plus, reduced.DOM_plus)
        assert reduced.orientations_enumerated < plain.orientations_enumerated


def test_symmetry_rejects_other_graphs():
    with pytest.raises(ValueError):
        orientation_bounds(cycle_graph(4), symmetry="stars")
    with pytest.raises(ValueError):
        orientation_bounds(path_graph(5), symmetry="bogus")


def test_leaf_symmetry_representative_counts():
    assert len(_leaf_symmetry_representatives(star_graph(6))) == 6
    assert len(_leaf_symmetry_representatives(double_star_graph(2, 3))) == 2 * 3 * 4


def test_bb_method_agrees():
    G = double_star_graph(2, 2)
    a = orientation_bounds(G)
    b = orientation_bounds(G, method="bb")
    assert (a.dom_plus, a.DOM_plus) == (b.dom_plus, b.DOM_plus)


def test_compare_with_gamma_maj_trichotomy():
    r = compare_with_gamma_maj(path_graph(8))
    assert (r.gamma_maj, r.DOM_plus, r.relation) == (-2, 0, "<")
    r = compare_with_gamma_maj(star_graph(6))
    assert (r.gamma_maj, r.DOM_plus, r.relation) == (1, 0, ">")
    r = compare_with_gamma_maj(double_star_graph(2, 2))
    assert (r.gamma_maj, r.DOM_plus, r.relation) == (0, 0, "=")
    assert r.dom_le_gamma


def test_triangle_gamma_equals_dom_plus():
    # one of the few graphs whose gamma_maj meets the orientation minimum
    r = compare_with_gamma_maj(cycle_graph(3))
    assert r.gamma_maj == 1 == r.dom_plus


def test_bounds_caps():
    with pytest.raises(CapExceededError):
        orientation_bounds(complete_bipartite_graph(5, 5))
