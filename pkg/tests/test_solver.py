import random
from itertools import combinations

import pytest

from majdom import (
    CapExceededError,
    FamilySpec,
    SignFunction,
    check_gamma_minus_bound,
    closed_form,
    complete_digraph,
    cycle_graph,
    directed_cycle,
    directed_path,
    empty_digraph,
    figure1,
    gamma_maj_out_bb,
    gamma_maj_out_oracle,
    gamma_maj_undirected,
    gamma_minus,
    is_in_dominating,
    is_majority_dominating,
    is_modf,
    modf_decision,
    oriented_star,
    path_graph,
    random_digraph,
    star_graph,
    transitive_tournament,
)
from majdom.solver import (
    _solve_masks_numpy,
    _solve_masks_python,
    random_out_regular_digraph,
)
from majdom.core import closed_out_masks, closed_neighborhood_masks


# reference oracle: plain subset search, increasing positive count, so the
# first feasible size гives the optimum and the first witness is the
# lexicographically smallest positives list
def reference_min_weight(n, closed_lists):
    for r in range(n + 1):
        for pos in combinations(range(n), r):
            ps = set(pos)
            sat = sum(
                1
                for members in closed_lists
                if sum(1 if w in ps else -1 for w in members) >= 1
            )
            if 2 * sat >= n:
                return 2 * r - n, list(pos)
    raise AssertionError("all-ones is always feasible")


def reference_gamma_out(D):
    return reference_min_weight(
        D.n, [[v] + D.out_neighbors(v) for v in range(D.n)]
    )


def reference_gamma_und(G):
    return reference_min_weight(
        G.n, [[v] + G.neighbors(v) for v in range(G.n)]
    )


def test_oracle_against_reference_with_witness():
    rng = random.Random(42)
    for _ in range(60):
        D = random_digraph(rng.randrange(1, 8), rng.choice([0.2, 0.5, 0.8]), rng)
        want_w, want_pos = reference_gamma_out(D)
        got = gamma_maj_out_oracle(D)
        assert got.optimum == want_w
        assert sorted(got.witness.positives) == want_pos
        assert is_modf(D, got.witness)
        assert got.nodes_explored == 1 << D.n


def test_python_and_numpy_paths_agree():
    rng = random.Random(9)
    for _ in range(30):
        D = random_digraph(rng.randrange(1, 11), 0.5, rng)
        masks = closed_out_masks(D)
        assert _solve_masks_python(masks, D.n) == _solve_masks_numpy(masks, D.n)


def test_oracle_threads_match_sequential():
    rng = random.Random(3)
    D = random_digraph(12, 0.5, rng)
    assert gamma_maj_out_oracle(D) == gamma_maj_out_oracle(D, threads=4)


def test_family_values():
    for n in range(3, 11):
        assert gamma_maj_out_oracle(directed_cycle(n)).optimum == (2 if n % 2 == 0 else 3)
    for n in range(1, 11):
        assert gamma_maj_out_oracle(directed_path(n)).optimum == n % 2
    for n in range(1, 11):
        want = -n + 2 * (-(-(n + 2) // 4))
        assert gamma_maj_out_oracle(transitive_tournament(n)).optimum == want
    assert gamma_maj_out_oracle(figure1()).optimum == 1
    assert gamma_maj_out_oracle(oriented_star(2, 2)).optimum == -1
    assert gamma_maj_out_oracle(empty_digraph(9)).optimum == 1
    assert gamma_maj_out_oracle(empty_digraph(4)).optimum == 0
    assert gamma_maj_out_oracle(complete_digraph(3)).optimum == 1


def test_oracle_caps():
    with pytest.raises(ValueError):
        gamma_maj_out_oracle(empty_digraph(0))
    with pytest.raises(CapExceededError):
        gamma_maj_out_oracle(empty_digraph(27))
    with pytest.raises(CapExceededError):
        gamma_maj_out_bb(empty_digraph(41))


def test_bb_matches_oracle_on_randoms():
    rng = random.Random(11)
    for _ in range(120):
        D = random_digraph(rng.randrange(1, 11), 0.5, rng)
        a = gamma_maj_out_oracle(D)
        b = gamma_maj_out_bb(D)
        assert a.optimum == b.optimum
        assert is_modf(D, b.witness) and b.witness.weight == b.optimum


def test_bb_beyond_oracle_cap_terminates():
    # sparse 30-vertex instance: a long directed path
    res = gamma_maj_out_bb(directed_path(30))
    assert res.optimum == 0
    assert res.method == "branch-and-bound"


def test_optimum_n_means_all_ones_unique():
    c3 = directed_cycle(3)
    res = gamma_maj_out_oracle(c3)
    assert res.optimum == 3 and res.witness == SignFunction.all_ones(3)
    # no other 3-vertex MODF of C3 exists at any weight below 3
    assert all(
        not is_modf(c3, SignFunction.from_mask(3, m)) for m in range(7)
    )


def test_modf_decision():
    c4 = directed_cycle(4)
    assert modf_decision(c4, 2)
    assert not modf_decision(c4, 1)
    assert modf_decision(c4, 4)
    assert modf_decision(c4, 2, method="bb")


def test_gamma_maj_undirected():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randrange(1, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        from majdom import Graph

        G = Graph(n, [p for p in pairs if rng.random() < 0.5])
        want_w, want_pos = reference_gamma_und(G)
        got = gamma_maj_undirected(G)
        assert got.optimum == want_w
        assert sorted(got.witness.positives) == want_pos
        assert is_majority_dominating(G, got.witness)
    assert gamma_maj_undirected(path_graph(8)).optimum == -2
    assert gamma_maj_undirected(cycle_graph(9)).optimum == -1
    assert gamma_maj_undirected(star_graph(6)).optimum == 1
    assert gamma_maj_undirected(path_graph(2)).optimum == 2  # below formula range


def test_gamma_minus():
    assert gamma_minus(directed_cycle(3)).optimum == 2
    res = gamma_minus(directed_cycle(4))
    assert res.optimum == 2 and res.witness == (0, 2)
    for n in range(1, 7):
        assert gamma_minus(complete_digraph(n)).optimum == 1
        assert gamma_minus(empty_digraph(max(n, 1))).optimum == max(n, 1)
    # reference comparison on randoms
    rng = random.Random(17)
    for _ in range(30):
        D = random_digraph(rng.randrange(1, 8), 0.4, rng)
        got = gamma_minus(D)
        want = next(
            (r, S)
            for r in range(1, D.n + 1)
            for S in combinations(range(D.n), r)
            if is_in_dominating(D, S)
        )
        assert (got.optimum, got.witness) == want


def test_check_gamma_minus_bound():
    assert check_gamma_minus_bound(directed_cycle(4))
    assert check_gamma_minus_bound(complete_digraph(5))
    assert check_gamma_minus_bound(empty_digraph(6))
    with pytest.raises(ValueError):
        check_gamma_minus_bound(directed_path(3))


def test_random_models_are_seeded():
    a = random_digraph(8, 0.5, random.Random(1234))
    b = random_digraph(8, 0.5, random.Random(1234))
    assert a == b
    c = random_out_regular_digraph(9, 3, random.Random(5))
    assert c.is_out_regular() and c.out_degree(0) == 3


def test_parity_and_bounds_on_solves():
    rng = random.Random(23)
    for _ in range(40):
        D = random_digraph(rng.randrange(1, 10), 0.5, rng)
        res = gamma_maj_out_oracle(D)
        assert (res.optimum - D.n) % 2 == 0
        assert -D.n <= res.optimum <= D.n


def test_closed_form_values():
    cf = lambda kind, params, q: closed_form(FamilySpec(kind, params), q).predicted
    assert cf("transitive_tournament", (7,), "gamma_maj_out") == -1
    assert cf("transitive_tournament", (12,), "gamma_maj_out") == -4
    assert cf("directed_cycle", (6,), "gamma_maj_out") == 2
    assert cf("directed_path", (7,), "gamma_maj_out") == 1
    assert cf("path_graph", (6,), "dom_plus") == -2
    assert cf("path_graph", (8,), "gamma_maj") == -2
    assert cf("cycle_graph", (9,), "gamma_maj") == -1
    assert cf("star_graph", (6,), "gamma_maj") == 1
    assert cf("star_graph", (5,), "gamma_maj") == 2
    assert cf("double_star_graph", (5, 7), "dom_plus") == -4
    assert cf("double_star_graph", (4, 7), "dom_plus") == -3
    assert cf("double_star_graph", (1, 10), "dom_plus") == -1  # degree-2 stem
    assert cf("double_star_graph", (2, 3), "dom_plus") == -1
    assert cf("complete_bipartite_graph", (2, 3), "dom_plus") == -1
    assert cf("cycle_graph", (3,), "dom_plus") == 1
    assert cf("cycle_graph", (4,), "dom_plus") == 0
    assert cf("star_graph", (6,), "DOM_plus") == 0
    assert cf("double_star_graph", (2, 2), "DOM_plus") == 0


def test_closed_form_rejects_out_of_range():
    for kind, params, q in [
        ("star_graph", (4,), "dom_plus"),  # formula starts at n = 5
        ("double_star_graph", (1, 1), "dom_plus"),  # n = 4 has no dom formula
        ("path_graph", (2,), "gamma_maj"),  # small paths break the citation
        ("star_graph", (3,), "gamma_maj"),
        ("complete_bipartite_graph", (1, 3), "dom_plus"),
        ("directed_cycle", (5,), "gamma_maj"),
        ("complete_digraph", (3,), "gamma_maj_out"),
    ]:
        with pytest.raises(ValueError):
            closed_form(FamilySpec(kind, params), q)
