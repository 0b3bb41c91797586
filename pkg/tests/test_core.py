import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majdom import (
    CapExceededError,
    Digraph,
    Graph,
    SignFunction,
    closed_out_sum,
    directed_cycle,
    directed_path,
    empty_digraph,
    is_in_dominating,
    is_majority_dominating,
    is_minimal_modf,
    is_modf,
    minimality_necessary_condition,
    path_graph,
    reverse_digraph,
    satisfied_set,
    star_graph,
)


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Digraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@st.composite
def digraphs_with_sign(draw, max_n=6):
    D = draw(digraphs(max_n=max_n))
    mask = draw(st.integers(0, (1 << D.n) - 1))
    return D, SignFunction.from_mask(D.n, mask)


def test_digraph_validation():
    with pytest.raises(ValueError):
        Digraph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Digraph(3, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        Digraph(3, [(0, 3)])
    # opposite arc pairs are fine
    D = Digraph(2, [(0, 1), (1, 0)])
    assert D.arc_count == 2


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    G = Graph(3, [(0, 1), (1, 2)])
    assert G.degree(1) == 2 and G.edges() == [(0, 1), (1, 2)]


def test_sign_function_basics():
    f = SignFunction(4, [1, 3])
    assert f.weight == 0
    assert f.value(1) == 1 and f.value(0) == -1
    assert f.signs() == "-+-+"
    assert SignFunction.from_mask(4, 0b1010) == f
    with pytest.raises(ValueError):
        SignFunction(0, [])
    with pytest.raises(ValueError):
        SignFunction(3, [3])


def test_closed_out_sum_examples():
    c3 = directed_cycle(3)
    ones = SignFunction.all_ones(3)
    assert all(closed_out_sum(c3, ones, v) == 2 for v in range(3))

    p4 = directed_path(4)
    f = SignFunction(4, [2, 3])
    assert closed_out_sum(p4, f, 1) == 0
    assert [closed_out_sum(p4, f, v) for v in range(4)] == [-2, 0, 2, 1]

    isolated = empty_digraph(1)
    assert closed_out_sum(isolated, SignFunction.from_mask(1, 0), 0) == -1


def test_closed_out_sum_errors():
    c3 = directed_cycle(3)
    with pytest.raises(ValueError):
        closed_out_sum(c3, SignFunction.all_ones(4), 0)
    with pytest.raises(ValueError):
        closed_out_sum(c3, SignFunction.all_ones(3), 3)


def test_satisfied_set_examples():
    p4 = directed_path(4)
    assert satisfied_set(p4, SignFunction(4, [2, 3])) == {2, 3}
    assert satisfied_set(p4, SignFunction.all_ones(4)) == {0, 1, 2, 3}
    assert satisfied_set(p4, SignFunction.from_mask(4, 0)) == frozenset()


def test_is_modf_examples():
    p4 = directed_path(4)
    assert is_modf(p4, SignFunction(4, [2, 3]))
    c4 = directed_cycle(4)
    for v in range(4):
        assert not is_modf(c4, SignFunction(4, [v]))
    assert is_modf(c4, SignFunction.all_ones(4))
    with pytest.raises(ValueError):
        is_modf(empty_digraph(0), SignFunction.all_ones(1))


def test_is_minimal_modf():
    p3 = directed_path(3)
    assert not is_minimal_modf(p3, SignFunction.all_ones(3))
    c4 = directed_cycle(4)
    assert is_minimal_modf(c4, SignFunction(4, [0, 1, 2]))
    single = empty_digraph(1)
    assert is_minimal_modf(single, SignFunction.all_ones(1))
    with pytest.raises(ValueError):
        is_minimal_modf(c4, SignFunction(4, [0]))  # not a MODF


def test_is_minimal_modf_cap():
    big = empty_digraph(22)
    f = SignFunction(22, range(21))
    assert is_modf(big, f)
    with pytest.raises(CapExceededError):
        is_minimal_modf(big, f)


def test_minimality_necessary_condition():
    # holds for all-ones on directed paths, which is never minimal (n >= 2)
    for n in range(2, 8):
        pn = directed_path(n)
        ones = SignFunction.all_ones(n)
        assert minimality_necessary_condition(pn, ones)
        assert not is_minimal_modf(pn, ones)
    c4 = directed_cycle(4)
    assert minimality_necessary_condition(c4, SignFunction(4, [0, 1, 2]))
    with pytest.raises(ValueError):
        minimality_necessary_condition(c4, SignFunction(4, [0]))


def test_is_majority_dominating_examples():
    p4 = path_graph(4)
    assert is_majority_dominating(p4, SignFunction(4, [1, 2]))
    assert is_majority_dominating(p4, SignFunction.all_ones(4))
    k14 = star_graph(5)
    assert not is_majority_dominating(k14, SignFunction(5, [0]))


def test_is_in_dominating_examples():
    c3 = directed_cycle(3)
    assert is_in_dominating(c3, [0, 1])
    assert not is_in_dominating(c3, [0])
    assert is_in_dominating(c3, [0, 1, 2])
    with pytest.raises(ValueError):
        is_in_dominating(c3, [3])


def test_reverse_digraph_examples():
    p3 = directed_path(3)
    assert reverse_digraph(p3).arcs() == [(1, 0), (2, 1)]
    k2 = Digraph(2, [(0, 1), (1, 0)])
    assert reverse_digraph(k2) == k2


@given(digraphs())
def test_reverse_is_involution(D):
    assert reverse_digraph(reverse_digraph(D)) == D


@given(digraphs_with_sign())
def test_weight_identity_and_parity(df):
    D, f = df
    assert f.weight == len(f.positives) - (D.n - len(f.positives))
    assert (f.weight - D.n) % 2 == 0


@given(digraphs_with_sign())
def test_all_ones_is_always_modf(df):
    D, _ = df
    assert is_modf(D, SignFunction.all_ones(D.n))


@given(digraphs_with_sign())
@settings(max_examples=200)
def test_satisfied_set_monotone_under_positive_flip(df):
    D, f = df
    before = satisfied_set(D, f)
    for v in range(D.n):
        if f.value(v) == -1:
            g = SignFunction.from_mask(D.n, f.mask | 1 << v)
            assert before <= satisfied_set(D, g)


@given(digraphs_with_sign())
@settings(max_examples=200)
def test_modf_of_reverse_is_in_domination_majority(df):
    # f majority-dominates the reversed digraph exactly when the closed
    # *in*-neighbourhood sums of the original reach the majority
    D, f = df
    in_side = sum(
        1 for v in range(D.n) if f.sum_over(D.closed_in_mask(v)) >= 1
    )
    assert is_modf(reverse_digraph(D), f) == (2 * in_side >= D.n)


@given(digraphs_with_sign())
@settings(max_examples=100)
def test_minimal_modfs_satisfy_necessary_condition(df):
    D, f = df
    if is_modf(D, f) and is_minimal_modf(D, f):
        assert minimality_necessary_condition(D, f)
