"""Digraphs, undirected graphs, sign functions, and the majority-domination predicates.

Vertices are the integers 0..n-1.  Adjacency is stored as per-vertex bitmasks,
which keeps the brute-force solvers fast: the closed out-neighbourhood sum of a
sign function is a single AND + popcount.  All types are immutable after
construction; every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class CapExceededError(ValueError):
    """An input is beyond the enumeration cap of an exact routine."""


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range [0, {n})")


class Digraph:
    """A finite digraph without loops or multi-arcs; opposite arc pairs are allowed.

    ``out_mask(v)`` / ``in_mask(v)`` give the neighbourhoods as bitmasks,
    ``closed_out_mask(v)`` includes the vertex itself.
    """

    __slots__ = ("n", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if out[u] >> v & 1:
                raise ValueError(f"duplicate arc {u}->{v}")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self._out = out
        self._in = inn

    def out_mask(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self._out[v]

    def in_mask(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self._in[v]

    def closed_out_mask(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self._out[v] | 1 << v

    def closed_in_mask(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self._in[v] | 1 << v

    def out_neighbors(self, v: int) -> list[int]:
        return _mask_to_list(self.out_mask(v))

    def in_neighbors(self, v: int) -> list[int]:
        return _mask_to_list(self.in_mask(v))

    def out_degree(self, v: int) -> int:
        return self.out_mask(v).bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_mask(v).bit_count()

    def has_arc(self, u: int, v: int) -> bool:
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        return bool(self._out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs in ascending (u, v) order."""
        return [(u, v) for u in range(self.n) for v in _mask_to_list(self._out[u])]

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def is_out_regular(self) -> bool:
        return len({m.bit_count() for m in self._out}) <= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self._out == other._out
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._out)))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()!r})"


class Graph:
    """A finite simple undirected graph."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        adj = [0] * n
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge {{{u}, {v}}}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = adj

    def adj_mask(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self._adj[v]

    def closed_mask(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self._adj[v] | 1 << v

    def neighbors(self, v: int) -> list[int]:
        return _mask_to_list(self.adj_mask(v))

    def degree(self, v: int) -> int:
        return self.adj_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in _mask_to_list(self._adj[u])
            if u < v
        ]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


class SignFunction:
    """An assignment of +1/-1 to the vertices 0..n-1, stored as the set of +1 vertices."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, positives: Iterable[int] = ()):
        if n < 1:
            raise ValueError("sign functions need at least one vertex")
        self.n = n
        mask = 0
        for v in positives:
            _check_vertex(v, n)
            mask |= 1 << v
        self.mask = mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "SignFunction":
        if n < 1:
            raise ValueError("sign functions need at least one vertex")
        if mask >> n:
            raise ValueError("mask has bits beyond the vertex range")
        f = cls.__new__(cls)
        f.n = n
        f.mask = mask
        return f

    @classmethod
    def all_ones(cls, n: int) -> "SignFunction":
        return cls.from_mask(n, (1 << n) - 1)

    @property
    def positives(self) -> frozenset[int]:
        return frozenset(_mask_to_list(self.mask))

    @property
    def weight(self) -> int:
        return 2 * self.mask.bit_count() - self.n

    def value(self, v: int) -> int:
        _check_vertex(v, self.n)
        return 1 if self.mask >> v & 1 else -1

    def sum_over(self, mask: int) -> int:
        """Sum of the function over the vertex set given as a bitmask."""
        return 2 * (mask & self.mask).bit_count() - mask.bit_count()

    def signs(self) -> str:
        return "".join("+" if self.mask >> v & 1 else "-" for v in range(self.n))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignFunction)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"SignFunction(n={self.n}, positives={sorted(self.positives)!r})"


@dataclass(frozen=True)
class SolveResult:
    """Optimal weight plus a witness sign function and search statistics."""

    optimum: int
    witness: SignFunction
    nodes_explored: int
    method: str


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _require_same_size(n_graph: int, f: SignFunction) -> None:
    if f.n != n_graph:
        raise ValueError(f"sign function on {f.n} vertices vs graph on {n_graph}")


def closed_out_sum(D: Digraph, f: SignFunction, v: int) -> int:
    """Sum of f over the closed out-neighbourhood of v."""
    _require_same_size(D.n, f)
    return f.sum_over(D.closed_out_mask(v))


def satisfied_set(D: Digraph, f: SignFunction) -> frozenset[int]:
    """Vertices whose closed out-neighbourhood sums to at least 1 under f."""
    _require_same_size(D.n, f)
    return frozenset(
        v for v in range(D.n) if f.sum_over(D.closed_out_mask(v)) >= 1
    )


def _satisfied_count(closed_masks: list[int], fmask: int) -> int:
    count = 0
    for cm in closed_masks:
        if 2 * (cm & fmask).bit_count() > cm.bit_count():
            count += 1
    return count


def closed_out_masks(D: Digraph) -> list[int]:
    return [D._out[v] | 1 << v for v in range(D.n)]


def closed_neighborhood_masks(G: Graph) -> list[int]:
    return [G._adj[v] | 1 << v for v in range(G.n)]


def is_modf(D: Digraph, f: SignFunction) -> bool:
    """Is f a majority out-dominating function: at least half the vertices satisfied?

    The majority threshold is the integer test 2*|S| >= n, which realises
    |S| >= ceil(n/2) exactly for odd n without any rounding.
    """
    if D.n < 1:
        raise ValueError("majority predicates need at least one vertex")
    _require_same_size(D.n, f)
    return 2 * _satisfied_count(closed_out_masks(D), f.mask) >= D.n


def is_majority_dominating(G: Graph, f: SignFunction) -> bool:
    """Undirected analogue of is_modf, over closed neighbourhoods."""
    if G.n < 1:
        raise ValueError("majority predicates need at least one vertex")
    _require_same_size(G.n, f)
    return 2 * _satisfied_count(closed_neighborhood_masks(G), f.mask) >= G.n


MINIMALITY_CAP = 20


def is_minimal_modf(D: Digraph, f: SignFunction, cap: int = MINIMALITY_CAP) -> bool:
    """Is f a MODF with no MODF strictly below it pointwise?

    Any g <= f is obtained by flipping a nonempty subset of f's +1 vertices
    to -1, so the search ranges over subsets of the positives.  Single flips
    are tried first; the full subset sweep is the authoritative check.
    """
    if not is_modf(D, f):
        raise ValueError("is_minimal_modf requires a MODF")
    pmask = f.mask
    p = pmask.bit_count()
    if p == 0:
        return True
    if p > cap:
        raise CapExceededError(
            f"minimality subset search capped at {cap} positives, got {p}"
        )
    masks = closed_out_masks(D)
    n = D.n
    # single flips first: cheap and usually decisive
    rest = pmask
    while rest:
        low = rest & -rest
        rest ^= low
        if 2 * _satisfied_count(masks, pmask ^ low) >= n:
            return False
    # all remaining subsets of the positives
    sub = (pmask - 1) & pmask
    while sub:
        if sub.bit_count() > 1 and 2 * _satisfied_count(masks, pmask ^ sub) >= n:
            return False
        sub = (sub - 1) & pmask
    return True


def minimality_necessary_condition(D: Digraph, f: SignFunction) -> bool:
    """Does every +1 vertex v have some u in its closed in-neighbourhood with
    closed out-sum in {1, 2}?  Holds for every minimal MODF; the converse fails.
    """
    if not is_modf(D, f):
        raise ValueError("minimality_necessary_condition requires a MODF")
    sums = [f.sum_over(cm) for cm in closed_out_masks(D)]
    for v in _mask_to_list(f.mask):
        if not any(sums[u] in (1, 2) for u in _mask_to_list(D.closed_in_mask(v))):
            return False
    return True


def is_in_dominating(D: Digraph, S: Iterable[int]) -> bool:
    """Does every vertex outside S have an out-neighbour in S (absorbency)?"""
    smask = 0
    for v in S:
        _check_vertex(v, D.n)
        smask |= 1 << v
    for v in range(D.n):
        if not smask >> v & 1 and not D._out[v] & smask:
            return False
    return True


def reverse_digraph(D: Digraph) -> Digraph:
    """The digraph with every arc reversed."""
    rev = Digraph(D.n)
    rev._out = list(D._in)
    rev._in = list(D._out)
    return rev
