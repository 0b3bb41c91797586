"""Deterministic generators for the digraph and graph families under study.

Each generator is deterministic: identical parameters give identical graphs,
hence identical serialisations.  Vertex numbering conventions are stated per
generator, since tests and fixtures rely on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Digraph, Graph


def directed_path(n: int) -> Digraph:
    """Arcs v0 -> v1 -> ... -> v(n-1); the last vertex is a sink."""
    if n < 1:
        raise ValueError("directed_path needs n >= 1")
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def directed_cycle(n: int) -> Digraph:
    """Arcs vi -> v(i+1 mod n); every vertex has out- and in-degree 1.

    n = 2 would be an opposite arc pair, not a simple cycle, so n >= 3.
    """
    if n < 3:
        raise ValueError("directed_cycle needs n >= 3")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def transitive_tournament(n: int) -> Digraph:
    """Arc vi -> vj exactly when i < j; out-degree sequence (n-1, ..., 1, 0)."""
    if n < 1:
        raise ValueError("transitive_tournament needs n >= 1")
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def oriented_star(in_leaves: int, out_leaves: int) -> Digraph:
    """A star orientation: vertex 0 is the centre, leaves 1..in_leaves point at
    it, the remaining out_leaves leaves are pointed at by it."""
    if in_leaves < 0 or out_leaves < 0 or in_leaves + out_leaves < 1:
        raise ValueError("oriented_star needs at least one leaf")
    arcs = [(i, 0) for i in range(1, in_leaves + 1)]
    arcs += [(0, i) for i in range(in_leaves + 1, in_leaves + out_leaves + 1)]
    return Digraph(in_leaves + out_leaves + 1, arcs)


def figure1() -> Digraph:
    """The 7-vertex fixture whose inner vertex has positive out-degree yet
    whose deletion drops the majority out-domination number by 3.

    Vertex order (a, b, c, v, d, e, f) -> indices 0..6, so v sits at index 3.
    """
    a, b, c, v, d, e, f = range(7)
    return Digraph(7, [(v, c), (v, d), (c, a), (c, b), (d, f), (f, e), (e, d)])


FIGURE1_INNER_VERTEX = 3


def figure2(k: int) -> Digraph:
    """The source-heavy fixture whose vertex u hides a weight -2k function.

    Vertices: u = 0, v = 1, then k sources s_i pointing at both u and v, then
    k+2 sources t_j pointing only at v.  Both u and v are sinks.
    """
    if k < 1:
        raise ValueError("figure2 needs k >= 1")
    u, v = 0, 1
    arcs = []
    for i in range(k):
        s = 2 + i
        arcs += [(s, u), (s, v)]
    for j in range(k + 2):
        arcs.append((2 + k + j, v))
    return Digraph(2 * k + 4, arcs)


def complete_digraph(n: int) -> Digraph:
    """All ordered pairs as arcs."""
    if n < 1:
        raise ValueError("complete_digraph needs n >= 1")
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def empty_digraph(n: int) -> Digraph:
    """No arcs.  n = 0 is allowed so the reduction can use it as a component;
    the solvers themselves still require n >= 1."""
    if n < 0:
        raise ValueError("empty_digraph needs n >= 0")
    return Digraph(n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: centre 0 joined to leaves 1..n-1."""
    if n < 2:
        raise ValueError("star_graph needs n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)])


def double_star_graph(a: int, b: int) -> Graph:
    """Two stars joined at their centres: stems 0 and 1 adjacent, a leaves on
    stem 0 (indices 2..a+1) and b leaves on stem 1; n = a + b + 2."""
    if a < 1 or b < 1:
        raise ValueError("double_star_graph needs a, b >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + j) for j in range(b)]
    return Graph(a + b + 2, edges)


def complete_bipartite_graph(r: int, s: int) -> Graph:
    """K_{r,s}: parts 0..r-1 and r..r+s-1."""
    if r < 1 or s < 1:
        raise ValueError("complete_bipartite_graph needs r, s >= 1")
    return Graph(r + s, [(u, r + v) for u in range(r) for v in range(s)])


# kind -> (parameter names, builder, yields digraph?)
FAMILIES: dict[str, tuple[tuple[str, ...], object, bool]] = {
    "directed_path": (("n",), directed_path, True),
    "directed_cycle": (("n",), directed_cycle, True),
    "transitive_tournament": (("n",), transitive_tournament, True),
    "complete_digraph": (("n",), complete_digraph, True),
    "empty_digraph": (("n",), empty_digraph, True),
    "oriented_star": (("in_leaves", "out_leaves"), oriented_star, True),
    "figure1": ((), figure1, True),
    "figure2": (("k",), figure2, True),
    "path_graph": (("n",), path_graph, False),
    "cycle_graph": (("n",), cycle_graph, False),
    "star_graph": (("n",), star_graph, False),
    "double_star_graph": (("a", "b"), double_star_graph, False),
    "complete_bipartite_graph": (("r", "s"), complete_bipartite_graph, False),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters, e.g. ('directed_cycle', (6,))."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in FAMILIES:
            raise ValueError(f"unknown family {self.kind!r}")
        names = FAMILIES[self.kind][0]
        if len(self.params) != len(names):
            raise ValueError(
                f"{self.kind} takes parameters {names}, got {self.params}"
            )

    @property
    def is_digraph(self) -> bool:
        return FAMILIES[self.kind][2]

    def build(self):
        return FAMILIES[self.kind][1](*self.params)

    def label(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(map(str, self.params))})"
