"""Local digraph edits (arc reversal, arc deletion, vertex deletion) and the
orientation built from a majority dominating function."""

from __future__ import annotations

from .core import Digraph, Graph, SignFunction, is_majority_dominating


def reverse_arc(D: Digraph, u: int, v: int) -> Digraph:
    """Replace the arc u->v by v->u.  Rejected when v->u already exists,
    since the reversal would merge two arcs into one."""
    if not D.has_arc(u, v):
        raise ValueError(f"arc {u}->{v} not present")
    if D.has_arc(v, u):
        raise ValueError(f"reversing {u}->{v} collides with existing {v}->{u}")
    arcs = [(a, b) for a, b in D.arcs() if (a, b) != (u, v)]
    arcs.append((v, u))
    return Digraph(D.n, arcs)


def delete_arc(D: Digraph, u: int, v: int) -> Digraph:
    if not D.has_arc(u, v):
        raise ValueError(f"arc {u}->{v} not present")
    return Digraph(D.n, [(a, b) for a, b in D.arcs() if (a, b) != (u, v)])


def delete_vertex(D: Digraph, v: int) -> Digraph:
    """Remove v and its incident arcs; remaining vertices close the gap,
    keeping their relative order."""
    if not 0 <= v < D.n:
        raise ValueError(f"vertex {v} out of range [0, {D.n})")
    if D.n < 2:
        raise ValueError("cannot delete the last vertex")

    def remap(w: int) -> int:
        return w if w < v else w - 1

    arcs = [(remap(a), remap(b)) for a, b in D.arcs() if a != v and b != v]
    return Digraph(D.n - 1, arcs)


def orientation_from_majority_function(G: Graph, f: SignFunction) -> Digraph:
    """Orient G so that f stays majority dominating in the directed sense:
    every mixed-sign edge runs from the -1 endpoint to the +1 endpoint.
    Same-sign edges may go either way; they run lower index -> higher index
    for determinism."""
    if not is_majority_dominating(G, f):
        raise ValueError("f is not a majority dominating function of G")
    arcs = []
    for u, v in G.edges():
        if f.value(u) == -1 and f.value(v) == 1:
            arcs.append((u, v))
        elif f.value(u) == 1 and f.value(v) == -1:
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    return Digraph(G.n, arcs)
