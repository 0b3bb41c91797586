"""Orientation sweeps: enumerate all orientations of a graph and take the
minimum (dom_plus) and maximum (DOM_plus) of the majority out-domination
number over them.

Orientation i of the sorted edge list is encoded by the bits of i: bit j = 0
orients edge j from its lower to its higher endpoint.  The default solver
evaluates whole blocks of orientations against all sign vectors in one numpy
kernel; per-orientation solving (oracle or branch and bound) gives the same
numbers and serves as the reference path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import CapExceededError, Digraph, Graph, SignFunction
from .solver import gamma_maj_undirected, solve_gamma_maj_out

ORIENTATION_EDGE_CAP = 24
BOUNDS_EDGE_CAP = 20
BOUNDS_VERTEX_CAP = 20
_BATCH_ELEMENT_BITS = 22  # orientations x sign-vectors per kernel block


def orientation_digraph(G: Graph, code: int) -> Digraph:
    edges = G.edges()
    arcs = [
        (u, v) if not code >> i & 1 else (v, u) for i, (u, v) in enumerate(edges)
    ]
    return Digraph(G.n, arcs)


def enumerate_orientations(G: Graph) -> Iterator[Digraph]:
    """All 2^|E| orientations, one arc per edge, in code order."""
    m = G.edge_count
    if m > ORIENTATION_EDGE_CAP:
        raise CapExceededError(
            f"orientation enumeration capped at {ORIENTATION_EDGE_CAP} edges"
        )
    for code in range(1 << m):
        yield orientation_digraph(G, code)


def _gamma_all_orientations(G: Graph) -> np.ndarray:
    """Majority out-domination number of every orientation, indexed by code."""
    n = G.n
    edges = G.edges()
    m = len(edges)
    incident = [
        [(i, b if v == a else a, v == a) for i, (a, b) in enumerate(edges) if v in (a, b)]
        for v in range(n)
    ]
    signs = np.arange(1 << n, dtype=np.uint32)
    weights = (2 * np.bitwise_count(signs).astype(np.int16) - n)
    need = (n + 1) // 2

    chunk = max(1, (1 << _BATCH_ELEMENT_BITS) >> n)
    out = np.empty(1 << m, dtype=np.int16)
    for lo in range(0, 1 << m, chunk):
        hi = min(lo + chunk, 1 << m)
        codes = np.arange(lo, hi, dtype=np.uint32)
        sat = np.zeros((hi - lo, 1 << n), dtype=np.int8)
        for v in range(n):
            mask_v = np.full(hi - lo, 1 << v, dtype=np.uint32)
            for i, other, is_low in incident[v]:
                away = ((codes >> np.uint32(i)) & np.uint32(1)) == (0 if is_low else 1)
                mask_v |= np.where(away, np.uint32(1 << other), np.uint32(0))
            thr = (np.bitwise_count(mask_v) + 2) // 2
            sat += np.bitwise_count(mask_v[:, None] & signs[None, :]) >= thr[:, None]
        feasible = sat >= need
        out[lo:hi] = np.where(feasible, weights[None, :], np.int16(32767)).min(axis=1)
    return out


def _detect_star(G: Graph):
    """(centre, leaves) if G is a star with at least 2 leaves, else None."""
    n = G.n
    if n < 3:
        return None
    centres = [v for v in range(n) if G.degree(v) == n - 1]
    if len(centres) != 1:
        return None
    c = centres[0]
    if any(G.degree(v) != 1 for v in range(n) if v != c):
        return None
    return c, [v for v in range(n) if v != c]


def _detect_double_star(G: Graph):
    """(stem1, stem2, leaves1, leaves2) if G is a double star, else None."""
    n = G.n
    stems = [v for v in range(n) if G.degree(v) >= 2]
    if len(stems) != 2:
        return None
    s1, s2 = stems
    if not G.has_edge(s1, s2):
        return None
    if any(G.degree(v) != 1 for v in range(n) if v not in (s1, s2)):
        return None
    leaves1 = [v for v in G.neighbors(s1) if v != s2]
    leaves2 = [v for v in G.neighbors(s2) if v != s1]
    if len(leaves1) + len(leaves2) + 2 != n:
        return None
    return s1, s2, leaves1, leaves2


def _leaf_symmetry_representatives(G: Graph) -> list[Digraph]:
    """One orientation per equivalence class under permutations of same-stem
    leaves: only the number of out-oriented leaves per stem matters, and the
    canonical representative out-orients the lowest-indexed leaves."""
    star = _detect_star(G)
    if star is not None:
        c, leaves = star
        reps = []
        for t in range(len(leaves) + 1):
            arcs = [(c, l) for l in leaves[:t]] + [(l, c) for l in leaves[t:]]
            reps.append(Digraph(G.n, arcs))
        return reps
    ds = _detect_double_star(G)
    if ds is None:
        raise ValueError("leaf symmetry applies to stars and double stars only")
    s1, s2, leaves1, leaves2 = ds
    reps = []
    for stem_arc in ((s1, s2), (s2, s1)):
        for t1 in range(len(leaves1) + 1):
            for t2 in range(len(leaves2) + 1):
                arcs = [stem_arc]
                arcs += [(s1, l) for l in leaves1[:t1]] + [(l, s1) for l in leaves1[t1:]]
                arcs += [(s2, l) for l in leaves2[:t2]] + [(l, s2) for l in leaves2[t2:]]
                reps.append(Digraph(G.n, arcs))
    return reps


@dataclass(frozen=True)
class OrientationBounds:
    """Extremes of the majority out-domination number over all orientations,
    with witness orientations (and an optimal sign function for each)."""

    dom_plus: int
    DOM_plus: int
    dom_orientation: Digraph
    dom_function: SignFunction
    max_orientation: Digraph
    max_function: SignFunction
    orientations_enumerated: int


def orientation_bounds(
    G: Graph, method: str = "auto", symmetry: str = "none"
) -> OrientationBounds:
    """dom_plus / DOM_plus over all orientations of G (or over leaf-symmetry
    representatives when symmetry="stars")."""
    if G.n < 1:
        raise ValueError("needs at least one vertex")
    m = G.edge_count
    if m > BOUNDS_EDGE_CAP or G.n > BOUNDS_VERTEX_CAP:
        raise CapExceededError(
            f"orientation bounds capped at {BOUNDS_EDGE_CAP} edges"
            f" and {BOUNDS_VERTEX_CAP} vertices"
        )
    if symmetry == "stars":
        reps = _leaf_symmetry_representatives(G)
        gammas = [solve_gamma_maj_out(D, method).optimum for D in reps]
        lo = min(range(len(reps)), key=lambda i: (gammas[i], i))
        hi = max(range(len(reps)), key=lambda i: (gammas[i], -i))
        dom_orient, max_orient = reps[lo], reps[hi]
        count = len(reps)
        dom_value, max_value = gammas[lo], gammas[hi]
    elif symmetry != "none":
        raise ValueError(f"unknown symmetry mode {symmetry!r}")
    elif method == "auto" and m + G.n <= _BATCH_ELEMENT_BITS + 2:
        gammas = _gamma_all_orientations(G)
        lo = int(np.argmin(gammas))
        hi = int(np.argmax(gammas))
        dom_orient = orientation_digraph(G, lo)
        max_orient = orientation_digraph(G, hi)
        count = 1 << m
        dom_value, max_value = int(gammas[lo]), int(gammas[hi])
    else:
        dom_value = max_value = None
        dom_orient = max_orient = None
        count = 0
        for D in enumerate_orientations(G):
            g = solve_gamma_maj_out(D, method).optimum
            if dom_value is None or g < dom_value:
                dom_value, dom_orient = g, D
            if max_value is None or g > max_value:
                max_value, max_orient = g, D
            count += 1
    dom_function = solve_gamma_maj_out(dom_orient, method).witness
    max_function = solve_gamma_maj_out(max_orient, method).witness
    return OrientationBounds(
        dom_value, max_value, dom_orient, dom_function, max_orient, max_function, count
    )


@dataclass(frozen=True)
class GammaDomComparison:
    """How gamma_maj relates to the orientation extremes of a graph."""

    n: int
    gamma_maj: int
    dom_plus: int
    DOM_plus: int
    relation: str  # gamma_maj <, =, > DOM_plus
    dom_le_gamma: bool


def compare_with_gamma_maj(G: Graph, method: str = "auto") -> GammaDomComparison:
    bounds = orientation_bounds(G, method)
    gamma = gamma_maj_undirected(G).optimum
    if gamma < bounds.DOM_plus:
        rel = "<"
    elif gamma == bounds.DOM_plus:
        rel = "="
    else:
        rel = ">"
    return GammaDomComparison(
        G.n, gamma, bounds.dom_plus, bounds.DOM_plus, rel, bounds.dom_plus <= gamma
    )
