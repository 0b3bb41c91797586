"""Exhaustive enumeration of small digraphs, tournaments, and graphs.

Labeled enumeration walks every adjacency code.  The isomorph-free variants
grow representatives one vertex at a time and canonicalise candidates by
taking the minimum adjacency code over all vertex permutations (vectorised
with numpy); they exist because properties checked per isomorphism class make
the n = 5 digraph and n = 7 tournament sweeps tractable.

Codes: digraphs use one bit per ordered pair (u, v), u != v, in ascending
order; graphs use one bit per unordered pair u < v; tournaments use unordered
pairs with bit 1 meaning the arc runs low -> high.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

import numpy as np

from .core import CapExceededError, Digraph, Graph

DIGRAPH_CLASS_CAP = 5
TOURNAMENT_CLASS_CAP = 8
GRAPH_CLASS_CAP = 7


def ordered_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def unordered_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def digraph_from_code(n: int, code: int) -> Digraph:
    pairs = ordered_pairs(n)
    return Digraph(n, [pairs[k] for k in range(len(pairs)) if code >> k & 1])


def graph_from_code(n: int, code: int) -> Graph:
    pairs = unordered_pairs(n)
    return Graph(n, [pairs[k] for k in range(len(pairs)) if code >> k & 1])


def tournament_from_code(n: int, code: int) -> Digraph:
    pairs = unordered_pairs(n)
    arcs = [
        (u, v) if code >> k & 1 else (v, u) for k, (u, v) in enumerate(pairs)
    ]
    return Digraph(n, arcs)


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every labeled digraph on n vertices (2^(n(n-1)) of them)."""
    if n * (n - 1) > 16:
        raise CapExceededError("labeled digraph sweep capped at n(n-1) <= 16")
    for code in range(1 << (n * (n - 1))):
        yield digraph_from_code(n, code)


def all_out_regular_digraphs(n: int, d: int) -> Iterator[Digraph]:
    """Every labeled digraph on n vertices in which each vertex has exactly d
    out-neighbours (prod of C(n-1, d) choices)."""
    if not 0 <= d <= n - 1 and not (n >= 1 and d == 0):
        raise ValueError("need 0 <= d <= n - 1")
    choices = [
        list(combinations([v for v in range(n) if v != u], d)) for u in range(n)
    ]
    for pick in product(*choices):
        yield Digraph(n, [(u, v) for u in range(n) for v in pick[u]])


def _perm_maps_digraph(n: int) -> list[tuple[np.ndarray, None]]:
    """For each vertex permutation, where every ordered-pair bit goes."""
    pairs = ordered_pairs(n)
    index = {pq: k for k, pq in enumerate(pairs)}
    maps = []
    for p in permutations(range(n)):
        tgt = np.array([index[(p[u], p[v])] for u, v in pairs], dtype=np.uint64)
        maps.append((tgt, None))
    return maps


def _perm_maps_pairs(n: int, oriented: bool) -> list[tuple[np.ndarray, np.ndarray | None]]:
    pairs = unordered_pairs(n)
    index = {pq: k for k, pq in enumerate(pairs)}
    maps = []
    for p in permutations(range(n)):
        tgt = np.empty(len(pairs), dtype=np.uint64)
        flip = np.zeros(len(pairs), dtype=np.uint64) if oriented else None
        for k, (u, v) in enumerate(pairs):
            a, b = p[u], p[v]
            if a > b:
                a, b = b, a
                if oriented:
                    flip[k] = 1
            tgt[k] = index[(a, b)]
        maps.append((tgt, flip))
    return maps


def _canonical_min(codes: np.ndarray, nbits: int, maps) -> np.ndarray:
    shifts = np.arange(nbits, dtype=np.uint64)
    bits = ((codes[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint64)
    canon = codes.copy()
    for tgt, flip in maps:
        b = bits if flip is None else bits ^ flip[None, :]
        vals = (b << tgt[None, :]).sum(axis=1)
        np.minimum(canon, vals, out=canon)
    return canon


def _lift_codes(codes: np.ndarray, src_pairs, dst_index) -> np.ndarray:
    """Re-embed parent codes into the (n+1)-vertex bit layout."""
    shifts = np.arange(len(src_pairs), dtype=np.uint64)
    bits = ((codes[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint64)
    tgt = np.array([dst_index[pq] for pq in src_pairs], dtype=np.uint64)
    return (bits << tgt[None, :]).sum(axis=1)


def _pattern_codes(positions: list[int]) -> np.ndarray:
    """All 2^len(positions) bit patterns placed at the given bit positions."""
    k = len(positions)
    pats = np.arange(1 << k, dtype=np.uint64)
    shifts = np.arange(k, dtype=np.uint64)
    bits = ((pats[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint64)
    tgt = np.array(positions, dtype=np.uint64)
    return (bits << tgt[None, :]).sum(axis=1)


@lru_cache(maxsize=None)
def digraph_class_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of all digraphs on n vertices up to isomorphism."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > DIGRAPH_CLASS_CAP:
        raise CapExceededError(f"digraph classes capped at n = {DIGRAPH_CLASS_CAP}")
    if n == 1:
        return (0,)
    parents = np.array(digraph_class_codes(n - 1), dtype=np.uint64)
    dst_index = {pq: k for k, pq in enumerate(ordered_pairs(n))}
    lifted = _lift_codes(parents, ordered_pairs(n - 1), dst_index)
    new = n - 1
    positions = [dst_index[(i, new)] for i in range(new)]
    positions += [dst_index[(new, i)] for i in range(new)]
    patterns = _pattern_codes(positions)
    candidates = (lifted[:, None] | patterns[None, :]).ravel()
    canon = _canonical_min(candidates, len(dst_index), _perm_maps_digraph(n))
    return tuple(sorted(set(canon.tolist())))


@lru_cache(maxsize=None)
def tournament_class_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of all tournaments on n vertices up to isomorphism."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > TOURNAMENT_CLASS_CAP:
        raise CapExceededError(
            f"tournament classes capped at n = {TOURNAMENT_CLASS_CAP}"
        )
    if n == 1:
        return (0,)
    parents = np.array(tournament_class_codes(n - 1), dtype=np.uint64)
    dst_index = {pq: k for k, pq in enumerate(unordered_pairs(n))}
    lifted = _lift_codes(parents, unordered_pairs(n - 1), dst_index)
    new = n - 1
    positions = [dst_index[(i, new)] for i in range(new)]
    patterns = _pattern_codes(positions)
    candidates = (lifted[:, None] | patterns[None, :]).ravel()
    canon = _canonical_min(candidates, len(dst_index), _perm_maps_pairs(n, True))
    return tuple(sorted(set(canon.tolist())))


@lru_cache(maxsize=None)
def graph_class_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of all simple graphs on n vertices up to isomorphism."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > GRAPH_CLASS_CAP:
        raise CapExceededError(f"graph classes capped at n = {GRAPH_CLASS_CAP}")
    if n == 1:
        return (0,)
    parents = np.array(graph_class_codes(n - 1), dtype=np.uint64)
    dst_index = {pq: k for k, pq in enumerate(unordered_pairs(n))}
    lifted = _lift_codes(parents, unordered_pairs(n - 1), dst_index)
    new = n - 1
    positions = [dst_index[(i, new)] for i in range(new)]
    patterns = _pattern_codes(positions)
    candidates = (lifted[:, None] | patterns[None, :]).ravel()
    canon = _canonical_min(candidates, len(dst_index), _perm_maps_pairs(n, False))
    return tuple(sorted(set(canon.tolist())))


def digraph_classes(n: int) -> list[Digraph]:
    return [digraph_from_code(n, c) for c in digraph_class_codes(n)]


def tournament_classes(n: int) -> list[Digraph]:
    return [tournament_from_code(n, c) for c in tournament_class_codes(n)]


def graph_classes(n: int) -> list[Graph]:
    return [graph_from_code(n, c) for c in graph_class_codes(n)]
