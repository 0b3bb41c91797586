"""Exact optimisation: majority out-domination, its undirected analogue, and
minimum in-dominating sets, plus the closed-form predictions they are checked
against.

The oracle enumerates all 2^n sign vectors (mask bit i = vertex i positive).
The branch-and-bound solver must agree with it whenever both run; it exists so
instances beyond the enumeration cap stay solvable.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .core import (
    CapExceededError,
    Digraph,
    Graph,
    SignFunction,
    SolveResult,
    closed_neighborhood_masks,
    closed_out_masks,
)
from .families import FamilySpec

ORACLE_CAP = 26
BB_CAP = 40
_NUMPY_MIN_N = 8
_CHUNK_BITS = 20


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _rev_bits(mask: int, n: int) -> int:
    r = 0
    for i in range(n):
        r = (r << 1) | (mask >> i & 1)
    return r


def _solve_masks_python(cmasks: list[int], n: int) -> tuple[int, int]:
    """Min weight over sign masks whose satisfied count reaches the majority.

    Returns (optimum, witness mask); the witness is the optimum whose sorted
    positives list is lexicographically smallest, i.e. the one maximising the
    bit-reversed encoding.
    """
    sizes = [cm.bit_count() for cm in cmasks]
    best_w = n + 1
    best_rev = -1
    best_mask = 0
    for s in range(1 << n):
        sat = 0
        for cm, size in zip(cmasks, sizes):
            if 2 * (cm & s).bit_count() > size:
                sat += 1
        if 2 * sat >= n:
            w = 2 * s.bit_count() - n
            if w < best_w:
                best_w, best_rev, best_mask = w, _rev_bits(s, n), s
            elif w == best_w:
                r = _rev_bits(s, n)
                if r > best_rev:
                    best_rev, best_mask = r, s
    return best_w, best_mask


def _scan_chunk_numpy(cmasks, thr, n, lo, hi):
    import numpy as np

    masks = np.arange(lo, hi, dtype=np.uint32)
    sat = np.zeros(hi - lo, dtype=np.int8)
    for cm, t in zip(cmasks, thr):
        sat += np.bitwise_count(masks & np.uint32(cm)) >= t
    w = 2 * np.bitwise_count(masks).astype(np.int16) - n
    w[2 * sat.astype(np.int16) < n] = 32767
    mn = int(w.min())
    if mn == 32767:
        return None
    cand = masks[w == mn]
    rev = np.zeros(len(cand), dtype=np.uint32)
    for i in range(n):
        rev = (rev << np.uint32(1)) | ((cand >> np.uint32(i)) & np.uint32(1))
    j = int(np.argmax(rev))
    # min on (weight, -rev): smallest weight, then lexicographically
    # smallest positives list
    return mn, -int(rev[j]), int(cand[j])


def _solve_masks_numpy(cmasks: list[int], n: int, threads: int = 1) -> tuple[int, int]:
    thr = [(cm.bit_count() + 2) // 2 for cm in cmasks]  # popcount >= thr <=> sum >= 1
    total = 1 << n
    chunk = 1 << _CHUNK_BITS
    ranges = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(lambda r: _scan_chunk_numpy(cmasks, thr, n, *r), ranges)
            )
    else:
        results = [_scan_chunk_numpy(cmasks, thr, n, lo, hi) for lo, hi in ranges]
    best = min(r for r in results if r is not None)
    return best[0], best[2]


def _solve_masks(cmasks: list[int], n: int, threads: int = 1) -> tuple[int, int]:
    if n >= _NUMPY_MIN_N:
        return _solve_masks_numpy(cmasks, n, threads)
    return _solve_masks_python(cmasks, n)


def _all_optimal_masks(cmasks: list[int], n: int) -> tuple[int, list[int]]:
    """Optimum plus every optimal mask, in ascending mask order.  Small n only."""
    if n > 16:
        raise CapExceededError("optimal-set enumeration capped at n = 16")
    sizes = [cm.bit_count() for cm in cmasks]
    best_w = n + 1
    best: list[int] = []
    for s in range(1 << n):
        sat = 0
        for cm, size in zip(cmasks, sizes):
            if 2 * (cm & s).bit_count() > size:
                sat += 1
        if 2 * sat >= n:
            w = 2 * s.bit_count() - n
            if w < best_w:
                best_w, best = w, [s]
            elif w == best_w:
                best.append(s)
    return best_w, best


def _check_solvable(n: int) -> None:
    if n < 1:
        raise ValueError("solvers need at least one vertex")
    if n > ORACLE_CAP:
        raise CapExceededError(f"oracle enumerates 2^n sign vectors; n <= {ORACLE_CAP}")


def gamma_maj_out_oracle(D: Digraph, threads: int = 1) -> SolveResult:
    """Majority out-domination number by full enumeration (n <= 26)."""
    _check_solvable(D.n)
    w, mask = _solve_masks(closed_out_masks(D), D.n, threads)
    return SolveResult(w, SignFunction.from_mask(D.n, mask), 1 << D.n, "oracle")


def gamma_maj_undirected(G: Graph, threads: int = 1) -> SolveResult:
    """Majority domination number of an undirected graph (n <= 26)."""
    _check_solvable(G.n)
    w, mask = _solve_masks(closed_neighborhood_masks(G), G.n, threads)
    return SolveResult(w, SignFunction.from_mask(G.n, mask), 1 << G.n, "oracle")


def gamma_maj_out_bb(D: Digraph) -> SolveResult:
    """Majority out-domination number by pruned branch and bound (n <= 40).

    Branches on vertex signs in descending total-degree order.  A vertex is
    decided unsatisfiable once its whole closed out-neighbourhood is assigned
    with a non-positive sum; a branch dies when the undecided vertices cannot
    reach the majority, or when its forced positives already match the
    incumbent weight.
    """
    n = D.n
    if n < 1:
        raise ValueError("solvers need at least one vertex")
    if n > BB_CAP:
        raise CapExceededError(f"branch and bound capped at n = {BB_CAP}")
    order = sorted(range(n), key=lambda v: (-(D.out_degree(v) + D.in_degree(v)), v))
    in_closed = [D.in_neighbors(u) + [u] for u in range(n)]
    rem = [D.out_degree(v) + 1 for v in range(n)]
    cur = [0] * n
    val = [0] * n
    need = (n + 1) // 2
    best_w = n  # the all-ones function is always a MODF
    best_mask = (1 << n) - 1
    unsat = 0
    pos = 0
    nodes = 0

    def dfs(i: int) -> None:
        nonlocal best_w, best_mask, unsat, pos, nodes
        nodes += 1
        if n - unsat < need:
            return
        if 2 * pos - n >= best_w:
            return
        if i == n:
            # fully decided; both prunes passed, so this is a strictly
            # better MODF
            best_w = 2 * pos - n
            best_mask = sum(1 << v for v in range(n) if val[v] > 0)
            return
        u = order[i]
        for s in (-1, 1):
            val[u] = s
            if s > 0:
                pos += 1
            newly_unsat = 0
            for w in in_closed[u]:
                cur[w] += s
                rem[w] -= 1
                if rem[w] == 0 and cur[w] <= 0:
                    newly_unsat += 1
            unsat += newly_unsat
            dfs(i + 1)
            unsat -= newly_unsat
            for w in in_closed[u]:
                cur[w] -= s
                rem[w] += 1
            if s > 0:
                pos -= 1
            val[u] = 0

    dfs(0)
    return SolveResult(
        best_w, SignFunction.from_mask(n, best_mask), nodes, "branch-and-bound"
    )


def solve_gamma_maj_out(D: Digraph, method: str = "auto", threads: int = 1) -> SolveResult:
    if method == "oracle":
        return gamma_maj_out_oracle(D, threads)
    if method == "bb":
        return gamma_maj_out_bb(D)
    if method == "auto":
        if D.n <= ORACLE_CAP:
            return gamma_maj_out_oracle(D, threads)
        return gamma_maj_out_bb(D)
    raise ValueError(f"unknown method {method!r}")


def modf_decision(D: Digraph, k: int, method: str = "auto") -> bool:
    """Is there a majority out-dominating function of weight k or less?"""
    return solve_gamma_maj_out(D, method).optimum <= k


@dataclass(frozen=True)
class InDominationResult:
    """Minimum in-dominating set cardinality plus the lexicographically
    smallest witness set."""

    optimum: int
    witness: tuple[int, ...]
    nodes_explored: int
    method: str = "oracle"


def gamma_minus(D: Digraph) -> InDominationResult:
    """Minimum cardinality of an in-dominating (absorbent) set, by subset search."""
    n = D.n
    _check_solvable(n)
    out = [D.out_mask(v) for v in range(n)]
    max_in = max(D.in_degree(v) for v in range(n))
    # every member of S absorbs itself plus its in-neighbours
    lower = max(1, _ceil_div(n, max_in + 1))
    nodes = 0
    for k in range(lower, n + 1):
        for S in combinations(range(n), k):
            nodes += 1
            smask = 0
            for v in S:
                smask |= 1 << v
            if all(smask >> v & 1 or out[v] & smask for v in range(n)):
                return InDominationResult(k, S, nodes)
    raise AssertionError("the full vertex set is always in-dominating")


def check_gamma_minus_bound(D: Digraph) -> bool:
    """Cross-multiplied form of gamma_minus <= (d+1)/(2d+1) * n on an
    out-regular digraph with common out-degree d (d = 0 included)."""
    if D.n < 1:
        raise ValueError("needs at least one vertex")
    degrees = {D.out_degree(v) for v in range(D.n)}
    if len(degrees) != 1:
        raise ValueError("digraph is not out-regular")
    d = degrees.pop()
    return gamma_minus(D).optimum * (2 * d + 1) <= (d + 1) * D.n


# --- seeded random models for the property suites ---


def random_digraph(n: int, p: float = 0.5, rng: random.Random | None = None) -> Digraph:
    """Each ordered pair (u, v), u != v, is an arc independently with probability p."""
    rng = rng or random.Random()
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return Digraph(n, arcs)


def random_out_regular_digraph(n: int, d: int, rng: random.Random | None = None) -> Digraph:
    """Every vertex gets d out-neighbours sampled uniformly without replacement."""
    if not 0 <= d <= n - 1:
        raise ValueError("need 0 <= d <= n - 1")
    rng = rng or random.Random()
    arcs = []
    for u in range(n):
        others = [v for v in range(n) if v != u]
        arcs += [(u, v) for v in rng.sample(others, d)]
    return Digraph(n, arcs)


def random_regular_graph(n: int, degree: int, rng: random.Random | None = None) -> Graph:
    """A uniform-ish random simple regular graph via the pairing model with
    rejection; small instances only."""
    if n * degree % 2 or degree >= n:
        raise ValueError("need n*degree even and degree < n")
    rng = rng or random.Random()
    for _ in range(10000):
        stubs = [v for v in range(n) for _ in range(degree)]
        rng.shuffle(stubs)
        seen = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in seen:
                ok = False
                break
            seen.add((min(u, v), max(u, v)))
        if ok:
            return Graph(n, sorted(seen))
    raise RuntimeError("pairing model failed to produce a simple graph")


def random_orientation(G: Graph, rng: random.Random | None = None) -> Digraph:
    rng = rng or random.Random()
    arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in G.edges()]
    return Digraph(G.n, arcs)


# --- closed-form predictions ---

GAMMA_MAJ_OUT = "gamma_maj_out"
GAMMA_MAJ = "gamma_maj"
DOM_PLUS = "dom_plus"
DOM_PLUS_MAX = "DOM_plus"


@dataclass(frozen=True)
class ClosedFormPrediction:
    family: FamilySpec
    quantity: str
    predicted: int
    formula_id: str


def _no_formula(spec: FamilySpec, quantity: str, why: str = "") -> ValueError:
    msg = f"no closed form for {quantity} of {spec.label()}"
    if why:
        msg += f" ({why})"
    return ValueError(msg)


def closed_form(spec: FamilySpec, quantity: str) -> ClosedFormPrediction:
    """Exact integer evaluation of the known formula for the given family and
    quantity; raises ValueError outside the formula's validity range."""
    kind, params = spec.kind, spec.params

    def done(value: int, formula_id: str) -> ClosedFormPrediction:
        return ClosedFormPrediction(spec, quantity, value, formula_id)

    if quantity == GAMMA_MAJ_OUT:
        if kind == "directed_cycle":
            n = params[0]
            if n >= 3:
                return done(2 if n % 2 == 0 else 3, "gamma_maj_out.directed_cycle")
        elif kind == "directed_path":
            n = params[0]
            if n >= 1:
                return done(0 if n % 2 == 0 else 1, "gamma_maj_out.directed_path")
        elif kind == "transitive_tournament":
            n = params[0]
            if n >= 1:
                return done(
                    -n + 2 * _ceil_div(n + 2, 4), "gamma_maj_out.transitive_tournament"
                )
        raise _no_formula(spec, quantity)

    if quantity == GAMMA_MAJ:
        if kind in ("path_graph", "cycle_graph"):
            n = params[0]
            if n >= 3:
                value = (
                    -2 * _ceil_div(n - 4, 6)
                    if n % 2 == 0
                    else 1 - 2 * _ceil_div(n - 3, 6)
                )
                return done(value, f"gamma_maj.{kind}")
        elif kind == "star_graph":
            n = params[0]
            if n >= 4:
                return done(1 if n % 2 == 0 else 2, "gamma_maj.star_graph")
        raise _no_formula(spec, quantity)

    if quantity == DOM_PLUS:
        if kind == "path_graph":
            n = params[0]
            if n >= 2:
                return done(-n + 2 * _ceil_div(n + 2, 4), "dom_plus.path_graph")
        elif kind == "cycle_graph":
            # the small-case values 1 (n=3) and 0 (n=4) coincide with the formula
            n = params[0]
            if n >= 3:
                return done(-n + 2 * _ceil_div(n + 2, 4), "dom_plus.cycle_graph")
        elif kind == "star_graph":
            n = params[0]
            if n >= 5:
                return done(-2 if n % 2 == 0 else -1, "dom_plus.star_graph")
        elif kind == "double_star_graph":
            a, b = params
            n = a + b + 2
            if n >= 13 and min(a, b) >= 2:  # no degree-2 vertex
                return done(-4 if n % 2 == 0 else -3, "dom_plus.double_star.no_deg2")
            if n >= 5:
                return done(-2 if n % 2 == 0 else -1, "dom_plus.double_star.small_or_deg2")
        elif kind == "complete_bipartite_graph":
            r, s = params
            if 2 <= r <= s:
                return done(4 - (r + s), "dom_plus.complete_bipartite")
        raise _no_formula(spec, quantity)

    if quantity == DOM_PLUS_MAX:
        if kind == "path_graph":
            n = params[0]
            if n >= 2:
                return done(0 if n % 2 == 0 else 1, "DOM_plus.path_graph")
        elif kind == "cycle_graph":
            n = params[0]
            if n >= 3:
                return done(2 if n % 2 == 0 else 3, "DOM_plus.cycle_graph")
        elif kind == "star_graph":
            n = params[0]
            if n >= 2:
                return done(0 if n % 2 == 0 else 1, "DOM_plus.star_graph")
        elif kind == "double_star_graph":
            a, b = params
            n = a + b + 2
            return done(0 if n % 2 == 0 else 1, "DOM_plus.double_star")
        raise _no_formula(spec, quantity)

    raise ValueError(f"unknown quantity {quantity!r}")
