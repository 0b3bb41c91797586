"""Evidence scanners for the two open questions: whether digraphs with a
regular underlying graph always admit an in-degree-monotone optimal function,
and the parity prediction for DOM_plus of complete bipartite graphs.

Scanners report evidence, never proofs.  A counterexample is only reported
after it re-verifies through an independent evaluation path (branch and bound
for the optimum, plain predicate loops for the certificates); failure to
re-verify is an internal error, not a finding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import CapExceededError, Digraph, SignFunction, closed_out_masks, is_modf
from .families import complete_bipartite_graph
from .orientations import enumerate_orientations, orientation_bounds
from .smallgraphs import TOURNAMENT_CLASS_CAP, tournament_classes
from .solver import (
    _all_optimal_masks,
    gamma_maj_out_bb,
    random_orientation,
    random_regular_graph,
)

NO_COUNTEREXAMPLE = "no_counterexample"
COUNTEREXAMPLE_FOUND = "counterexample_found"


@dataclass(frozen=True)
class ConjectureReport:
    conjecture_id: str
    instances_checked: int
    counterexample: Optional[dict]
    status: str


def _monotone_witness_exists(D: Digraph, optimal_masks: list[int]) -> bool:
    """Does some optimal mask put its positives above its negatives in the
    in-degree order?  Empty sides make the condition vacuous."""
    indeg = [D.in_degree(v) for v in range(D.n)]
    for mask in optimal_masks:
        neg_max = max(
            (indeg[v] for v in range(D.n) if not mask >> v & 1), default=None
        )
        pos_min = min((indeg[v] for v in range(D.n) if mask >> v & 1), default=None)
        if neg_max is None or pos_min is None or neg_max <= pos_min:
            return True
    return False


def _reverify_regular_counterexample(D: Digraph, optimum: int) -> None:
    """Independent path: optimum via branch and bound, optima via the public
    predicate, then the monotonicity check again."""
    if gamma_maj_out_bb(D).optimum != optimum:
        raise RuntimeError("counterexample failed re-verification: optimum mismatch")
    optima = [
        mask
        for mask in range(1 << D.n)
        if is_modf(D, SignFunction.from_mask(D.n, mask))
        and 2 * mask.bit_count() - D.n == optimum
    ]
    if _monotone_witness_exists(D, optima):
        raise RuntimeError(
            "counterexample failed re-verification: a monotone optimum exists"
        )


def _underlying_degree_constant(D: Digraph) -> bool:
    return len({D.in_degree(v) + D.out_degree(v) for v in range(D.n)}) <= 1


def scan_conjecture_regular(
    max_n: int,
    source: str = "all_tournaments",
    seed: int | None = None,
    instances: int = 50,
) -> ConjectureReport:
    """Scan digraphs with constant total degree for one that has NO optimal
    function whose positives sit above its negatives in in-degree order."""
    candidates: list[Digraph] = []
    if source == "all_tournaments":
        if max_n > TOURNAMENT_CLASS_CAP:
            raise CapExceededError(
                f"exhaustive tournament scan capped at n = {TOURNAMENT_CLASS_CAP}"
            )
        for n in range(1, max_n + 1):
            candidates.extend(tournament_classes(n))
    elif source == "random_regular_underlying":
        rng = random.Random(seed)
        while len(candidates) < instances:
            n = rng.randrange(3, max_n + 1)
            degree = rng.randrange(1, n)
            if n * degree % 2:
                continue
            candidates.append(random_orientation(random_regular_graph(n, degree, rng), rng))
    else:
        raise ValueError(f"unknown source {source!r}")

    checked = 0
    for D in candidates:
        assert _underlying_degree_constant(D)
        optimum, masks = _all_optimal_masks(closed_out_masks(D), D.n)
        checked += 1
        if not _monotone_witness_exists(D, masks):
            _reverify_regular_counterexample(D, optimum)
            return ConjectureReport(
                conjecture_id="regular_indegree_monotone",
                instances_checked=checked,
                counterexample={
                    "arcs": D.arcs(),
                    "n": D.n,
                    "optimum": optimum,
                    "optimal_positive_sets": [
                        sorted(SignFunction.from_mask(D.n, m).positives) for m in masks
                    ],
                },
                status=COUNTEREXAMPLE_FOUND,
            )
    return ConjectureReport(
        "regular_indegree_monotone", checked, None, NO_COUNTEREXAMPLE
    )


def _reverify_bipartite_counterexample(r: int, s: int, computed: int) -> None:
    G = complete_bipartite_graph(r, s)
    recomputed = max(
        gamma_maj_out_bb(D).optimum for D in enumerate_orientations(G)
    )
    if recomputed != computed:
        raise RuntimeError("counterexample failed re-verification: DOM_plus mismatch")


def scan_conjecture_bipartite(max_rs: int, max_product: int = 16) -> ConjectureReport:
    """Compare DOM_plus(K_{r,s}) from full orientation enumeration against the
    parity prediction 2 (r+s even) / 3 (r+s odd), for 2 <= r <= s <= max_rs
    with r*s <= max_product."""
    if max_product > 16:
        raise CapExceededError("bipartite scan capped at r*s <= 16")
    checked = 0
    for r in range(2, max_rs + 1):
        for s in range(r, max_rs + 1):
            if r * s > max_product:
                continue
            predicted = 2 if (r + s) % 2 == 0 else 3
            bounds = orientation_bounds(complete_bipartite_graph(r, s))
            checked += 1
            if bounds.DOM_plus != predicted:
                _reverify_bipartite_counterexample(r, s, bounds.DOM_plus)
                return ConjectureReport(
                    conjecture_id="bipartite_DOM",
                    instances_checked=checked,
                    counterexample={
                        "r": r,
                        "s": s,
                        "predicted": predicted,
                        "computed": bounds.DOM_plus,
                        "witness_orientation_arcs": bounds.max_orientation.arcs(),
                    },
                    status=COUNTEREXAMPLE_FOUND,
                )
    return ConjectureReport("bipartite_DOM", checked, None, NO_COUNTEREXAMPLE)
