"""The hardness gadget: translate an in-domination instance into a majority
out-domination decision, and verify the equivalence at desk scale.

Given an out-regular source digraph of order n and degree d (with 4d > n-2 and
1 <= k < n/2 + 1), the gadget is the disjoint union of a complete digraph T of
order n+2d, a copy of the source, and 2d isolated vertices, plus symmetric
arcs between a distinguished d-subset X of T and both other parts.  The source
has an in-dominating set of size at most k exactly when the gadget has a MODF
of weight at most 2k - 2n - 2d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    CapExceededError,
    Digraph,
    SignFunction,
    closed_out_masks,
    is_in_dominating,
    is_modf,
)
from .solver import ORACLE_CAP, gamma_maj_out_oracle, gamma_minus


def validate_instance(Dprime: Digraph, k: int) -> bool:
    """Is (Dprime, k) a legal reduction source?  Requires regular out-degree d
    with 4d > n - 2 and a positive k with 2k < n + 2 (integer forms)."""
    n = Dprime.n
    if n < 1:
        return False
    degrees = {Dprime.out_degree(v) for v in range(n)}
    if len(degrees) != 1:
        return False
    d = degrees.pop()
    return 4 * d > n - 2 and k >= 1 and 2 * k < n + 2


@dataclass(frozen=True)
class GadgetInstance:
    """The built gadget: part layout is T = [0, n+2d) with X = [0, d),
    the source copy on [n+2d, 2n+2d), and the arcless part on [2n+2d, 2n+4d)."""

    source: Digraph
    k: int
    d: int
    gadget: Digraph
    x_set: tuple[int, ...]
    weight_threshold: int
    part_map: tuple[str, ...]

    @property
    def n(self) -> int:
        return self.source.n

    def source_to_gadget(self, v: int) -> int:
        return self.source.n + 2 * self.d + v

    def gadget_to_source(self, v: int) -> int:
        n, d = self.source.n, self.d
        if not n + 2 * d <= v < 2 * n + 2 * d:
            raise ValueError(f"gadget vertex {v} is not in the source copy")
        return v - (n + 2 * d)

    def part_vertices(self, part: str) -> list[int]:
        return [v for v, p in enumerate(self.part_map) if p == part]


def build_gadget(Dprime: Digraph, k: int) -> GadgetInstance:
    if not validate_instance(Dprime, k):
        raise ValueError("instance fails the reduction constraints")
    n = Dprime.n
    d = Dprime.out_degree(0)
    t_size = n + 2 * d
    order = 2 * n + 4 * d
    copy_base = t_size
    second_base = t_size + n

    arcs: list[tuple[int, int]] = []
    # complete digraph on the first n + 2d vertices
    arcs += [(u, v) for u in range(t_size) for v in range(t_size) if u != v]
    # isomorphic copy of the source
    arcs += [(copy_base + u, copy_base + v) for u, v in Dprime.arcs()]
    # symmetric arcs from X to the arcless part and to the source copy
    for x in range(d):
        for w in range(second_base, second_base + 2 * d):
            arcs += [(x, w), (w, x)]
        for w in range(copy_base, copy_base + n):
            arcs += [(x, w), (w, x)]

    gadget = Digraph(order, arcs)
    expected_arcs = t_size * (t_size - 1) + Dprime.arc_count + 2 * d * (2 * d) + 2 * d * n
    assert gadget.arc_count == expected_arcs

    part_map = tuple(
        "T" if v < t_size else "Dprime" if v < second_base else "Dsecond"
        for v in range(order)
    )
    return GadgetInstance(
        source=Dprime,
        k=k,
        d=d,
        gadget=gadget,
        x_set=tuple(range(d)),
        weight_threshold=2 * k - 2 * n - 2 * d,
        part_map=part_map,
    )


def lift_in_dominating_to_modf(inst: GadgetInstance, S: Iterable[int]) -> SignFunction:
    """The sign function that is +1 exactly on X and on the copy of S; it is a
    MODF of the gadget of weight at most the threshold whenever S is an
    in-dominating set of the source with |S| <= k."""
    S = sorted(set(S))
    if len(S) > inst.k:
        raise ValueError(f"|S| = {len(S)} exceeds k = {inst.k}")
    if not is_in_dominating(inst.source, S):
        raise ValueError("S is not an in-dominating set of the source")
    positives = list(inst.x_set) + [inst.source_to_gadget(v) for v in S]
    return SignFunction(inst.gadget.n, positives)


def normalize_threshold_witness(inst: GadgetInstance, f: SignFunction) -> SignFunction:
    """The exchange pass: while some X vertex is negative, swap its sign with
    a positive vertex of the source copy.  Weight is preserved, no closed
    out-sum decreases, and afterwards X is entirely positive."""
    mask = f.mask
    copy_lo = inst.n + 2 * inst.d
    copy_hi = copy_lo + inst.n
    for u in inst.x_set:
        if mask >> u & 1:
            continue
        swap = next(
            (x for x in range(copy_lo, copy_hi) if mask >> x & 1), None
        )
        if swap is None:
            raise RuntimeError(
                "no positive source-copy vertex to exchange; "
                "f cannot be a threshold-achieving MODF"
            )
        mask ^= (1 << u) | (1 << swap)
    g = SignFunction.from_mask(f.n, mask)
    assert is_modf(inst.gadget, g) and g.weight == f.weight
    return g


def structural_checks(inst: GadgetInstance, f: SignFunction) -> dict[str, bool]:
    """The proof-step facts about a normalized threshold-achieving MODF:
    few positives, no satisfied vertex inside T, X positive, and the positive
    part of the source copy is a small in-dominating set."""
    masks = closed_out_masks(inst.gadget)
    t_size = inst.n + 2 * inst.d
    extracted = [
        inst.gadget_to_source(v)
        for v in inst.part_vertices("Dprime")
        if f.mask >> v & 1
    ]
    return {
        "positive_count_at_most_k_plus_d": f.mask.bit_count() <= inst.k + inst.d,
        "t_part_all_nonpositive": all(
            f.sum_over(masks[v]) <= 0 for v in range(t_size)
        ),
        "x_all_positive": all(f.mask >> x & 1 for x in inst.x_set),
        "extraction_in_dominating_of_size_k": (
            len(extracted) <= inst.k and is_in_dominating(inst.source, extracted)
        ),
    }


@dataclass(frozen=True)
class ReductionReport:
    """Both sides of the equivalence computed independently, plus certificates."""

    n: int
    d: int
    k: int
    weight_threshold: int
    gamma_minus_value: int
    in_domination_holds: bool  # gamma_minus <= k
    gadget_order: int
    gamma_gadget: int
    modf_holds: bool  # gamma_maj_out(gadget) <= threshold
    agree: bool
    in_domination_witness: tuple[int, ...]
    modf_witness: Optional[SignFunction]
    structural: Optional[dict[str, bool]]

    @property
    def structural_ok(self) -> bool:
        return self.structural is None or all(self.structural.values())


def equivalence_check(Dprime: Digraph, k: int) -> ReductionReport:
    """Brute-force both sides: subset search for in-domination on the source,
    sign-function search on the gadget, then compare the decisions."""
    inst = build_gadget(Dprime, k)
    if inst.gadget.n > ORACLE_CAP:
        raise CapExceededError(
            f"gadget order {inst.gadget.n} exceeds the oracle cap {ORACLE_CAP}"
        )
    indom = gamma_minus(Dprime)
    forward = indom.optimum <= k

    solved = gamma_maj_out_oracle(inst.gadget)
    backward = solved.optimum <= inst.weight_threshold

    witness = None
    structure = None
    if backward:
        witness = normalize_threshold_witness(inst, solved.witness)
        structure = structural_checks(inst, witness)

    return ReductionReport(
        n=Dprime.n,
        d=inst.d,
        k=k,
        weight_threshold=inst.weight_threshold,
        gamma_minus_value=indom.optimum,
        in_domination_holds=forward,
        gadget_order=inst.gadget.n,
        gamma_gadget=solved.optimum,
        modf_holds=backward,
        agree=forward == backward,
        in_domination_witness=indom.witness,
        modf_witness=witness,
        structural=structure,
    )
