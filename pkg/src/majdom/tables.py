"""Formula-versus-solver comparison rows over the documented family ranges."""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilySpec
from .orientations import orientation_bounds
from .solver import (
    DOM_PLUS,
    DOM_PLUS_MAX,
    GAMMA_MAJ,
    GAMMA_MAJ_OUT,
    closed_form,
    gamma_maj_out_oracle,
    gamma_maj_undirected,
)

# formula validity is bounded by what the brute-force side can confirm
GAMMA_RANGE_MAX = 14
ORIENTATION_RANGE_MAX = 9
BIPARTITE_SUM_MAX = 7


def closed_form_cases(max_n: int) -> list[tuple[FamilySpec, str]]:
    """Every (family, quantity) pair with a known formula, clamped to max_n
    and to the per-quantity verification ranges."""
    g = min(max_n, GAMMA_RANGE_MAX)
    o = min(max_n, ORIENTATION_RANGE_MAX)
    cases: list[tuple[FamilySpec, str]] = []
    for n in range(1, g + 1):
        cases.append((FamilySpec("directed_path", (n,)), GAMMA_MAJ_OUT))
    for n in range(3, g + 1):
        cases.append((FamilySpec("directed_cycle", (n,)), GAMMA_MAJ_OUT))
    for n in range(1, g + 1):
        cases.append((FamilySpec("transitive_tournament", (n,)), GAMMA_MAJ_OUT))

    for n in range(3, g + 1):
        cases.append((FamilySpec("path_graph", (n,)), GAMMA_MAJ))
        cases.append((FamilySpec("cycle_graph", (n,)), GAMMA_MAJ))
    for n in range(4, g + 1):
        cases.append((FamilySpec("star_graph", (n,)), GAMMA_MAJ))

    for n in range(2, o + 1):
        cases.append((FamilySpec("path_graph", (n,)), DOM_PLUS))
        cases.append((FamilySpec("path_graph", (n,)), DOM_PLUS_MAX))
    for n in range(3, o + 1):
        cases.append((FamilySpec("cycle_graph", (n,)), DOM_PLUS))
        cases.append((FamilySpec("cycle_graph", (n,)), DOM_PLUS_MAX))
    for n in range(4, o + 1):
        cases.append((FamilySpec("star_graph", (n,)), DOM_PLUS_MAX))
    for n in range(5, o + 1):
        cases.append((FamilySpec("star_graph", (n,)), DOM_PLUS))
    for n in range(4, o + 1):
        for a in range(1, n - 2):
            b = n - 2 - a
            if a > b:
                continue
            cases.append((FamilySpec("double_star_graph", (a, b)), DOM_PLUS_MAX))
            if n >= 5:
                cases.append((FamilySpec("double_star_graph", (a, b)), DOM_PLUS))
    cap = min(max_n, BIPARTITE_SUM_MAX)
    for r in range(2, cap + 1):
        for s in range(r, cap - r + 1):
            cases.append((FamilySpec("complete_bipartite_graph", (r, s)), DOM_PLUS))
    return cases


def computed_value(spec: FamilySpec, quantity: str) -> int:
    built = spec.build()
    if quantity == GAMMA_MAJ_OUT:
        return gamma_maj_out_oracle(built).optimum
    if quantity == GAMMA_MAJ:
        return gamma_maj_undirected(built).optimum
    if quantity == DOM_PLUS:
        return orientation_bounds(built).dom_plus
    if quantity == DOM_PLUS_MAX:
        return orientation_bounds(built).DOM_plus
    raise ValueError(f"unknown quantity {quantity!r}")


@dataclass(frozen=True)
class TableRow:
    family: str
    quantity: str
    predicted: int
    computed: int

    @property
    def match(self) -> bool:
        return self.predicted == self.computed


def table_rows(max_n: int) -> list[TableRow]:
    rows = []
    for spec, quantity in closed_form_cases(max_n):
        predicted = closed_form(spec, quantity).predicted
        rows.append(TableRow(spec.label(), quantity, predicted, computed_value(spec, quantity)))
    return rows
