"""Exact computation of majority out-domination in digraphs: brute-force and
branch-and-bound solvers, family generators, orientation sweeps, perturbation
checks, and the in-domination hardness gadget."""

from .core import (
    CapExceededError,
    Digraph,
    Graph,
    SignFunction,
    SolveResult,
    closed_out_sum,
    is_in_dominating,
    is_majority_dominating,
    is_minimal_modf,
    is_modf,
    minimality_necessary_condition,
    reverse_digraph,
    satisfied_set,
)
from .families import (
    FamilySpec,
    complete_bipartite_graph,
    complete_digraph,
    cycle_graph,
    directed_cycle,
    directed_path,
    double_star_graph,
    empty_digraph,
    figure1,
    figure2,
    oriented_star,
    path_graph,
    star_graph,
    transitive_tournament,
)
from .graphio import ParseError, dumps_digraph, dumps_graph, parse_digraph, parse_graph, to_dot
from .orientations import (
    OrientationBounds,
    compare_with_gamma_maj,
    enumerate_orientations,
    orientation_bounds,
)
from .reduction import (
    GadgetInstance,
    build_gadget,
    equivalence_check,
    lift_in_dominating_to_modf,
    validate_instance,
)
from .solver import (
    ClosedFormPrediction,
    InDominationResult,
    check_gamma_minus_bound,
    closed_form,
    gamma_maj_out_bb,
    gamma_maj_out_oracle,
    gamma_maj_undirected,
    gamma_minus,
    modf_decision,
    random_digraph,
    solve_gamma_maj_out,
)
from .transforms import (
    delete_arc,
    delete_vertex,
    orientation_from_majority_function,
    reverse_arc,
)

__version__ = "0.1.0"
