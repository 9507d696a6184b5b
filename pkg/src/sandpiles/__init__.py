"""Exact chip-firing dynamics, odometers, and immutability classification
on finite multigraphs."""

from .classify import (
    Verdict,
    banana_test,
    classify,
    complete_congruence_test,
    cone_criterion,
    construct_mutable,
    in_laplacian_image,
    integrality_test,
    is_uniformly_large,
    tree_fast_path,
    wheel_congruence_test,
    wheel_pow2_test,
)
from .closedform import (
    cayley_count,
    complete_inverse,
    cone_path_tree_count,
    fib,
    fib_lucas_identity_check,
    lucas,
    lucas_congruences_check,
    path_inverse,
    wheel_inverse,
    wheel_tree_count,
)
from .dynamics import (
    StabilizationResult,
    is_stable,
    least_integer_solution,
    stabilize,
    topple,
)
from .forests import (
    count_constrained_forests,
    count_spanning_trees,
    count_two_forests,
    sign_of_minor,
    spanning_forests,
)
from .graph import (
    Multigraph,
    banana,
    complete,
    cone,
    cycle,
    from_edge_list,
    graph_from_json,
    graph_to_json,
    is_cone_of_regular,
    path,
    validate_sandpile,
    wheel,
)
from .linalg import (
    det_exact,
    incidence,
    inverse_exact,
    laplacian,
    minor_matrix,
    reduced_laplacian,
    solve_exact,
)
from .rodometer import (
    OdometerReport,
    group_odometer,
    integer_odometer,
    real_odometer,
    real_odometer_by_support_search,
    uniformly_large_odometer,
)

__all__ = [name for name in dir() if not name.startswith("_")]
