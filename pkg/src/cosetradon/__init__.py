"""Exact linear-algebraic verification of Radon transforms on coset spaces
of finite groups: quasi-invariant measures, invariant function spaces, the
nested and two-subgroup transforms with their duals and inverses, and the
transport isomorphisms between quotients by conjugate subgroups."""

from .errors import (
    CosetRadonError,
    PreconditionError,
    SpaceMismatchError,
    ValidationError,
)
from .groups import (
    CosetSpace,
    FiniteGroup,
    Subgroup,
    all_subgroups,
    build_group,
    conjugate_subgroup,
    coset_space,
    cyclic_group,
    dihedral_group,
    direct_product,
    find_conjugator,
    from_table,
    full_subgroup,
    generated_subgroup,
    intersect_subgroups,
    is_subgroup_of,
    join_subgroups,
    quaternion_group,
    refine_projection,
    subgroup,
    subquotient_space,
    symmetric_group,
    trivial_subgroup,
)
from .measures import (
    HaarMeasure,
    QuotientMeasure,
    RhoFunction,
    constant_rho,
    haar_measure,
    invariant_measure,
    measure_from_rho,
    modular_function,
    quotient_integral_residual,
    quotient_measure,
    radon_nikodym_ratio,
    rho_from_coset_weights,
    rho_function,
)
from .spaces import (
    GroupFunction,
    InvariantSubspace,
    QuotientFunction,
    convolve,
    coset_sum,
    descend,
    group_delta,
    group_function,
    invariant_subspace,
    is_member,
    l1_norm_group,
    l1_norm_quotient,
    project_to_subspace,
    pullback_through,
    pullback_to_group,
    quotient_delta,
    quotient_function,
    right_invariant_basis,
    subgroup_indicator,
    subspaces_equal,
    weighted_coset_sum,
)
from .radon import (
    OperatorMatrix,
    SpaceRef,
    compose,
    coset_sum_matrix,
    descent_matrix,
    fiber_measure,
    invert_matrix,
    kernel_basis,
    matrix_into_subspace,
    matrix_of,
    matrix_on_basis,
    matrix_on_subspaces,
    matrix_rank,
    pullback_matrix,
    radon_dual_general,
    radon_dual_general_matrix,
    radon_dual_nested,
    radon_dual_nested_matrix,
    radon_general,
    radon_general_matrix,
    radon_nested,
    radon_nested_matrix,
    reconstruct,
    weighted_coset_sum_matrix,
)
from .transport import (
    ConjugacyWitness,
    conjugacy_witness,
    coset_map,
    coset_map_inverse,
    transport_group_function,
    transport_group_matrix,
    transport_quotient_function,
    transport_quotient_matrix,
)
from .complex_circle import (
    RadialFunction,
    default_grid,
    quarter_turn_average,
    symmetrized_sample,
    tent_profile,
    verify_reconstruction,
)
from .suites import FAMILIES, SuiteConfig, run_suite

__version__ = "0.1.0"
