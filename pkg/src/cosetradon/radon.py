"""Radon transforms between coset spaces of a finite group.

The nested transform averages a function on G/L over the fibers of the
refinement map G/L -> G/H (L <= H); the general transform does the same for
an arbitrary pair of subgroups H, K through their intersection.  Both come
with dual (pullback-type) operators, exact matrices, kernels, and the
reconstruction map that inverts the transform on the right-invariant
subspace.

Fiber measures default to the normalized invariant measure on H/L, the
convention under which transform-then-dual is the identity; the counting
alternative scales every operator by the fiber size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import linalg
from .errors import SpaceMismatchError, ValidationError
from .groups import (
    CosetSpace,
    FiniteGroup,
    Subgroup,
    coset_space,
    intersect_subgroups,
    realize_subgroup,
    subquotient_space,
)
from .measures import QuotientMeasure, RhoFunction, constant_rho, invariant_measure
from .spaces import (
    GroupFunction,
    InvariantSubspace,
    QuotientFunction,
    coset_sum,
    group_delta,
    pullback_through,
    pullback_to_group,
    quotient_delta,
    right_invariant_basis,
    weighted_coset_sum,
)


@dataclass(frozen=True)
class SpaceRef:
    """Identifier and dimension of a function space, for matrix bookkeeping."""

    label: str
    dim: int


@dataclass(frozen=True)
class OperatorMatrix:
    """Exact matrix of a linear operator, rows by codomain, columns by domain."""

    domain: SpaceRef
    codomain: SpaceRef
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.codomain.dim:
            raise ValidationError(
                f"matrix has {len(self.entries)} rows, codomain dimension is "
                f"{self.codomain.dim}"
            )
        for row in self.entries:
            if len(row) != self.domain.dim:
                raise ValidationError(
                    f"matrix row width {len(row)} differs from domain dimension "
                    f"{self.domain.dim}"
                )

    def apply(self, values) -> tuple[Fraction, ...]:
        return linalg.apply(self.entries, tuple(values))

    def is_identity(self) -> bool:
        return (
            self.domain.dim == self.codomain.dim
            and self.entries == linalg.identity_matrix(self.domain.dim)
        )


def compose(outer: OperatorMatrix, inner: OperatorMatrix) -> OperatorMatrix:
    if outer.domain.dim != inner.codomain.dim:
        raise SpaceMismatchError(
            f"cannot compose: outer domain {outer.domain.label} has dimension "
            f"{outer.domain.dim}, inner codomain {inner.codomain.label} has "
            f"dimension {inner.codomain.dim}"
        )
    return OperatorMatrix(
        domain=inner.domain,
        codomain=outer.codomain,
        entries=linalg.multiply(outer.entries, inner.entries),
    )


def matrix_rank(matrix: OperatorMatrix) -> int:
    return linalg.rank(matrix.entries)


def kernel_basis(matrix: OperatorMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """Exact nullspace basis, one vector per free column of the echelon form."""
    return linalg.nullspace(matrix.entries)


def invert_matrix(matrix: OperatorMatrix) -> Optional[OperatorMatrix]:
    """Exact inverse with domain and codomain swapped, or None when singular."""
    if matrix.domain.dim != matrix.codomain.dim:
        return None
    inverse = linalg.invert(matrix.entries)
    if inverse is None:
        return None
    return OperatorMatrix(
        domain=matrix.codomain, codomain=matrix.domain, entries=inverse
    )


def group_space_ref(group: FiniteGroup) -> SpaceRef:
    return SpaceRef(label=f"C({group.name})", dim=group.order)


def quotient_space_ref(space: CosetSpace) -> SpaceRef:
    return SpaceRef(label=f"C({space.label()})", dim=space.index)


def subspace_ref(subspace: InvariantSubspace) -> SpaceRef:
    return SpaceRef(
        label=f"C({subspace.ambient.label()}:{subspace.stabilizer.label()})",
        dim=subspace.dimension,
    )


def fiber_measure(
    outer: Subgroup, inner: Subgroup, convention: str = "normalized"
) -> QuotientMeasure:
    """The invariant measure on H/L used to weight fiber integrals."""
    return invariant_measure(subquotient_space(outer, inner), convention)


def _fiber_data(
    outer: Subgroup,
    inner: Subgroup,
    eta: Optional[QuotientMeasure],
    convention: str,
) -> tuple[tuple[int, ...], tuple[Fraction, ...], Optional[Fraction]]:
    """Parent-element representatives of H/L, their measure weights, and the
    common weight when the measure is uniform (always, for invariant ones)."""
    space = subquotient_space(outer, inner)
    if eta is None:
        eta = invariant_measure(space, convention)
    else:
        if eta.space != space:
            raise SpaceMismatchError(
                f"fiber measure lives on {eta.space.label()}, expected "
                f"{space.label()}"
            )
        if not eta.is_invariant():
            raise ValidationError("fiber measure must be invariant (constant weights)")
    embed = realize_subgroup(outer).embed
    reps = tuple(embed[r] for r in space.reps)
    weights = eta.weights
    uniform = weights[0] if len(set(weights)) == 1 else None
    return reps, weights, uniform


def _fiber_sum(
    values: tuple[Fraction, ...],
    coset_of: tuple[int, ...],
    row: tuple[int, ...],
    reps: tuple[int, ...],
    weights: tuple[Fraction, ...],
    uniform: Optional[Fraction],
) -> Fraction:
    """One fiber integral; a uniform weight factors out of the sum."""
    if uniform is not None:
        total = Fraction(0)
        for h in reps:
            value = values[coset_of[row[h]]]
            if value:
                total += value
        return total * uniform
    return sum(
        (values[coset_of[row[h]]] * w for h, w in zip(reps, weights)), Fraction(0)
    )


def radon_nested(
    f: QuotientFunction,
    coarse: Subgroup,
    eta: Optional[QuotientMeasure] = None,
    convention: str = "normalized",
) -> QuotientFunction:
    """Fiber integral of f along G/L -> G/H for nested subgroups L <= H.

    With the default normalized measure this averages f over each fiber of
    the refinement map.  When L is trivial (G/L identified with C(G)) the
    counting variant coincides with the coset-sum projection.
    """
    group = f.space.parent
    if coarse.parent is not group:
        raise SpaceMismatchError("subgroup belongs to a different group")
    fine = f.space.subgroup
    reps, weights, uniform = _fiber_data(coarse, fine, eta, convention)
    target = coset_space(group, coarse)
    coset_of = f.space.coset_of
    values = tuple(
        _fiber_sum(f.values, coset_of, group.table[x], reps, weights, uniform)
        for x in target.reps
    )
    return QuotientFunction(target, values)


def radon_nested_evaluator(
    group: FiniteGroup,
    fine: Subgroup,
    coarse: Subgroup,
    convention: str = "normalized",
) -> Callable[[tuple[Fraction, ...]], tuple[Fraction, ...]]:
    """Bulk form of radon_nested on raw value tuples, for tight loops.

    Resolves the fiber data and target space once; the returned function maps
    values on G/L to values on G/H exactly as radon_nested does.
    """
    reps, weights, uniform = _fiber_data(coarse, fine, None, convention)
    fine_space = coset_space(group, fine)
    target = coset_space(group, coarse)
    coset_of = fine_space.coset_of
    table = group.table
    target_reps = target.reps

    def run(values: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        return tuple(
            _fiber_sum(values, coset_of, table[x], reps, weights, uniform)
            for x in target_reps
        )

    return run


def radon_dual_nested(phi: QuotientFunction, fine: Subgroup) -> QuotientFunction:
    """The dual transform C(G/H) -> C(G/L): composition with the refinement map.

    The measure on the single-point space L/L is normalized to mass one, which
    collapses the defining integral to a pullback.
    """
    return pullback_through(phi, coset_space(phi.space.parent, fine))


def reconstruct(phi: QuotientFunction, fine: Subgroup) -> QuotientFunction:
    """The unique right-H-invariant f on G/L with radon_nested(f) == phi.

    Implemented as the pullback along the refinement map; the round trips in
    both orders are verified exactly by the suite.
    """
    return pullback_through(phi, coset_space(phi.space.parent, fine))


def radon_general(
    f: QuotientFunction,
    coarse: Subgroup,
    eta: Optional[QuotientMeasure] = None,
    convention: str = "normalized",
    check: bool = False,
) -> QuotientFunction:
    """The two-subgroup transform C(G/K) -> C(G/H) through L = H & K.

    Values are fiber integrals over H/L of x -> f(xhK).  With ``check`` the
    value at each coset is recomputed from every one of its elements, turning
    well-definedness into a runtime verification.
    """
    group = f.space.parent
    if coarse.parent is not group:
        raise SpaceMismatchError("subgroup belongs to a different group")
    source = f.space.subgroup
    meet = intersect_subgroups(coarse, source)
    reps, weights, uniform = _fiber_data(coarse, meet, eta, convention)
    target = coset_space(group, coarse)
    coset_of = f.space.coset_of

    def value_at(x: int) -> Fraction:
        return _fiber_sum(f.values, coset_of, group.table[x], reps, weights, uniform)

    values = [value_at(x) for x in target.reps]
    if check:
        for x in group.elements():
            expected = values[target.coset_of[x]]
            if value_at(x) != expected:
                raise ValidationError(
                    f"transform value is not constant on the coset of element {x}",
                    witness={"x": x},
                )
    return QuotientFunction(target, tuple(values))


def radon_dual_general(
    phi: QuotientFunction,
    source: Subgroup,
    sigma: Optional[QuotientMeasure] = None,
    convention: str = "normalized",
    check: bool = False,
) -> QuotientFunction:
    """The dual two-subgroup transform C(G/H) -> C(G/K), integrating over K/L."""
    group = phi.space.parent
    if source.parent is not group:
        raise SpaceMismatchError("subgroup belongs to a different group")
    coarse = phi.space.subgroup
    meet = intersect_subgroups(coarse, source)
    reps, weights, uniform = _fiber_data(source, meet, sigma, convention)
    target = coset_space(group, source)
    coset_of = phi.space.coset_of

    def value_at(x: int) -> Fraction:
        return _fiber_sum(phi.values, coset_of, group.table[x], reps, weights, uniform)

    values = [value_at(x) for x in target.reps]
    if check:
        for x in group.elements():
            if value_at(x) != values[target.coset_of[x]]:
                raise ValidationError(
                    f"dual transform value is not constant on the coset of element {x}",
                    witness={"x": x},
                )
    return QuotientFunction(target, tuple(values))


def matrix_of(
    op: Callable[[QuotientFunction], QuotientFunction],
    domain: CosetSpace,
    codomain: CosetSpace,
) -> OperatorMatrix:
    """Assemble the matrix of an operator column by column from point indicators."""
    columns = []
    for c in range(domain.index):
        image = op(quotient_delta(domain, c))
        if image.space != codomain:
            raise SpaceMismatchError(
                f"operator image lives on {image.space.label()}, expected "
                f"{codomain.label()}"
            )
        columns.append(image.values)
    entries = tuple(
        tuple(columns[j][i] for j in range(domain.index))
        for i in range(codomain.index)
    )
    return OperatorMatrix(
        domain=quotient_space_ref(domain),
        codomain=quotient_space_ref(codomain),
        entries=entries,
    )


def _direct_fiber_matrix(
    group: FiniteGroup,
    domain: CosetSpace,
    codomain: CosetSpace,
    fiber_reps: tuple[int, ...],
    weight: Fraction,
    check: bool,
) -> tuple[tuple[Fraction, ...], ...]:
    """Rows of a fiber-integral operator by integer counting.

    Row for the coset of x counts, for each fiber representative h, which
    domain coset x*h lands in; a single multiply by the uniform weight turns
    counts into entries.  With ``check`` the counts are recomputed from every
    element of each codomain coset, verifying well-definedness exactly.
    """
    table = group.table
    coset_of = domain.coset_of
    dim = domain.index

    def counts_at(x: int) -> list[int]:
        counts = [0] * dim
        row = table[x]
        for h in fiber_reps:
            counts[coset_of[row[h]]] += 1
        return counts

    rows = [counts_at(x) for x in codomain.reps]
    if check:
        for x in group.elements():
            if counts_at(x) != rows[codomain.coset_of[x]]:
                raise ValidationError(
                    f"transform is not well defined on the coset of element {x}",
                    witness={"x": x},
                )
    return tuple(tuple(c * weight for c in row) for row in rows)


def radon_nested_matrix(
    group: FiniteGroup,
    fine: Subgroup,
    coarse: Subgroup,
    convention: str = "normalized",
) -> OperatorMatrix:
    domain = coset_space(group, fine)
    codomain = coset_space(group, coarse)
    reps, weights, _ = _fiber_data(coarse, fine, None, convention)
    entries = _direct_fiber_matrix(group, domain, codomain, reps, weights[0], False)
    return OperatorMatrix(
        domain=quotient_space_ref(domain),
        codomain=quotient_space_ref(codomain),
        entries=entries,
    )


def radon_dual_nested_matrix(
    group: FiniteGroup, fine: Subgroup, coarse: Subgroup
) -> OperatorMatrix:
    domain = coset_space(group, coarse)
    codomain = coset_space(group, fine)
    return matrix_of(lambda phi: radon_dual_nested(phi, fine), domain, codomain)


def radon_general_matrix(
    group: FiniteGroup,
    source: Subgroup,
    coarse: Subgroup,
    convention: str = "normalized",
    check_well_defined: bool = True,
) -> OperatorMatrix:
    """Matrix of the two-subgroup transform C(G/K) -> C(G/H).

    Well-definedness on each coset is verified from all representatives at
    assembly time (on by default).
    """
    domain = coset_space(group, source)
    codomain = coset_space(group, coarse)
    meet = intersect_subgroups(coarse, source)
    reps, weights, _ = _fiber_data(coarse, meet, None, convention)
    entries = _direct_fiber_matrix(
        group, domain, codomain, reps, weights[0], check_well_defined
    )
    return OperatorMatrix(
        domain=quotient_space_ref(domain),
        codomain=quotient_space_ref(codomain),
        entries=entries,
    )


def radon_dual_general_matrix(
    group: FiniteGroup,
    source: Subgroup,
    coarse: Subgroup,
    convention: str = "normalized",
    check_well_defined: bool = True,
) -> OperatorMatrix:
    domain = coset_space(group, coarse)
    codomain = coset_space(group, source)
    meet = intersect_subgroups(coarse, source)
    reps, weights, _ = _fiber_data(source, meet, None, convention)
    entries = _direct_fiber_matrix(
        group, domain, codomain, reps, weights[0], check_well_defined
    )
    return OperatorMatrix(
        domain=quotient_space_ref(domain),
        codomain=quotient_space_ref(codomain),
        entries=entries,
    )


def coset_sum_matrix(
    group: FiniteGroup, sub: Subgroup, convention: str = "counting"
) -> OperatorMatrix:
    """Matrix of the coset-sum projection C(G) -> C(G/H)."""
    codomain = coset_space(group, sub)
    columns = [
        coset_sum(group_delta(group, x), sub, convention).values
        for x in group.elements()
    ]
    entries = tuple(
        tuple(columns[j][i] for j in range(group.order))
        for i in range(codomain.index)
    )
    return OperatorMatrix(
        domain=group_space_ref(group),
        codomain=quotient_space_ref(codomain),
        entries=entries,
    )


def weighted_coset_sum_matrix(
    group: FiniteGroup, rho: RhoFunction, convention: str = "counting"
) -> OperatorMatrix:
    codomain = coset_space(group, rho.subgroup)
    columns = [
        weighted_coset_sum(group_delta(group, x), rho, convention).values
        for x in group.elements()
    ]
    entries = tuple(
        tuple(columns[j][i] for j in range(group.order))
        for i in range(codomain.index)
    )
    return OperatorMatrix(
        domain=group_space_ref(group),
        codomain=quotient_space_ref(codomain),
        entries=entries,
    )


def pullback_matrix(group: FiniteGroup, sub: Subgroup) -> OperatorMatrix:
    """Matrix of the pullback C(G/H) -> C(G)."""
    domain = coset_space(group, sub)
    entries = tuple(
        tuple(
            Fraction(1) if domain.coset_of[x] == c else Fraction(0)
            for c in range(domain.index)
        )
        for x in group.elements()
    )
    return OperatorMatrix(
        domain=quotient_space_ref(domain),
        codomain=group_space_ref(group),
        entries=entries,
    )


def descent_matrix(
    group: FiniteGroup, sub: Subgroup, convention: str = "normalized"
) -> OperatorMatrix:
    """Matrix of the rho=1 weighted coset sum restricted to C(G : K).

    Domain basis: the coset-indicator partition basis of the right-invariant
    functions on G; codomain: point basis of C(G/K).  Normalized convention
    makes this the descent bijection (the identity matrix in these bases).
    """
    space = coset_space(group, sub)
    rho = constant_rho(group, sub)
    basis = right_invariant_basis(group, sub)
    columns = [weighted_coset_sum(f, rho, convention).values for f in basis]
    entries = tuple(
        tuple(columns[j][i] for j in range(len(basis)))
        for i in range(space.index)
    )
    return OperatorMatrix(
        domain=SpaceRef(label=f"C({group.name}:{sub.label()})", dim=len(basis)),
        codomain=quotient_space_ref(space),
        entries=entries,
    )


def matrix_on_basis(
    op: Callable[[QuotientFunction], QuotientFunction],
    domain: InvariantSubspace,
    codomain: CosetSpace,
) -> OperatorMatrix:
    """Matrix of an operator from a partition basis to a full point basis."""
    columns = []
    for basis_vector in domain.basis:
        image = op(basis_vector)
        if image.space != codomain:
            raise SpaceMismatchError(
                f"operator image lives on {image.space.label()}, expected "
                f"{codomain.label()}"
            )
        columns.append(image.values)
    entries = tuple(
        tuple(columns[j][i] for j in range(domain.dimension))
        for i in range(codomain.index)
    )
    return OperatorMatrix(
        domain=subspace_ref(domain),
        codomain=quotient_space_ref(codomain),
        entries=entries,
    )


def matrix_into_subspace(
    op: Callable[[QuotientFunction], QuotientFunction],
    domain: CosetSpace,
    codomain: InvariantSubspace,
) -> OperatorMatrix:
    """Matrix of an operator from a full point basis into a partition basis."""
    columns = []
    for c in range(domain.index):
        image = op(quotient_delta(domain, c))
        if image.space != codomain.ambient:
            raise SpaceMismatchError(
                f"operator image lives on {image.space.label()}, expected "
                f"{codomain.ambient.label()}"
            )
        coords = []
        for block in codomain.blocks:
            value = image.values[block[0]]
            for idx in block[1:]:
                if image.values[idx] != value:
                    raise ValidationError(
                        "operator image is not constant on a codomain block",
                        witness={"block": list(block)},
                    )
            coords.append(value)
        columns.append(tuple(coords))
    entries = tuple(
        tuple(columns[j][i] for j in range(domain.index))
        for i in range(codomain.dimension)
    )
    return OperatorMatrix(
        domain=quotient_space_ref(domain),
        codomain=subspace_ref(codomain),
        entries=entries,
    )


def matrix_on_subspaces(
    op: Callable[[QuotientFunction], QuotientFunction],
    domain: InvariantSubspace,
    codomain: InvariantSubspace,
) -> OperatorMatrix:
    """Matrix of an operator restricted to partition bases on both sides.

    Each image is checked to be constant on the codomain blocks, so the fact
    that the operator maps one invariant subspace into the other is verified
    during assembly rather than assumed.
    """
    columns = []
    for basis_vector in domain.basis:
        image = op(basis_vector)
        if image.space != codomain.ambient:
            raise SpaceMismatchError(
                f"operator image lives on {image.space.label()}, expected "
                f"{codomain.ambient.label()}"
            )
        coords = []
        for block in codomain.blocks:
            value = image.values[block[0]]
            for c in block[1:]:
                if image.values[c] != value:
                    raise ValidationError(
                        "operator image is not constant on a codomain block",
                        witness={"block": list(block)},
                    )
            coords.append(value)
        columns.append(tuple(coords))
    entries = tuple(
        tuple(columns[j][i] for j in range(domain.dimension))
        for i in range(codomain.dimension)
    )
    return OperatorMatrix(
        domain=subspace_ref(domain), codomain=subspace_ref(codomain), entries=entries
    )
