"""Transport of functions between quotients by conjugate subgroups.

When g0 conjugates K onto H, the map gK -> g*g0*H is a G-equivariant
bijection of coset spaces.  It induces a right-translation isomorphism
between the right-invariant function spaces C(G : K) and C(G : H) (a
permutation matrix on the partition bases) and, after descending through
the rho=1 weighted coset sums, a pointwise-multiplicative bijection
C(G/K) -> C(G/H) with the closed form phi(xH) -> phi(x*g0^-1*K).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, SpaceMismatchError, ValidationError
from .groups import (
    FiniteGroup,
    Subgroup,
    conjugate_subgroup,
    coset_space,
    find_conjugator,
)
from .radon import OperatorMatrix, SpaceRef, quotient_space_ref
from .spaces import GroupFunction, QuotientFunction


@dataclass(frozen=True)
class ConjugacyWitness:
    """An element g0 together with the pair it conjugates: g0^-1 * K * g0 == H."""

    group: FiniteGroup
    g0: int
    source: Subgroup
    target: Subgroup

    def __post_init__(self):
        if conjugate_subgroup(self.group, self.source, self.g0) != self.target:
            raise ValidationError(
                f"element {self.g0} does not conjugate {self.source.label()} "
                f"onto {self.target.label()}"
            )


def conjugacy_witness(
    group: FiniteGroup, source: Subgroup, target: Subgroup, g0: int | None = None
) -> ConjugacyWitness:
    """Build a validated witness, searching for g0 when none is supplied."""
    if g0 is None:
        g0 = find_conjugator(group, source, target)
        if g0 is None:
            raise ValidationError(
                f"{source.label()} and {target.label()} are not conjugate in "
                f"{group.name}"
            )
    return ConjugacyWitness(group=group, g0=g0, source=source, target=target)


def coset_map(witness: ConjugacyWitness, coset: int) -> int:
    """The bijection G/K -> G/H sending gK to g*g0*H."""
    group = witness.group
    source_space = coset_space(group, witness.source)
    target_space = coset_space(group, witness.target)
    rep = source_space.reps[coset]
    return target_space.coset_of[group.mul(rep, witness.g0)]


def coset_map_inverse(witness: ConjugacyWitness, coset: int) -> int:
    """The inverse bijection G/H -> G/K sending gH to g*g0^-1*K."""
    group = witness.group
    source_space = coset_space(group, witness.source)
    target_space = coset_space(group, witness.target)
    rep = target_space.reps[coset]
    return source_space.coset_of[group.mul(rep, group.inv(witness.g0))]


def transport_group_function(
    witness: ConjugacyWitness, f: GroupFunction
) -> GroupFunction:
    """Right translation x -> f(x * g0^-1) on right-K-invariant functions.

    The result is right-H-invariant; the precondition that f is
    right-K-invariant is checked exhaustively.
    """
    group = witness.group
    if f.group is not group:
        raise SpaceMismatchError("function lives on a different group")
    for x in group.elements():
        for k in witness.source.elements:
            if f.values[group.mul(x, k)] != f.values[x]:
                raise PreconditionError(
                    f"function is not right-invariant under {witness.source.label()}"
                )
    g0_inv = group.inv(witness.g0)
    return GroupFunction(
        group, tuple(f.values[group.mul(x, g0_inv)] for x in group.elements())
    )


def transport_quotient_function(
    witness: ConjugacyWitness, phi: QuotientFunction
) -> QuotientFunction:
    """The induced bijection C(G/K) -> C(G/H): value at xH is phi(x*g0^-1*K)."""
    group = witness.group
    source_space = coset_space(group, witness.source)
    if phi.space != source_space:
        raise SpaceMismatchError(
            f"function lives on {phi.space.label()}, expected {source_space.label()}"
        )
    target_space = coset_space(group, witness.target)
    g0_inv = group.inv(witness.g0)
    values = tuple(
        phi.values[source_space.coset_of[group.mul(x, g0_inv)]]
        for x in target_space.reps
    )
    return QuotientFunction(target_space, values)


def transport_group_matrix(witness: ConjugacyWitness) -> OperatorMatrix:
    """Matrix of the right-translation isomorphism on the partition bases.

    Always a permutation matrix: the source indicator of gK maps to the
    target indicator of g*g0*H.
    """
    group = witness.group
    source_space = coset_space(group, witness.source)
    target_space = coset_space(group, witness.target)
    entries = [[Fraction(0)] * source_space.index for _ in range(target_space.index)]
    for c in range(source_space.index):
        entries[coset_map(witness, c)][c] = Fraction(1)
    return OperatorMatrix(
        domain=SpaceRef(
            label=f"C({group.name}:{witness.source.label()})", dim=source_space.index
        ),
        codomain=SpaceRef(
            label=f"C({group.name}:{witness.target.label()})", dim=target_space.index
        ),
        entries=tuple(tuple(row) for row in entries),
    )


def transport_quotient_matrix(witness: ConjugacyWitness) -> OperatorMatrix:
    """Matrix of the quotient transport on the point bases of G/K and G/H."""
    group = witness.group
    source_space = coset_space(group, witness.source)
    target_space = coset_space(group, witness.target)
    entries = [[Fraction(0)] * source_space.index for _ in range(target_space.index)]
    for c in range(source_space.index):
        entries[coset_map(witness, c)][c] = Fraction(1)
    return OperatorMatrix(
        domain=quotient_space_ref(source_space),
        codomain=quotient_space_ref(target_space),
        entries=tuple(tuple(row) for row in entries),
    )
