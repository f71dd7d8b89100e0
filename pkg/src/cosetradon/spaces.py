"""Function spaces on a finite group and its coset spaces.

Functions are exact-rational vectors indexed by elements (on G) or by coset
indices (on G/H).  The module provides the coset-sum projection and its
rho-weighted variant, pullbacks, invariant subspaces with their partition
bases, lift convolution, and the indicator functions those constructions
single out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PreconditionError, SpaceMismatchError, ValidationError
from .groups import (
    CosetSpace,
    FiniteGroup,
    Subgroup,
    coset_space,
    is_subgroup_of,
    join_subgroups,
    refine_projection,
)
from .measures import QuotientMeasure, RhoFunction, haar_weight


def _coerce(values: Iterable[Fraction | int]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class GroupFunction:
    """An element of C(G): one rational value per group element."""

    group: FiniteGroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise ValidationError(
                f"function on {self.group.name} needs {self.group.order} values"
            )

    def __add__(self, other: "GroupFunction") -> "GroupFunction":
        self._check(other)
        return GroupFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "GroupFunction") -> "GroupFunction":
        self._check(other)
        return GroupFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other) -> "GroupFunction":
        if isinstance(other, GroupFunction):
            self._check(other)
            return GroupFunction(
                self.group, tuple(a * b for a, b in zip(self.values, other.values))
            )
        scalar = Fraction(other)
        return GroupFunction(self.group, tuple(a * scalar for a in self.values))

    __rmul__ = __mul__

    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.values) if v != 0)

    def _check(self, other: "GroupFunction") -> None:
        if other.group is not self.group:
            raise SpaceMismatchError("group functions live on different groups")


@dataclass(frozen=True)
class QuotientFunction:
    """An element of C(G/H): one rational value per coset."""

    space: CosetSpace
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.space.index:
            raise ValidationError(
                f"function on {self.space.label()} needs {self.space.index} values"
            )

    def __add__(self, other: "QuotientFunction") -> "QuotientFunction":
        self._check(other)
        return QuotientFunction(self.space, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "QuotientFunction") -> "QuotientFunction":
        self._check(other)
        return QuotientFunction(self.space, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other) -> "QuotientFunction":
        if isinstance(other, QuotientFunction):
            self._check(other)
            return QuotientFunction(
                self.space, tuple(a * b for a, b in zip(self.values, other.values))
            )
        scalar = Fraction(other)
        return QuotientFunction(self.space, tuple(a * scalar for a in self.values))

    __rmul__ = __mul__

    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.values) if v != 0)

    def _check(self, other: "QuotientFunction") -> None:
        if other.space != self.space:
            raise SpaceMismatchError("quotient functions live on different spaces")


def group_function(group: FiniteGroup, values: Sequence[Fraction | int]) -> GroupFunction:
    return GroupFunction(group=group, values=_coerce(values))


def quotient_function(space: CosetSpace, values: Sequence[Fraction | int]) -> QuotientFunction:
    return QuotientFunction(space=space, values=_coerce(values))


def group_delta(group: FiniteGroup, x: int) -> GroupFunction:
    values = [Fraction(0)] * group.order
    values[x] = Fraction(1)
    return GroupFunction(group, tuple(values))


def quotient_delta(space: CosetSpace, coset: int) -> QuotientFunction:
    values = [Fraction(0)] * space.index
    values[coset] = Fraction(1)
    return QuotientFunction(space, tuple(values))


def constant_quotient(space: CosetSpace, value: Fraction | int) -> QuotientFunction:
    return QuotientFunction(space, (Fraction(value),) * space.index)


def coset_sum(
    f: GroupFunction, sub: Subgroup, convention: str = "counting"
) -> QuotientFunction:
    """Sum f over each left coset xH, scaled by the subgroup Haar weight.

    This is the canonical surjection C(G) -> C(G/H); it is never injective
    for |H| > 1.
    """
    group = f.group
    if sub.parent is not group:
        raise SpaceMismatchError("subgroup does not belong to the function's group")
    weight = haar_weight(sub.order, convention)
    space = coset_space(group, sub)
    values = []
    for rep in space.reps:
        total = sum((f.values[group.mul(rep, h)] for h in sub.elements), Fraction(0))
        values.append(total * weight)
    return QuotientFunction(space, tuple(values))


def weighted_coset_sum(
    f: GroupFunction, rho: RhoFunction, convention: str = "counting"
) -> QuotientFunction:
    """Coset sum of f/rho: the rho-weighted projection C(G) -> C(G/H).

    Surjective, and an L1 contraction with respect to (Haar on G, the measure
    induced by rho) -- both facts are exercised by the verification suite.
    """
    group = f.group
    if rho.group is not group:
        raise SpaceMismatchError("rho-function does not belong to the function's group")
    weight = haar_weight(rho.subgroup.order, convention)
    space = coset_space(group, rho.subgroup)
    values = []
    for rep in space.reps:
        total = Fraction(0)
        for h in rho.subgroup.elements:
            xh = group.mul(rep, h)
            total += f.values[xh] / rho.values[xh]
        values.append(total * weight)
    return QuotientFunction(space, tuple(values))


def pullback_to_group(phi: QuotientFunction) -> GroupFunction:
    """Compose with the canonical projection: x -> phi(xH)."""
    space = phi.space
    return GroupFunction(
        space.parent, tuple(phi.values[space.coset_of[x]] for x in space.parent.elements())
    )


def pullback_through(phi: QuotientFunction, finer: CosetSpace) -> QuotientFunction:
    """Compose with the refinement map G/L -> G/H: xL -> phi(xH).

    Requires finer.subgroup <= phi.space.subgroup.  The result is always
    invariant under the right action of the coarser subgroup.
    """
    if finer.parent is not phi.space.parent:
        raise SpaceMismatchError("coset spaces belong to different groups")
    projection = refine_projection(finer.parent, finer.subgroup, phi.space.subgroup)
    return QuotientFunction(finer, tuple(phi.values[projection[c]] for c in range(finer.index)))


def descend(f: GroupFunction, space: CosetSpace) -> QuotientFunction:
    """Inverse of pullback_to_group on right-invariant functions.

    Raises if f is not constant on some coset, so the well-definedness of
    every descent in this package is a runtime check rather than an
    assumption.
    """
    if space.parent is not f.group:
        raise SpaceMismatchError("coset space belongs to a different group")
    group = f.group
    values = []
    for rep in space.reps:
        value = f.values[rep]
        for h in space.subgroup.elements:
            if f.values[group.mul(rep, h)] != value:
                raise PreconditionError(
                    f"function is not constant on the coset of element {rep}"
                )
        values.append(value)
    return QuotientFunction(space, tuple(values))


@dataclass(frozen=True)
class InvariantSubspace:
    """The subspace of C(G/L) fixed by the right action of a subgroup H.

    Represented by its partition basis: ``blocks`` lists, for each basis
    vector, the coset indices of its supporting block; ``basis`` holds the
    corresponding 0/1 indicator functions.  The blocks are the fibers of
    the map G/L -> G/<H,L>, so the dimension is the index of the join.
    """

    ambient: CosetSpace
    stabilizer: Subgroup
    blocks: tuple[tuple[int, ...], ...]
    basis: tuple[QuotientFunction, ...]

    @property
    def dimension(self) -> int:
        return len(self.blocks)


def invariant_subspace(space: CosetSpace, stabilizer: Subgroup) -> InvariantSubspace:
    """Partition basis of {f on G/L : f(xhL) = f(xL) for all x, h in H}.

    H need not contain L, and neither needs to contain the other; the
    invariance condition always cuts out the functions constant on the
    fibers of G/L -> G/<H,L>.
    """
    if stabilizer.parent is not space.parent:
        raise SpaceMismatchError("stabilizer belongs to a different group")
    joined = join_subgroups(space.subgroup, stabilizer)
    coarse = coset_space(space.parent, joined)
    fibers: dict[int, list[int]] = {}
    for c, rep in enumerate(space.reps):
        fibers.setdefault(coarse.coset_of[rep], []).append(c)
    blocks = tuple(
        tuple(fibers[key]) for key in sorted(fibers, key=lambda k: min(fibers[k]))
    )
    basis = []
    for block in blocks:
        values = [Fraction(0)] * space.index
        for c in block:
            values[c] = Fraction(1)
        basis.append(QuotientFunction(space, tuple(values)))
    return InvariantSubspace(
        ambient=space, stabilizer=stabilizer, blocks=blocks, basis=tuple(basis)
    )


def is_member(f: QuotientFunction, subspace: InvariantSubspace) -> bool:
    """Exhaustive check of f(xhL) == f(xL) over all x in G and h in H."""
    if f.space != subspace.ambient:
        raise SpaceMismatchError("function does not live on the subspace's ambient space")
    group = f.space.parent
    coset_of = f.space.coset_of
    for x in group.elements():
        base = f.values[coset_of[x]]
        for h in subspace.stabilizer.elements:
            if f.values[coset_of[group.mul(x, h)]] != base:
                return False
    return True


def project_to_subspace(f: QuotientFunction, subspace: InvariantSubspace) -> QuotientFunction:
    """Average f over each block: the linear projection onto the subspace."""
    if f.space != subspace.ambient:
        raise SpaceMismatchError("function does not live on the subspace's ambient space")
    values = list(f.values)
    for block in subspace.blocks:
        mean = sum((f.values[c] for c in block), Fraction(0)) / len(block)
        for c in block:
            values[c] = mean
    return QuotientFunction(f.space, tuple(values))


def subspaces_equal(a: InvariantSubspace, b: InvariantSubspace) -> bool:
    """Whether two partition bases induce the same partition of the cosets."""
    if a.ambient != b.ambient:
        raise SpaceMismatchError("subspaces have different ambient spaces")
    return {frozenset(block) for block in a.blocks} == {
        frozenset(block) for block in b.blocks
    }


def subgroup_indicator(space: CosetSpace, sub: Subgroup) -> QuotientFunction:
    """Indicator of the cosets {hL : h in H} inside G/L, for L <= H.

    This is the function acting as the right unit of the invariant subalgebra
    under lift convolution with normalization 1/|H|.
    """
    if not is_subgroup_of(space.subgroup, sub):
        raise PreconditionError(
            f"{space.subgroup.label()} is not contained in {sub.label()}"
        )
    marked = {space.coset_of[h] for h in sub.elements}
    values = tuple(
        Fraction(1) if c in marked else Fraction(0) for c in range(space.index)
    )
    return QuotientFunction(space, values)


def convolve(
    f: QuotientFunction, g: QuotientFunction, normalization: Fraction | int
) -> QuotientFunction:
    """Lift convolution on C(G/L).

    Both factors are pulled back to right-L-invariant functions on G,
    convolved there with counting Haar scaled by ``normalization``
    ((F * G)(x) = c * sum_y F(y) G(y^-1 x)), and descended.  The descent is a
    checked step: the lifted convolution of right-invariant functions is
    right-invariant, and ``descend`` verifies it.
    """
    if f.space != g.space:
        raise SpaceMismatchError("convolution factors live on different spaces")
    scale = Fraction(normalization)
    if scale <= 0:
        raise ValidationError("convolution normalization must be positive")
    group = f.space.parent
    lifted_f = pullback_to_group(f).values
    lifted_g = pullback_to_group(g).values
    support_f = [(y, v) for y, v in enumerate(lifted_f) if v]
    support_g = [(z, v) for z, v in enumerate(lifted_g) if v]
    table = group.table
    inverse = group.inverse
    values = []
    # iterate the sparser factor: sum_y f(y) g(y^-1 x) == sum_z f(x z^-1) g(z)
    if len(support_f) <= len(support_g):
        pairs = [(table[inverse[y]], v) for y, v in support_f]
        for x in group.elements():
            total = Fraction(0)
            for row, fy in pairs:
                gv = lifted_g[row[x]]
                if gv:
                    total += fy * gv
            values.append(total * scale)
    else:
        pairs = [(inverse[z], v) for z, v in support_g]
        for x in group.elements():
            row = table[x]
            total = Fraction(0)
            for z_inv, gz in pairs:
                fv = lifted_f[row[z_inv]]
                if fv:
                    total += fv * gz
            values.append(total * scale)
    return descend(GroupFunction(group, tuple(values)), f.space)


def right_invariant_basis(group: FiniteGroup, sub: Subgroup) -> tuple[GroupFunction, ...]:
    """Partition basis of {f on G : f(xk) = f(x)}: one coset indicator per coset.

    These are exactly the pullbacks of point indicators on G/K, so the
    dimension is the index of K.
    """
    space = coset_space(group, sub)
    basis = []
    for c in range(space.index):
        values = tuple(
            Fraction(1) if space.coset_of[x] == c else Fraction(0)
            for x in group.elements()
        )
        basis.append(GroupFunction(group, values))
    return tuple(basis)


def l1_norm_group(f: GroupFunction, convention: str = "counting") -> Fraction:
    weight = haar_weight(f.group.order, convention)
    return weight * sum((abs(v) for v in f.values), Fraction(0))


def l1_norm_quotient(phi: QuotientFunction, mu: QuotientMeasure) -> Fraction:
    if mu.space != phi.space:
        raise SpaceMismatchError("measure does not live on the function's space")
    return sum((abs(v) * w for v, w in zip(phi.values, mu.weights)), Fraction(0))
