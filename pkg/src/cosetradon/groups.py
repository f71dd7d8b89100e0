"""Finite groups, subgroups, left-coset spaces, and canonical projections.

Elements of a group of order n are the dense indices 0..n-1; ``table[x][y]``
holds the product x*y.  Named constructors fix a deterministic numbering
(documented in their docstrings and in docs/formats.md) so that every coset
space, basis, and operator matrix built downstream is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .errors import PreconditionError, ValidationError


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Immutable multiplication table with identity and inverse structure."""

    name: str
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A validated subgroup, stored as the sorted tuple of its elements."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._element_set()

    def _element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def label(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.name}, {self.label()})"


@dataclass(frozen=True)
class CosetSpace:
    """Left cosets xH of a subgroup, with canonical representatives.

    ``reps[i]`` is the minimal element index of coset i (cosets are numbered
    by increasing representative, so coset 0 is the subgroup itself) and
    ``coset_of[x]`` is the coset index of xH, i.e. the canonical projection.
    """

    parent: FiniteGroup
    subgroup: Subgroup
    reps: tuple[int, ...]
    coset_of: tuple[int, ...]

    @property
    def index(self) -> int:
        return len(self.reps)

    def label(self) -> str:
        return f"{self.parent.name}/{self.subgroup.label()}"

    def __repr__(self) -> str:
        return f"CosetSpace({self.label()}, {self.index} cosets)"


@dataclass(frozen=True, eq=False)
class SubgroupRealization:
    """A subgroup re-indexed as a standalone group.

    ``embed[i]`` maps element i of ``group`` back to the parent element it
    represents; elements are taken in increasing parent order, so the
    realization is deterministic.
    """

    group: FiniteGroup
    embed: tuple[int, ...]


def from_table(
    table: Sequence[Sequence[int]], name: str = "G"
) -> FiniteGroup:
    """Build and eagerly validate a group from a raw multiplication table."""
    n = len(table)
    if n == 0:
        raise ValidationError("group table must be non-empty")
    rows = tuple(tuple(int(x) for x in row) for row in table)
    for x, row in enumerate(rows):
        if len(row) != n:
            raise ValidationError(f"table row {x} has length {len(row)}, expected {n}")
        for y, value in enumerate(row):
            if not 0 <= value < n:
                raise ValidationError(
                    f"table[{x}][{y}] = {value} is not an element index in 0..{n - 1}",
                    witness={"x": x, "y": y, "value": value},
                )

    identity = next(
        (
            e
            for e in range(n)
            if all(rows[e][x] == x == rows[x][e] for x in range(n))
        ),
        None,
    )
    if identity is None:
        raise ValidationError("no two-sided identity element exists")

    inverse = []
    for x in range(n):
        inv = next(
            (y for y in range(n) if rows[x][y] == identity == rows[y][x]), None
        )
        if inv is None:
            raise ValidationError(
                f"element {x} has no two-sided inverse", witness={"x": x}
            )
        inverse.append(inv)

    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            for z in range(n):
                if rows[xy][z] != rows[x][rows[y][z]]:
                    raise ValidationError(
                        f"associativity fails at triple ({x}, {y}, {z})",
                        witness={"x": x, "y": y, "z": z},
                    )

    return FiniteGroup(
        name=name,
        order=n,
        table=rows,
        identity=identity,
        inverse=tuple(inverse),
    )


def cyclic_group(n: int, name: str | None = None) -> FiniteGroup:
    """Z_n in additive notation: element k is the residue k, so x*y = x+y mod n."""
    if n <= 0:
        raise ValidationError(f"cyclic group order must be positive, got {n}")
    table = [[(x + y) % n for y in range(n)] for x in range(n)]
    return from_table(table, name or f"Z{n}")


def symmetric_group(n: int, name: str | None = None) -> FiniteGroup:
    """S_n on the letters 0..n-1.

    Element k is the k-th permutation of (0, .., n-1) in lexicographic order
    of one-line notation, and products compose right-to-left:
    (p*q)(i) = p[q[i]].  The identity permutation gets index 0.
    """
    if n <= 0:
        raise ValidationError(f"symmetric group degree must be positive, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
    ]
    return from_table(table, name or f"S{n}")


def dihedral_group(n: int, name: str | None = None) -> FiniteGroup:
    """D_n of order 2n acting on the vertices of an n-gon.

    Index k < n is the rotation v -> v+k; index n+k is the reflection
    v -> k-v (all mod n).  Products compose right-to-left as functions.
    """
    if n <= 0:
        raise ValidationError(f"dihedral parameter must be positive, got {n}")

    def compose(a: int, b: int) -> int:
        flip_a, k_a = a >= n, a % n
        flip_b, k_b = b >= n, b % n
        if not flip_a and not flip_b:
            return (k_a + k_b) % n
        if not flip_a and flip_b:
            return n + (k_a + k_b) % n
        if flip_a and not flip_b:
            return n + (k_a - k_b) % n
        return (k_a - k_b) % n

    table = [[compose(a, b) for b in range(2 * n)] for a in range(2 * n)]
    return from_table(table, name or f"D{n}")


def quaternion_group(name: str = "Q8") -> FiniteGroup:
    """The quaternion group on [1, -1, i, -i, j, -j, k, -k] in that index order."""
    # axis products for 1,i,j,k encoded as (sign, axis)
    products = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def decode(idx: int) -> tuple[int, int]:
        axis, neg = divmod(idx, 2)
        return (-1 if neg else 1, axis)

    def encode(sign: int, axis: int) -> int:
        return 2 * axis + (0 if sign == 1 else 1)

    def compose(a: int, b: int) -> int:
        sign_a, axis_a = decode(a)
        sign_b, axis_b = decode(b)
        sign_p, axis_p = products[(axis_a, axis_b)]
        return encode(sign_a * sign_b * sign_p, axis_p)

    table = [[compose(a, b) for b in range(8)] for a in range(8)]
    return from_table(table, name)


def direct_product(
    left: FiniteGroup, right: FiniteGroup, name: str | None = None
) -> FiniteGroup:
    """Direct product with element (a, b) packed as a*|right| + b."""
    m = right.order

    def compose(x: int, y: int) -> int:
        a1, b1 = divmod(x, m)
        a2, b2 = divmod(y, m)
        return left.mul(a1, a2) * m + right.mul(b1, b2)

    order = left.order * right.order
    table = [[compose(x, y) for y in range(order)] for x in range(order)]
    return from_table(table, name or f"{left.name}x{right.name}")


def build_group(spec: Mapping) -> FiniteGroup:
    """Build a group from a JSON-style specification mapping.

    Recognized kinds: ``table`` (with "table" and optional "name"),
    ``cyclic``/``dihedral``/``symmetric`` (with "n"), ``quaternion8``, and
    ``product`` (with "factors": a list of nested specifications).
    """
    kind = spec.get("kind")
    if kind == "table":
        return from_table(spec["table"], spec.get("name", "G"))
    if kind == "cyclic":
        return cyclic_group(int(spec["n"]), spec.get("name"))
    if kind == "dihedral":
        return dihedral_group(int(spec["n"]), spec.get("name"))
    if kind == "symmetric":
        return symmetric_group(int(spec["n"]), spec.get("name"))
    if kind == "quaternion8":
        return quaternion_group(spec.get("name", "Q8"))
    if kind == "product":
        factors = [build_group(sub) for sub in spec["factors"]]
        if len(factors) < 2:
            raise ValidationError("product specification needs at least two factors")
        group = factors[0]
        for factor in factors[1:]:
            group = direct_product(group, factor)
        if "name" in spec:
            group = FiniteGroup(
                name=spec["name"],
                order=group.order,
                table=group.table,
                identity=group.identity,
                inverse=group.inverse,
            )
        return group
    raise ValidationError(f"unknown group specification kind: {kind!r}")


def subgroup(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """Validate a subset as a subgroup (identity, closure, inverses)."""
    elems = tuple(sorted(set(int(x) for x in elements)))
    if not elems:
        raise ValidationError("a subgroup cannot be empty")
    for x in elems:
        if not 0 <= x < group.order:
            raise ValidationError(f"element {x} is out of range for {group.name}")
    member = frozenset(elems)
    if group.identity not in member:
        raise ValidationError("subgroup does not contain the identity")
    for x in elems:
        if group.inv(x) not in member:
            raise ValidationError(
                f"subgroup is not closed under inversion at element {x}",
                witness={"x": x},
            )
        for y in elems:
            if group.mul(x, y) not in member:
                raise ValidationError(
                    f"subgroup is not closed under product at ({x}, {y})",
                    witness={"x": x, "y": y},
                )
    return Subgroup(parent=group, elements=elems)


def generated_subgroup(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """The subgroup generated by the given elements (closure by products)."""
    frontier = {group.identity} | {int(g) for g in generators}
    for g in frontier:
        if not 0 <= g < group.order:
            raise ValidationError(f"generator {g} is out of range for {group.name}")
    elems = set(frontier)
    while frontier:
        new = set()
        for x in frontier:
            for y in elems:
                for product in (group.mul(x, y), group.mul(y, x)):
                    if product not in elems:
                        new.add(product)
        elems |= new
        frontier = new
    return Subgroup(parent=group, elements=tuple(sorted(elems)))


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(parent=group, elements=(group.identity,))


def full_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(parent=group, elements=tuple(range(group.order)))


def is_subgroup_of(inner: Subgroup, outer: Subgroup) -> bool:
    if inner.parent is not outer.parent:
        return False
    return set(inner.elements) <= set(outer.elements)


def intersect_subgroups(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.parent is not b.parent:
        raise PreconditionError("cannot intersect subgroups of different groups")
    return Subgroup(
        parent=a.parent,
        elements=tuple(sorted(set(a.elements) & set(b.elements))),
    )


def join_subgroups(a: Subgroup, b: Subgroup) -> Subgroup:
    """The smallest subgroup containing both, i.e. the closure of their union."""
    if a.parent is not b.parent:
        raise PreconditionError("cannot join subgroups of different groups")
    return generated_subgroup(a.parent, a.elements + b.elements)


@lru_cache(maxsize=None)
def coset_space(group: FiniteGroup, sub: Subgroup) -> CosetSpace:
    """The left-coset space G/H with minimal-element canonical representatives."""
    if sub.parent is not group:
        raise ValidationError("subgroup does not belong to the given group")
    coset_of = [-1] * group.order
    reps: list[int] = []
    for x in range(group.order):
        if coset_of[x] != -1:
            continue
        idx = len(reps)
        reps.append(x)
        for h in sub.elements:
            coset_of[group.mul(x, h)] = idx
    return CosetSpace(
        parent=group,
        subgroup=sub,
        reps=tuple(reps),
        coset_of=tuple(coset_of),
    )


@lru_cache(maxsize=None)
def refine_projection(
    group: FiniteGroup, fine: Subgroup, coarse: Subgroup
) -> tuple[int, ...]:
    """The map G/L -> G/H sending xL to xH, as an array over G/L coset indices.

    Requires L to be a subgroup of H; the map is then well defined and
    surjective with fibers of constant size [H : L].
    """
    if not is_subgroup_of(fine, coarse):
        raise PreconditionError(
            f"{fine.label()} is not contained in {coarse.label()}"
        )
    fine_space = coset_space(group, fine)
    coarse_space = coset_space(group, coarse)
    return tuple(coarse_space.coset_of[rep] for rep in fine_space.reps)


def conjugate_subgroup(group: FiniteGroup, sub: Subgroup, g0: int) -> Subgroup:
    """The conjugate g0^-1 * K * g0 of a subgroup K."""
    if not 0 <= g0 < group.order:
        raise ValidationError(f"element {g0} is out of range for {group.name}")
    g0_inv = group.inv(g0)
    elems = tuple(
        sorted(group.mul(group.mul(g0_inv, k), g0) for k in sub.elements)
    )
    return Subgroup(parent=group, elements=elems)


def find_conjugator(
    group: FiniteGroup, source: Subgroup, target: Subgroup
) -> Optional[int]:
    """Smallest g0 with g0^-1 * source * g0 == target, or None when none exists."""
    if source.order != target.order:
        return None
    for g0 in range(group.order):
        if conjugate_subgroup(group, source, g0) == target:
            return g0
    return None


@lru_cache(maxsize=None)
def all_subgroups(group: FiniteGroup) -> tuple[Subgroup, ...]:
    """Every subgroup, found by closing one added generator at a time.

    Exhaustive and deterministic (sorted by order then elements); fine for the
    small orders this package targets.
    """
    trivial = frozenset({group.identity})
    found = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for current in frontier:
            for g in range(group.order):
                if g in current:
                    continue
                closed = frozenset(
                    generated_subgroup(group, tuple(current) + (g,)).elements
                )
                if closed not in found:
                    found.add(closed)
                    new.append(closed)
        frontier = new
    ordered = sorted((len(s), tuple(sorted(s))) for s in found)
    return tuple(Subgroup(parent=group, elements=elems) for _, elems in ordered)


@lru_cache(maxsize=None)
def realize_subgroup(sub: Subgroup) -> SubgroupRealization:
    """Re-index a subgroup as a standalone FiniteGroup with an embedding map."""
    embed = sub.elements
    position = {x: i for i, x in enumerate(embed)}
    parent = sub.parent
    table = [
        [position[parent.mul(x, y)] for y in embed] for x in embed
    ]
    group = from_table(table, name=f"{parent.name}|{sub.label()}")
    return SubgroupRealization(group=group, embed=embed)


@lru_cache(maxsize=None)
def subquotient_space(outer: Subgroup, inner: Subgroup) -> CosetSpace:
    """The coset space H/L for nested subgroups L <= H of a common parent.

    Built on the realization of H as a standalone group; representatives map
    back to parent elements through ``realize_subgroup(outer).embed``.
    """
    if not is_subgroup_of(inner, outer):
        raise PreconditionError(
            f"{inner.label()} is not contained in {outer.label()}"
        )
    realization = realize_subgroup(outer)
    position = {x: i for i, x in enumerate(realization.embed)}
    mapped = Subgroup(
        parent=realization.group,
        elements=tuple(sorted(position[x] for x in inner.elements)),
    )
    return coset_space(realization.group, mapped)
