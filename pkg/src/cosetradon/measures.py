"""Haar weights, rho-functions, and quasi-invariant measures on coset spaces.

Two Haar conventions are threaded through every integral: ``counting`` gives
each element weight 1, ``normalized`` gives each element weight 1/|G|.  Finite
groups are unimodular, so a rho-function for a pair (G, H) is exactly a
positive function that is constant on each left coset xH; the measure it
induces on G/H satisfies the quotient integral formula (Weil's formula)
with zero residual, and that residual is what this module computes.

All arithmetic here is exact rational; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import SpaceMismatchError, ValidationError
from .groups import CosetSpace, FiniteGroup, Subgroup, coset_space

CONVENTIONS = ("counting", "normalized")


def haar_weight(order: int, convention: str) -> Fraction:
    """Per-element weight of the left Haar measure under a convention."""
    if convention == "counting":
        return Fraction(1)
    if convention == "normalized":
        return Fraction(1, order)
    raise ValidationError(f"unknown Haar convention: {convention!r}")


@dataclass(frozen=True)
class HaarMeasure:
    """Uniform left (and right) Haar measure on a finite group."""

    group: FiniteGroup
    convention: str
    weight: Fraction

    def integrate(self, values: Sequence[Fraction]) -> Fraction:
        if len(values) != self.group.order:
            raise SpaceMismatchError(
                f"expected {self.group.order} values, got {len(values)}"
            )
        return self.weight * sum(values, Fraction(0))


def haar_measure(group: FiniteGroup, convention: str = "counting") -> HaarMeasure:
    return HaarMeasure(
        group=group, convention=convention, weight=haar_weight(group.order, convention)
    )


@dataclass(frozen=True)
class QuotientMeasure:
    """Positive weights on the cosets of a CosetSpace."""

    space: CosetSpace
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.space.index:
            raise ValidationError(
                f"measure needs {self.space.index} weights, got {len(self.weights)}"
            )
        if any(w <= 0 for w in self.weights):
            raise ValidationError("quotient measure weights must be strictly positive")

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def is_invariant(self) -> bool:
        return len(set(self.weights)) == 1

    def is_normalized(self) -> bool:
        return self.total() == 1


def quotient_measure(
    space: CosetSpace, weights: Sequence[Fraction | int]
) -> QuotientMeasure:
    return QuotientMeasure(space=space, weights=tuple(Fraction(w) for w in weights))


def invariant_measure(space: CosetSpace, convention: str = "normalized") -> QuotientMeasure:
    """The uniform measure: weight 1 per coset (counting) or 1/n (normalized)."""
    if convention == "counting":
        weight = Fraction(1)
    elif convention == "normalized":
        weight = Fraction(1, space.index)
    else:
        raise ValidationError(f"unknown measure convention: {convention!r}")
    return QuotientMeasure(space=space, weights=(weight,) * space.index)


@dataclass(frozen=True)
class RhoFunction:
    """A positive function on G that is constant on each left coset xH.

    That constancy is the specialization of the rho-function axiom
    rho(xh) = delta_H(h) * delta_G(h)^-1 * rho(x) to finite (hence
    unimodular) groups; it is checked exactly at construction.
    """

    group: FiniteGroup
    subgroup: Subgroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise ValidationError(
                f"rho-function needs {self.group.order} values, got {len(self.values)}"
            )
        if any(v <= 0 for v in self.values):
            raise ValidationError("rho-function values must be strictly positive")
        for x in self.group.elements():
            for h in self.subgroup.elements:
                xh = self.group.mul(x, h)
                if self.values[xh] != self.values[x]:
                    raise ValidationError(
                        "rho-function is not constant on the coset of element "
                        f"{x}: values differ at {x} and {xh}",
                        witness={"x": x, "h": h},
                    )


def rho_function(
    group: FiniteGroup, sub: Subgroup, values: Sequence[Fraction | int]
) -> RhoFunction:
    return RhoFunction(
        group=group, subgroup=sub, values=tuple(Fraction(v) for v in values)
    )


def constant_rho(group: FiniteGroup, sub: Subgroup, value: Fraction | int = 1) -> RhoFunction:
    return rho_function(group, sub, (Fraction(value),) * group.order)


def rho_from_coset_weights(
    space: CosetSpace, weights: Sequence[Fraction | int]
) -> RhoFunction:
    """Lift per-coset positive weights to a rho-function on the group."""
    if len(weights) != space.index:
        raise SpaceMismatchError(
            f"expected {space.index} coset weights, got {len(weights)}"
        )
    values = tuple(Fraction(weights[c]) for c in space.coset_of)
    return rho_function(space.parent, space.subgroup, values)


def modular_function(group: FiniteGroup) -> tuple[Fraction, ...]:
    """The modular function, computed from right-translation invariance.

    For each x the map y -> y*x is verified to permute the group, which makes
    counting measure right-invariant and forces the value 1 at x.  The check
    is what earns the constant answer.
    """
    values = []
    for x in group.elements():
        translated = {group.mul(y, x) for y in group.elements()}
        if len(translated) != group.order:
            raise ValidationError(
                f"right translation by {x} is not a bijection", witness={"x": x}
            )
        values.append(Fraction(1))
    return tuple(values)


def measure_from_rho(
    rho: RhoFunction,
    convention: str = "counting",
    group_convention: str = "counting",
) -> QuotientMeasure:
    """The measure on G/H induced by a rho-function.

    Uniquely determined by the quotient integral formula

        integral_G f(x) rho(x) dx = sum over G/H of (sum over H of f(xh) dh) dmu

    which, with per-element Haar weights w_G on G and w_H on H, pins the coset
    weight mu(xH) = rho(x) * w_G / w_H.  ``quotient_integral_residual``
    verifies the formula exactly.
    """
    space = coset_space(rho.group, rho.subgroup)
    w_g = haar_weight(rho.group.order, group_convention)
    w_h = haar_weight(rho.subgroup.order, convention)
    scale = w_g / w_h
    return QuotientMeasure(
        space=space,
        weights=tuple(rho.values[rep] * scale for rep in space.reps),
    )


def _values_of(f) -> tuple[Fraction, ...]:
    values = getattr(f, "values", f)
    return tuple(Fraction(v) for v in values)


def quotient_integral_residual(
    f,
    rho: RhoFunction,
    mu: QuotientMeasure,
    convention: str = "counting",
    group_convention: str = "counting",
) -> Fraction:
    """Residual of the quotient integral formula for one test function.

    Computes  integral_G f dx  -  sum over G/H of T(f)(xH) mu(xH)  where
    T(f)(xH) = sum over H of f(xh)/rho(xh) dh.  The contract is a zero
    residual for every f whenever ``mu`` came from ``measure_from_rho`` with
    the same conventions.  Accepts a GroupFunction or a plain value sequence.
    """
    values = _values_of(f)
    group = rho.group
    if len(values) != group.order:
        raise SpaceMismatchError(
            f"test function needs {group.order} values, got {len(values)}"
        )
    if mu.space.parent is not group or mu.space.subgroup != rho.subgroup:
        raise SpaceMismatchError("measure does not live on G/H for this rho-function")
    w_g = haar_weight(group.order, group_convention)
    w_h = haar_weight(rho.subgroup.order, convention)
    lhs = w_g * sum(values, Fraction(0))
    rhs = Fraction(0)
    for idx, rep in enumerate(mu.space.reps):
        fiber = Fraction(0)
        for h in rho.subgroup.elements:
            xh = group.mul(rep, h)
            fiber += values[xh] / rho.values[xh]
        rhs += mu.weights[idx] * w_h * fiber
    return lhs - rhs


def radon_nikodym_ratio(rho: RhoFunction, x: int, y: int) -> Fraction:
    """Density rho(xy)/rho(y) of the x-translate of the induced measure at yH."""
    return rho.values[rho.group.mul(x, y)] / rho.values[y]
