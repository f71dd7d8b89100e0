"""A concrete continuous-group check on the multiplicative complex numbers.

The ambient group is C* = C - {0}; the sign pair {+1, -1} and the fourth
roots of unity {+1, -1, +i, -i} play the roles of the nested subgroups.  A
compactly supported radial tent profile is symmetrized over the sign pair
(counting measure, hence the factor 2) and then averaged over the two-point
fiber {signs, i*signs} with the normalized measure.  Because the profile is
radial the average reproduces the symmetrized function exactly, which is the
reconstruction identity this module evaluates on a sample grid.

This is the one module of the package that computes in floating point; all
identities here come with an explicit tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence


@dataclass(frozen=True)
class RadialFunction:
    """A function of the modulus only, vanishing beyond a support bound."""

    evaluator: Callable[[float], float]
    support_bound: float

    def __call__(self, radius: float) -> float:
        if radius >= self.support_bound:
            return 0.0
        return self.evaluator(radius)


def tent_profile() -> RadialFunction:
    """The tent 1 - r on [0, 1), zero from radius 1 on."""
    return RadialFunction(evaluator=lambda r: 1.0 - r, support_bound=1.0)


def symmetrized_sample(phi: RadialFunction, z: complex) -> float:
    """Value at the sign-pair coset of z: phi(z) + phi(-z) = 2*phi(|z|).

    Counting measure on the two-element sign subgroup; well defined on cosets
    because |z| = |-z|.
    """
    if z == 0:
        raise ValueError("0 is not an element of the multiplicative group")
    return phi(abs(z)) + phi(abs(-z))


def quarter_turn_average(f: Callable[[complex], float], z: complex) -> float:
    """Average of a sign-coset function over the fiber {zL, izL}.

    The fiber of the projection onto fourth-roots-of-unity cosets has the two
    points represented by z and i*z; the normalized invariant measure gives
    each weight 1/2.
    """
    if z == 0:
        raise ValueError("0 is not an element of the multiplicative group")
    return 0.5 * (f(z) + f(1j * z))


def default_grid(
    radii: int = 100,
    angles: int = 8,
    r_min: float = 0.01,
    r_max: float = 2.0,
) -> list[complex]:
    """Logarithmically spaced radii crossed with equally spaced angles."""
    if radii < 1 or angles < 1:
        raise ValueError("grid needs at least one radius and one angle")
    if r_min <= 0 or r_max <= r_min:
        raise ValueError("grid radii must satisfy 0 < r_min < r_max")
    samples = []
    for i in range(radii):
        if radii == 1:
            r = r_min
        else:
            r = r_min * (r_max / r_min) ** (i / (radii - 1))
        for j in range(angles):
            theta = 2.0 * math.pi * j / angles
            samples.append(r * cmath.exp(1j * theta))
    return samples


@dataclass(frozen=True)
class GridRow:
    radius: float
    angle: float
    f: float
    radon: float
    deviation: float


@dataclass(frozen=True)
class ReconstructionReport:
    rows: tuple[GridRow, ...]
    max_deviation: float
    max_invariance_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return (
            self.max_deviation <= self.tolerance
            and self.max_invariance_deviation <= self.tolerance
        )


def verify_reconstruction(
    grid: Sequence[complex], tolerance: float = 1e-12
) -> ReconstructionReport:
    """Check invariance and the reconstruction identity at every grid sample.

    For each sample z the symmetrized tent f is compared with its fiber
    average (the reconstruction identity), and f's invariance under the four
    fourth roots of unity is checked directly.  Reports the worst deviations.
    """
    phi = tent_profile()

    def f(z: complex) -> float:
        return symmetrized_sample(phi, z)

    rows = []
    max_dev = 0.0
    max_inv = 0.0
    for z in grid:
        if z == 0:
            raise ValueError("0 is not an element of the multiplicative group")
        f_value = f(z)
        radon_value = quarter_turn_average(f, z)
        deviation = abs(radon_value - f_value)
        max_dev = max(max_dev, deviation)
        for h in (1, 1j, -1, -1j):
            max_inv = max(max_inv, abs(f(h * z) - f_value))
        rows.append(
            GridRow(
                radius=abs(z),
                angle=math.atan2(z.imag, z.real),
                f=f_value,
                radon=radon_value,
                deviation=deviation,
            )
        )
    return ReconstructionReport(
        rows=tuple(rows),
        max_deviation=max_dev,
        max_invariance_deviation=max_inv,
        tolerance=tolerance,
    )
