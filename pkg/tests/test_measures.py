"""Haar conventions, rho-functions, induced measures, and the quotient
integral formula, all with exact rationals."""

import random
from fractions import Fraction

import pytest

from cosetradon import (
    SpaceMismatchError,
    ValidationError,
    constant_rho,
    coset_space,
    cyclic_group,
    generated_subgroup,
    group_delta,
    haar_measure,
    invariant_measure,
    measure_from_rho,
    modular_function,
    quaternion_group,
    quotient_integral_residual,
    quotient_measure,
    radon_nikodym_ratio,
    rho_from_coset_weights,
    rho_function,
    subgroup,
    symmetric_group,
)


def test_modular_function_is_one_and_multiplicative():
    for group in (symmetric_group(3), cyclic_group(4), quaternion_group()):
        values = modular_function(group)
        assert all(v == 1 for v in values)
        for x in group.elements():
            for y in group.elements():
                assert values[group.mul(x, y)] == values[x] * values[y]


def test_haar_measure_conventions():
    group = cyclic_group(4)
    assert haar_measure(group, "counting").weight == 1
    assert haar_measure(group, "normalized").weight == Fraction(1, 4)
    assert haar_measure(group).integrate((1, 1, 1, 1)) == 4
    with pytest.raises(ValidationError):
        haar_measure(group, "bogus")


def test_rho_function_must_be_coset_constant():
    group = cyclic_group(4)
    sub = subgroup(group, (0, 2))
    rho_function(group, sub, (1, 2, 1, 2))  # fine
    with pytest.raises(ValidationError):
        rho_function(group, sub, (1, 2, 3, 2))
    with pytest.raises(ValidationError):
        rho_function(group, sub, (1, -2, 1, -2))


def test_measure_from_constant_rho_is_invariant():
    group = cyclic_group(4)
    sub = subgroup(group, (0, 2))
    mu = measure_from_rho(constant_rho(group, sub))
    assert mu.weights == (Fraction(1), Fraction(1))
    assert mu.is_invariant()


def test_measure_from_nonconstant_rho():
    group = cyclic_group(4)
    space = coset_space(group, subgroup(group, (0, 2)))
    rho = rho_from_coset_weights(space, (1, 2))
    assert measure_from_rho(rho).weights == (Fraction(1), Fraction(2))
    # the convention factor scales both weights uniformly
    assert measure_from_rho(rho, convention="normalized").weights == (
        Fraction(2),
        Fraction(4),
    )
    assert measure_from_rho(rho, group_convention="normalized").weights == (
        Fraction(1, 4),
        Fraction(1, 2),
    )


def test_quotient_integral_point_mass():
    group = cyclic_group(4)
    sub = subgroup(group, (0, 2))
    rho = constant_rho(group, sub)
    mu = measure_from_rho(rho)
    assert quotient_integral_residual(group_delta(group, 0), rho, mu) == 0


def test_quotient_integral_random_functions_exact():
    group = symmetric_group(3)
    sub = generated_subgroup(group, (1,))
    rng = random.Random("quotient-integral")
    for trial in range(100):
        rho_weights = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3)]
        rho = rho_from_coset_weights(coset_space(group, sub), rho_weights)
        for conventions in (("counting", "counting"), ("normalized", "counting"),
                            ("counting", "normalized"), ("normalized", "normalized")):
            mu = measure_from_rho(rho, *conventions)
            f = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)]
            assert quotient_integral_residual(f, rho, mu, *conventions) == 0


def test_quotient_integral_constant_function_nonconstant_rho():
    group = cyclic_group(4)
    space = coset_space(group, subgroup(group, (0, 2)))
    rho = rho_from_coset_weights(space, (1, 2))
    mu = measure_from_rho(rho)
    assert quotient_integral_residual((1, 1, 1, 1), rho, mu) == 0


def test_quotient_integral_dimension_mismatch():
    group = cyclic_group(4)
    sub = subgroup(group, (0, 2))
    rho = constant_rho(group, sub)
    mu = measure_from_rho(rho)
    with pytest.raises(SpaceMismatchError):
        quotient_integral_residual((1, 2, 3), rho, mu)


def test_radon_nikodym_examples():
    group = cyclic_group(4)
    sub = subgroup(group, (0, 2))
    rho_one = constant_rho(group, sub)
    for x in group.elements():
        for y in group.elements():
            assert radon_nikodym_ratio(rho_one, x, y) == 1

    space = coset_space(group, sub)
    rho = rho_from_coset_weights(space, (1, 2))
    assert radon_nikodym_ratio(rho, 1, 0) == 2
    for y in group.elements():
        assert radon_nikodym_ratio(rho, 0, y) == 1


def test_radon_nikodym_cocycle_identity():
    group = symmetric_group(3)
    sub = generated_subgroup(group, (2,))
    space = coset_space(group, sub)
    rho = rho_from_coset_weights(space, (Fraction(1, 3), 2, 5))
    mu = measure_from_rho(rho)
    for x in group.elements():
        for y in group.elements():
            lhs = radon_nikodym_ratio(rho, x, y) * mu.weights[space.coset_of[y]]
            assert lhs == mu.weights[space.coset_of[group.mul(x, y)]]


def test_quotient_measure_validation():
    group = cyclic_group(4)
    space = coset_space(group, subgroup(group, (0, 2)))
    assert invariant_measure(space, "normalized").weights == (
        Fraction(1, 2),
        Fraction(1, 2),
    )
    assert invariant_measure(space, "counting").is_invariant()
    with pytest.raises(ValidationError):
        quotient_measure(space, (1, 0))
    with pytest.raises(ValidationError):
        quotient_measure(space, (1,))
