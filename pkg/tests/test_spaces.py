"""Function spaces: projections, pullbacks, invariant subspaces, convolution."""

import random
from fractions import Fraction

import pytest

from cosetradon import (
    PreconditionError,
    SpaceMismatchError,
    all_subgroups,
    constant_rho,
    convolve,
    coset_space,
    coset_sum,
    cyclic_group,
    descend,
    dihedral_group,
    direct_product,
    full_subgroup,
    generated_subgroup,
    group_delta,
    group_function,
    invariant_subspace,
    is_member,
    join_subgroups,
    measure_from_rho,
    project_to_subspace,
    pullback_through,
    pullback_to_group,
    quotient_delta,
    quotient_function,
    rho_from_coset_weights,
    right_invariant_basis,
    subgroup,
    subgroup_indicator,
    subspaces_equal,
    symmetric_group,
    trivial_subgroup,
    weighted_coset_sum,
)
from cosetradon.spaces import l1_norm_group, l1_norm_quotient
from oracles import naive_group_convolution


def test_coset_sum_point_mass():
    group = cyclic_group(4)
    sub = subgroup(group, (0, 2))
    image = coset_sum(group_delta(group, 0), sub)
    assert image.values == (Fraction(1), Fraction(0))


def test_coset_sum_constant():
    group = cyclic_group(4)
    sub = subgroup(group, (0, 2))
    image = coset_sum(group_function(group, (1, 1, 1, 1)), sub)
    assert image.values == (Fraction(2), Fraction(2))
    normalized = coset_sum(group_function(group, (1, 1, 1, 1)), sub, "normalized")
    assert normalized.values == (Fraction(1), Fraction(1))


def test_coset_sum_matches_brute_force():
    group = symmetric_group(3)
    sub = generated_subgroup(group, (1,))
    space = coset_space(group, sub)
    rng = random.Random("coset-sum")
    for _ in range(25):
        values = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)]
        image = coset_sum(group_function(group, values), sub)
        for c in range(space.index):
            members = [x for x in group.elements() if space.coset_of[x] == c]
            assert image.values[c] == sum(values[x] for x in members)


def test_pullback_examples():
    group = cyclic_group(4)
    sub = subgroup(group, (0, 2))
    space = coset_space(group, sub)
    lifted = pullback_to_group(quotient_function(space, (1, 0)))
    assert lifted.values == (Fraction(1), Fraction(0), Fraction(1), Fraction(0))
    constant = pullback_to_group(quotient_function(space, (5, 5)))
    assert set(constant.values) == {Fraction(5)}


def test_pullback_lands_in_invariant_subspace():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    coarse = generated_subgroup(group, (2,))
    fine_space = coset_space(group, fine)
    coarse_space = coset_space(group, coarse)
    stable = invariant_subspace(fine_space, coarse)
    rng = random.Random("pullback")
    for _ in range(20):
        phi = quotient_function(
            coarse_space,
            tuple(Fraction(rng.randint(-9, 9)) for _ in range(coarse_space.index)),
        )
        assert is_member(pullback_through(phi, fine_space), stable)


def test_weighted_coset_sum_reduces_to_plain():
    group = symmetric_group(3)
    sub = generated_subgroup(group, (1,))
    rho = constant_rho(group, sub)
    rng = random.Random("weighted")
    for _ in range(10):
        f = group_function(
            group, tuple(Fraction(rng.randint(-9, 9)) for _ in range(6))
        )
        assert weighted_coset_sum(f, rho).values == coset_sum(f, sub).values


def test_weighted_coset_sum_single_term():
    group = cyclic_group(4)
    space = coset_space(group, subgroup(group, (0, 2)))
    rho = rho_from_coset_weights(space, (1, 2))
    image = weighted_coset_sum(group_delta(group, 1), rho)
    assert image.values == (Fraction(0), Fraction(1, 2))


def test_weighted_coset_sum_l1_contraction_over_indicators():
    group = dihedral_group(4)
    for sub in all_subgroups(group):
        space = coset_space(group, sub)
        rho = rho_from_coset_weights(
            space, tuple(Fraction(i + 1, 2) for i in range(space.index))
        )
        mu = measure_from_rho(rho)
        for x in group.elements():
            f = group_delta(group, x)
            image = weighted_coset_sum(f, rho)
            assert l1_norm_quotient(image, mu) <= l1_norm_group(f)


def test_invariant_subspace_dimensions():
    group = symmetric_group(3)
    fine_space = coset_space(group, trivial_subgroup(group))
    assert invariant_subspace(fine_space, generated_subgroup(group, (2,))).dimension == 3
    assert invariant_subspace(fine_space, trivial_subgroup(group)).dimension == 6
    assert invariant_subspace(fine_space, full_subgroup(group)).dimension == 1


def test_invariant_subspace_dimension_is_join_index():
    for group in (symmetric_group(3), dihedral_group(4)):
        subs = all_subgroups(group)
        for fine in subs:
            space = coset_space(group, fine)
            for stabilizer in subs:
                expected = group.order // join_subgroups(fine, stabilizer).order
                assert invariant_subspace(space, stabilizer).dimension == expected


def test_membership_checks():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    coarse = generated_subgroup(group, (1,))
    space = coset_space(group, fine)
    stable = invariant_subspace(space, coarse)
    # a single fine coset indicator breaks invariance when [H : L] > 1
    assert not is_member(quotient_delta(space, 0), stable)
    rng = random.Random("membership")
    for _ in range(20):
        raw = quotient_function(
            space, tuple(Fraction(rng.randint(-9, 9)) for _ in range(space.index))
        )
        averaged = project_to_subspace(raw, stable)
        assert is_member(averaged, stable)
    with pytest.raises(SpaceMismatchError):
        other_space = coset_space(group, coarse)
        is_member(quotient_delta(other_space, 0), stable)


def test_subgroup_indicator():
    group = cyclic_group(4)
    fine_space = coset_space(group, trivial_subgroup(group))
    chi = subgroup_indicator(fine_space, subgroup(group, (0, 2)))
    assert chi.values == (Fraction(1), Fraction(0), Fraction(1), Fraction(0))
    assert subgroup_indicator(fine_space, trivial_subgroup(group)).values == (
        1, 0, 0, 0,
    )
    assert subgroup_indicator(fine_space, full_subgroup(group)).values == (1, 1, 1, 1)
    with pytest.raises(PreconditionError):
        half = coset_space(group, subgroup(group, (0, 2)))
        subgroup_indicator(half, trivial_subgroup(group))


def test_convolution_matches_naive_oracle():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    space = coset_space(group, fine)
    rng = random.Random("convolution")
    for _ in range(20):
        f_vals = tuple(Fraction(rng.randint(-5, 5)) for _ in range(6))
        g_vals = tuple(Fraction(rng.randint(-5, 5)) for _ in range(6))
        ours = convolve(
            quotient_function(space, f_vals),
            quotient_function(space, g_vals),
            Fraction(1, 2),
        )
        oracle = naive_group_convolution(group.table, f_vals, g_vals, Fraction(1, 2))
        assert ours.values == oracle


def test_right_unit_and_idempotent():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    coarse = generated_subgroup(group, (1,))
    space = coset_space(group, fine)
    stable = invariant_subspace(space, coarse)
    chi = subgroup_indicator(space, coarse)
    scale = Fraction(1, coarse.order)
    assert convolve(chi, chi, scale).values == chi.values
    for f in stable.basis:
        assert convolve(f, chi, scale).values == f.values


def test_left_unit_fails_on_s3():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    coarse = generated_subgroup(group, (1,))
    space = coset_space(group, fine)
    stable = invariant_subspace(space, coarse)
    chi = subgroup_indicator(space, coarse)
    scale = Fraction(1, coarse.order)
    violations = [
        f for f in stable.basis if convolve(chi, f, scale).values != f.values
    ]
    assert violations, "expected the left-unit law to fail"


def test_left_ideal_closure():
    group = dihedral_group(4)
    fine = subgroup(group, (0, 2))
    coarse = generated_subgroup(group, (1,))
    space = coset_space(group, fine)
    stable = invariant_subspace(space, coarse)
    scale = Fraction(1, coarse.order)
    rng = random.Random("ideal")
    for _ in range(20):
        f = quotient_function(
            space, tuple(Fraction(rng.randint(-9, 9)) for _ in range(space.index))
        )
        for g in stable.basis:
            assert is_member(convolve(f, g, scale), stable)


def test_subspaces_equal():
    group = symmetric_group(3)
    space = coset_space(group, trivial_subgroup(group))
    a = invariant_subspace(space, generated_subgroup(group, (1,)))
    b = invariant_subspace(space, generated_subgroup(group, (2,)))
    assert subspaces_equal(a, a)
    assert not subspaces_equal(a, b)


def test_subspaces_equal_counterexample_without_containment():
    group = direct_product(cyclic_group(2), cyclic_group(2), "Z2xZ2")
    fine = subgroup(group, (0, 2))
    space = coset_space(group, fine)
    whole = invariant_subspace(space, full_subgroup(group))
    other = invariant_subspace(space, subgroup(group, (0, 1)))
    assert subspaces_equal(whole, other)  # despite H != K


def test_right_invariant_basis():
    group = symmetric_group(3)
    assert len(right_invariant_basis(group, trivial_subgroup(group))) == 6
    constants = right_invariant_basis(group, full_subgroup(group))
    assert len(constants) == 1 and set(constants[0].values) == {Fraction(1)}
    basis = right_invariant_basis(group, generated_subgroup(group, (1,)))
    assert len(basis) == 3
    for f in basis:
        for x in group.elements():
            for k in (0, 1):
                assert f.values[group.mul(x, k)] == f.values[x]


def test_descend_requires_invariance():
    group = cyclic_group(4)
    space = coset_space(group, subgroup(group, (0, 2)))
    flat = group_function(group, (3, 7, 3, 7))
    assert descend(flat, space).values == (Fraction(3), Fraction(7))
    with pytest.raises(PreconditionError):
        descend(group_function(group, (3, 7, 4, 7)), space)


def test_sum_then_pullback_is_identity_normalized():
    group = dihedral_group(4)
    for sub in all_subgroups(group):
        space = coset_space(group, sub)
        for c in range(space.index):
            phi = quotient_delta(space, c)
            back = coset_sum(pullback_to_group(phi), sub, "normalized")
            assert back.values == phi.values
            counting = coset_sum(pullback_to_group(phi), sub, "counting")
            assert counting.values == tuple(v * sub.order for v in phi.values)


def test_pullback_then_sum_is_restriction_convolution():
    group = symmetric_group(3)
    sub = generated_subgroup(group, (2,))
    rng = random.Random("pstar")
    for _ in range(20):
        values = tuple(Fraction(rng.randint(-9, 9)) for _ in range(6))
        f = group_function(group, values)
        via_ops = pullback_to_group(coset_sum(f, sub))
        direct = tuple(
            sum(values[group.mul(x, h)] for h in sub.elements)
            for x in group.elements()
        )
        assert via_ops.values == tuple(direct)
