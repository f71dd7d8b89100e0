"""The nested and two-subgroup transforms, their matrices, kernels, and
inversion on the invariant subspace."""

import random
from fractions import Fraction

import pytest

from cosetradon import (
    PreconditionError,
    SpaceMismatchError,
    all_subgroups,
    compose,
    coset_space,
    coset_sum_matrix,
    cyclic_group,
    dihedral_group,
    fiber_measure,
    full_subgroup,
    generated_subgroup,
    invariant_measure,
    invariant_subspace,
    invert_matrix,
    is_member,
    is_subgroup_of,
    kernel_basis,
    matrix_into_subspace,
    matrix_on_basis,
    matrix_on_subspaces,
    matrix_rank,
    pullback_through,
    quotient_delta,
    quotient_function,
    radon_dual_general,
    radon_dual_general_matrix,
    radon_dual_nested,
    radon_dual_nested_matrix,
    radon_general,
    radon_general_matrix,
    radon_nested,
    radon_nested_matrix,
    reconstruct,
    refine_projection,
    subgroup,
    symmetric_group,
    trivial_subgroup,
)
from oracles import (
    brute_general_radon,
    brute_nested_radon,
    gauss_nullspace,
    gauss_rank,
)


def z4_setup():
    group = cyclic_group(4)
    fine = trivial_subgroup(group)
    coarse = subgroup(group, (0, 2))
    return group, fine, coarse


def test_radon_nested_examples():
    group, fine, coarse = z4_setup()
    fine_space = coset_space(group, fine)
    f = quotient_function(fine_space, (1, 0, 1, 0))
    assert radon_nested(f, coarse).values == (Fraction(1), Fraction(0))
    constant = quotient_function(fine_space, (7, 7, 7, 7))
    assert radon_nested(constant, coarse).values == (Fraction(7), Fraction(7))
    # H == L gives the identity operator
    same = radon_nested(
        quotient_function(coset_space(group, coarse), (3, 5)), coarse
    )
    assert same.values == (Fraction(3), Fraction(5))


def test_radon_nested_matches_brute_force():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    coarse = generated_subgroup(group, (1,))
    fine_space = coset_space(group, fine)
    rng = random.Random("nested")
    for _ in range(25):
        values = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6))
        ours = radon_nested(quotient_function(fine_space, values), coarse)
        oracle = brute_nested_radon(group.table, fine.elements, coarse.elements, values)
        assert ours.values == oracle


def test_radon_dual_nested_examples():
    group, fine, coarse = z4_setup()
    coarse_space = coset_space(group, coarse)
    phi = quotient_function(coarse_space, (1, 0))
    assert radon_dual_nested(phi, fine).values == (1, 0, 1, 0)
    constant = quotient_function(coarse_space, (4, 4))
    assert set(radon_dual_nested(constant, fine).values) == {Fraction(4)}


def test_radon_dual_image_is_invariant():
    group = dihedral_group(4)
    fine = subgroup(group, (0, 2))
    coarse = generated_subgroup(group, (1,))
    coarse_space = coset_space(group, coarse)
    stable = invariant_subspace(coset_space(group, fine), coarse)
    for c in range(coarse_space.index):
        image = radon_dual_nested(quotient_delta(coarse_space, c), fine)
        assert is_member(image, stable)


def test_radon_nested_matrix_example():
    group, fine, coarse = z4_setup()
    half = Fraction(1, 2)
    matrix = radon_nested_matrix(group, fine, coarse)
    assert matrix.entries == ((half, 0, half, 0), (0, half, 0, half))
    assert matrix.domain.dim == 4 and matrix.codomain.dim == 2
    dual = radon_dual_nested_matrix(group, fine, coarse)
    assert dual.entries == ((1, 0), (0, 1), (1, 0), (0, 1))
    identity_case = radon_nested_matrix(group, coarse, coarse)
    assert identity_case.is_identity()


def test_counting_measure_scales_by_fiber_size():
    group = dihedral_group(4)
    fine = subgroup(group, (0, 2))
    coarse = generated_subgroup(group, (1,))
    normalized = radon_nested_matrix(group, fine, coarse, "normalized")
    counting = radon_nested_matrix(group, fine, coarse, "counting")
    fiber_size = coarse.order // fine.order
    assert counting.entries == tuple(
        tuple(v * fiber_size for v in row) for row in normalized.entries
    )


def test_explicit_fiber_measure_arguments():
    group, fine, coarse = z4_setup()
    fine_space = coset_space(group, fine)
    f = quotient_function(fine_space, (1, 0, 1, 0))
    eta = fiber_measure(coarse, fine, "counting")
    assert radon_nested(f, coarse, eta=eta).values == (Fraction(2), Fraction(0))
    wrong_space = invariant_measure(coset_space(group, coarse))
    with pytest.raises(SpaceMismatchError):
        radon_nested(f, coarse, eta=wrong_space)


def test_kernel_and_rank_laws():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    coarse = generated_subgroup(group, (1,))
    matrix = radon_nested_matrix(group, fine, coarse)
    kernel = kernel_basis(matrix)
    assert len(kernel) == 3  # [G:L] - [G:H] = 6 - 3
    assert matrix_rank(matrix) == 3
    # independent elimination oracle
    assert gauss_rank(matrix.entries) == 3
    assert len(gauss_nullspace(matrix.entries)) == 3
    # kernel vectors genuinely die under the transform
    for vec in kernel:
        assert all(v == 0 for v in matrix.apply(vec))


def test_kernel_rank_across_nested_pairs():
    for group in (cyclic_group(6), symmetric_group(3), dihedral_group(4)):
        subs = all_subgroups(group)
        for fine in subs:
            for coarse in subs:
                if not is_subgroup_of(fine, coarse):
                    continue
                matrix = radon_nested_matrix(group, fine, coarse)
                assert matrix_rank(matrix) == matrix.codomain.dim
                assert (
                    len(kernel_basis(matrix))
                    == matrix.domain.dim - matrix.codomain.dim
                )


def test_reconstruction_round_trips():
    for group in (cyclic_group(4), symmetric_group(3), dihedral_group(4)):
        subs = all_subgroups(group)
        for fine in subs:
            fine_space = coset_space(group, fine)
            for coarse in subs:
                if not is_subgroup_of(fine, coarse):
                    continue
                stable = invariant_subspace(fine_space, coarse)
                for f in stable.basis:
                    assert reconstruct(radon_nested(f, coarse), fine).values == f.values
                coarse_space = coset_space(group, coarse)
                for c in range(coarse_space.index):
                    phi = quotient_delta(coarse_space, c)
                    assert radon_nested(reconstruct(phi, fine), coarse).values == phi.values


def test_reconstruct_constant():
    group, fine, coarse = z4_setup()
    phi = quotient_function(coset_space(group, coarse), (9, 9))
    assert set(reconstruct(phi, fine).values) == {Fraction(9)}


def test_module_property_and_support():
    group = dihedral_group(4)
    fine = subgroup(group, (0, 4))
    coarse = generated_subgroup(group, (2, 4))
    fine_space = coset_space(group, fine)
    coarse_space = coset_space(group, coarse)
    projection = refine_projection(group, fine, coarse)
    rng = random.Random("module")
    for _ in range(50):
        phi = quotient_function(
            coarse_space,
            tuple(Fraction(rng.randint(-9, 9)) for _ in range(coarse_space.index)),
        )
        f = quotient_function(
            fine_space,
            tuple(
                Fraction(rng.randint(-3, 3)) if rng.random() < 0.5 else Fraction(0)
                for _ in range(fine_space.index)
            ),
        )
        lhs = radon_nested(pullback_through(phi, fine_space) * f, coarse)
        rhs = phi * radon_nested(f, coarse)
        assert lhs.values == rhs.values
        image_support = radon_nested(f, coarse).support()
        assert image_support <= {projection[c] for c in f.support()}


def test_restricted_matrix_is_invertible_two_sided():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    coarse = generated_subgroup(group, (2,))
    fine_space = coset_space(group, fine)
    coarse_space = coset_space(group, coarse)
    stable = invariant_subspace(fine_space, coarse)
    restricted = matrix_on_basis(lambda f: radon_nested(f, coarse), stable, coarse_space)
    recon = matrix_into_subspace(lambda phi: reconstruct(phi, fine), coarse_space, stable)
    assert compose(restricted, recon).is_identity()
    assert compose(recon, restricted).is_identity()
    assert invert_matrix(restricted) is not None


def test_trivial_fine_subgroup_is_coset_sum():
    group = symmetric_group(3)
    fine = trivial_subgroup(group)
    coarse = generated_subgroup(group, (1,))
    for convention in ("counting", "normalized"):
        nested = radon_nested_matrix(group, fine, coarse, convention)
        summed = coset_sum_matrix(group, coarse, convention)
        assert nested.entries == summed.entries


def test_radon_general_identity_when_equal():
    group = symmetric_group(3)
    sub = generated_subgroup(group, (1,))
    space = coset_space(group, sub)
    f = quotient_function(space, (1, 2, 3))
    assert radon_general(f, sub).values == f.values


def test_radon_general_matches_brute_force():
    group = symmetric_group(3)
    source = generated_subgroup(group, (2,))
    coarse = generated_subgroup(group, (5,))
    source_space = coset_space(group, source)
    rng = random.Random("general")
    for _ in range(25):
        values = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
        ours = radon_general(
            quotient_function(source_space, values), coarse, check=True
        )
        oracle = brute_general_radon(
            group.table, source.elements, coarse.elements, values
        )
        assert ours.values == oracle


def test_radon_general_closed_form_on_invariant_functions():
    group = dihedral_group(4)
    source = generated_subgroup(group, (4,))
    coarse = generated_subgroup(group, (6,))
    source_space = coset_space(group, source)
    coarse_space = coset_space(group, coarse)
    stable = invariant_subspace(source_space, coarse)
    for f in stable.basis:
        image = radon_general(f, coarse, check=True)
        for x in group.elements():
            assert (
                image.values[coarse_space.coset_of[x]]
                == f.values[source_space.coset_of[x]]
            )


def test_radon_general_restricted_bijective_with_refinement_identity():
    for group in (symmetric_group(3), dihedral_group(4)):
        subs = all_subgroups(group)
        for coarse in subs:
            for source in subs:
                meet = subgroup(
                    group, tuple(set(coarse.elements) & set(source.elements))
                )
                source_space = coset_space(group, source)
                coarse_space = coset_space(group, coarse)
                meet_space = coset_space(group, meet)
                domain = invariant_subspace(source_space, coarse)
                codomain = invariant_subspace(coarse_space, source)
                restricted = matrix_on_subspaces(
                    lambda f: radon_general(f, coarse), domain, codomain
                )
                assert restricted.domain.dim == restricted.codomain.dim
                assert matrix_rank(restricted) == restricted.domain.dim
                to_coarse = refine_projection(group, meet, coarse)
                to_source = refine_projection(group, meet, source)
                for f in domain.basis:
                    image = radon_general(f, coarse)
                    for c in range(meet_space.index):
                        assert image.values[to_coarse[c]] == f.values[to_source[c]]


def test_radon_dual_general_symmetry():
    group = symmetric_group(3)
    source = generated_subgroup(group, (2,))
    coarse = generated_subgroup(group, (5,))
    source_space = coset_space(group, source)
    coarse_space = coset_space(group, coarse)
    codomain = invariant_subspace(coarse_space, source)
    for phi in codomain.basis:
        image = radon_dual_general(phi, source, check=True)
        for x in group.elements():
            assert (
                image.values[source_space.coset_of[x]]
                == phi.values[coarse_space.coset_of[x]]
            )
    constant = quotient_function(coarse_space, (6, 6, 6))
    assert set(radon_dual_general(constant, source).values) == {Fraction(6)}


def test_general_matrices_well_defined_check_runs():
    group = dihedral_group(4)
    source = generated_subgroup(group, (4,))
    coarse = generated_subgroup(group, (1,))
    forward = radon_general_matrix(group, source, coarse, check_well_defined=True)
    dual = radon_dual_general_matrix(group, source, coarse, check_well_defined=True)
    assert forward.domain.dim == coset_space(group, source).index
    assert dual.codomain.dim == coset_space(group, source).index


def test_matrix_serialization_shapes():
    group, fine, coarse = z4_setup()
    matrix = radon_nested_matrix(group, fine, coarse)
    assert matrix.domain.label == "C(Z4/{0})"
    assert matrix.codomain.label == "C(Z4/{0,2})"
    with pytest.raises(PreconditionError):
        radon_nested(
            quotient_function(coset_space(group, coarse), (1, 0)), fine
        )
