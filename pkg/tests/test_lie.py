import random

import pytest

from eltlie.scalars import BOTTOM, ELT_MINUS_ONE, ELT_ONE, elt
from eltlie.linalg import (
    DEFAULT_GRID,
    Matrix,
    Vector,
    identity_matrix,
    mat_mul,
    unit_vector,
    zero_vector,
)
from eltlie.lie import (
    FreeLieAlgebra,
    IdealGenerators,
    LieStructureError,
    NonIdealError,
    StructureConstants,
    ad_matrix,
    bracket,
    bracket_of_spans,
    certify_ideal,
    classical_algebra,
    construct_2dim,
    construct_3dim,
    cyclic_jacobi_sum,
    derived_series,
    e_matrix,
    in_center,
    is_abelian,
    is_nilpotent,
    is_solvable,
    is_solvable_span,
    lower_central_series,
    negated_commutator,
    nilpotent_modulo,
    solvable_modulo,
    symplectic_involution,
    transpose_involution,
    verify_axioms,
    verify_strong_jacobi,
    verify_strong_jacobi_triple,
    _span_member_for_ideal,
)
from eltlie import catalog


def random_elt(rng, allow_bottom=True):
    if allow_bottom and rng.random() < 0.2:
        return BOTTOM
    return elt(rng.randint(-3, 3), rng.randint(-2, 2))


def random_matrix(rng, n):
    return Matrix(tuple(random_elt(rng) for _ in range(n)) for _ in range(n))


def random_coords(rng, n):
    return Vector([random_elt(rng) for _ in range(n)])


class TestBracket:
    def test_sl2_relations_tangible(self):
        alg = catalog.sl2()
        e, f, h = alg.basis()
        assert bracket(e, f, alg) == h
        assert bracket(h, e, alg) == e.scale(elt(2, 1))
        assert bracket(h, f, alg) == f.scale(elt(2, -1))

    def test_sl2_relations_layered(self):
        alg = catalog.sl2_layered()
        e, f, h = alg.basis()
        assert bracket(e, f, alg) == h
        assert bracket(h, e, alg) == e.scale(elt(0, 2))
        assert bracket(h, f, alg) == f.scale(elt(0, -2))

    def test_alternating_on_basis(self):
        for alg in (catalog.sl2(), catalog.sl2_layered(), catalog.disproof_algebra()):
            for b in alg.basis():
                assert bracket(b, b, alg).is_quasi_zero()

    def test_anticommutativity_random(self):
        rng = random.Random(0)
        alg = catalog.sl2_layered()
        for _ in range(200):
            x, y = random_coords(rng, 3), random_coords(rng, 3)
            assert (
                bracket(x, y, alg) + bracket(y, x, alg)
            ).is_quasi_zero()

    def test_jacobi_random(self):
        rng = random.Random(1)
        for alg in (catalog.sl2(), catalog.disproof_algebra()):
            n = alg.dim
            for _ in range(100):
                x, y, z = (random_coords(rng, n) for _ in range(3))
                cyclic = (
                    bracket(x, bracket(y, z, alg), alg)
                    + bracket(z, bracket(x, y, alg), alg)
                    + bracket(y, bracket(z, x, alg), alg)
                )
                assert cyclic.is_quasi_zero()


class TestNegatedCommutator:
    def test_e12_e21(self):
        e12, e21 = e_matrix(2, 0, 1), e_matrix(2, 1, 0)
        expected = e_matrix(2, 0, 0) + e_matrix(2, 1, 1).negate()
        assert negated_commutator(e12, e21) == expected

    def test_self_commutator_is_quasi_zero(self):
        rng = random.Random(2)
        for _ in range(50):
            a = random_matrix(rng, 3)
            assert negated_commutator(a, a).is_quasi_zero()

    def test_matrix_unit_formula_all_indices(self):
        # delta_{jk} e_il - delta_{il} e_kj, checked on every index tuple
        n = 3
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        lhs = negated_commutator(
                            e_matrix(n, i, j), e_matrix(n, k, l)
                        )
                        first = e_matrix(n, i, l) if j == k else Matrix([[BOTTOM] * n] * n)
                        second = (
                            e_matrix(n, k, j).negate()
                            if i == l
                            else Matrix([[BOTTOM] * n] * n)
                        )
                        assert lhs == first + second, (i, j, k, l)


class TestVerifyAxioms:
    def test_sl2_passes_with_expected_sums(self):
        report = verify_axioms(catalog.sl2())
        assert report.passed
        assert report.sums_for_triple(1, 2, 3) == [BOTTOM, BOTTOM, elt(2, 0)]

    def test_sl2_layered_passes_with_expected_sums(self):
        report = verify_axioms(catalog.sl2_layered())
        assert report.passed
        assert report.sums_for_triple(1, 2, 3) == [BOTTOM, BOTTOM, elt(0, 0)]

    def test_disproof_algebra_passes(self):
        assert verify_axioms(catalog.disproof_algebra()).passed

    def test_non_quasi_zero_diagonal_fails_alternating(self):
        constants = StructureConstants.from_entries(
            2, {(0, 0, 0): elt(0, 1)}
        )
        report = verify_axioms(constants)
        assert not report.passed
        assert (1, 1, 1) in report.alternating_violations

    def test_antisymmetry_violation_reported(self):
        constants = StructureConstants.from_entries(
            2, {(0, 1, 0): ELT_ONE, (1, 0, 0): ELT_ONE}
        )
        report = verify_axioms(constants)
        assert (2, 1, 1) in report.antisymmetry_violations or (
            1,
            2,
            1,
        ) in report.antisymmetry_violations


class TestStrongJacobi:
    def test_gl2_passes_500_random_triples(self):
        rng_sampler = lambda rng: random_matrix(rng, 2)
        report = verify_strong_jacobi(
            negated_commutator, rng_sampler, samples=500, seed=0
        )
        assert report.passed, report.failures[:1]

    def test_disproof_algebra_fails_on_the_decisive_triple(self):
        alg = catalog.disproof_algebra()
        x1, x2 = alg.basis()
        assert not verify_strong_jacobi_triple(x1, x1, x2, alg)

    def test_abelian_always_passes(self):
        alg = catalog.abelian_algebra(2)
        rng_sampler = lambda rng: random_coords(rng, 2)
        report = verify_strong_jacobi(
            lambda x, y: bracket(x, y, alg), rng_sampler, samples=100, seed=1
        )
        assert report.passed


class TestConstructions:
    def test_disproof_data_is_accepted(self):
        one0 = elt(1, 0)
        alg = construct_2dim(one0, one0, one0, one0, ELT_ONE, ELT_ONE)
        assert verify_axioms(alg).passed

    def test_all_bottom_data_gives_abelian(self):
        alg = construct_2dim(BOTTOM, BOTTOM, BOTTOM, BOTTOM, BOTTOM, BOTTOM)
        assert is_abelian(alg)

    def test_non_quasi_zero_diagonal_rejected(self):
        with pytest.raises(LieStructureError):
            construct_2dim(elt(0, 1), BOTTOM, BOTTOM, BOTTOM, ELT_ONE, BOTTOM)

    def test_sl2_tensor_accepted(self):
        assert construct_3dim(catalog.sl2().constants).dim == 3

    def test_zero_tensor_accepted(self):
        alg = construct_3dim(catalog.abelian_algebra(3).constants)
        assert is_abelian(alg)

    def test_broken_sl2_rejected_at_m3(self):
        entries = {
            (0, 1, 2): ELT_ONE,
            (2, 0, 0): elt(0, 3),  # was (0,2); breaks the m=3 sum
            (2, 1, 1): elt(0, -2),
        }
        constants = StructureConstants.from_entries(
            3, entries, fill_antisymmetric=True
        )
        assert cyclic_jacobi_sum(constants, 0, 1, 2, 2) == elt(0, -1)
        with pytest.raises(LieStructureError, match="m=3"):
            construct_3dim(constants)

    def test_three_dim_acceptance_equals_full_verification(self):
        rng = random.Random(3)
        pool = [BOTTOM, BOTTOM, ELT_ONE, elt(0, -1), elt(0, 2), elt(1, 1)]
        agree = 0
        for _ in range(300):
            entries = {}
            for (i, j) in ((0, 1), (0, 2), (1, 2)):
                for l in range(3):
                    v = rng.choice(pool)
                    if not v.is_bottom:
                        entries[(i, j, l)] = v
            constants = StructureConstants.from_entries(
                3, entries, fill_antisymmetric=True
            )
            accepted = True
            try:
                construct_3dim(constants)
            except LieStructureError:
                accepted = False
            assert accepted == verify_axioms(constants).passed
            agree += 1
        assert agree == 300


class TestClassicalFamilies:
    def test_a1_relations(self):
        fam = classical_algebra("A", 1)
        e, f, h = fam.generators[:3]
        assert negated_commutator(e, f) == h
        assert negated_commutator(e, h) == e.scale(elt(0, -2))
        assert negated_commutator(f, h) == f.scale(elt(0, 2))

    def test_a_membership_is_zero_layer_trace(self):
        fam = classical_algebra("A", 1)
        assert all(fam.membership(g) for g in fam.generators)
        assert not fam.membership(e_matrix(2, 0, 0))

    def test_a_family_closed_under_brackets(self):
        rng = random.Random(4)
        fam = classical_algebra("A", 2)
        for _ in range(60):
            a, b = random_matrix(rng, 3), random_matrix(rng, 3)
            br = negated_commutator(a, b)
            assert br.trace().is_quasi_zero()

    def test_b_d_generators_are_skew(self):
        for kind, n in (("B", 1), ("B", 2), ("D", 2)):
            fam = classical_algebra(kind, n)
            assert all(g.transpose() == g.negate() for g in fam.generators)

    def test_b2_bracket_closure(self):
        fam = classical_algebra("B", 2)
        for a in fam.generators:
            for b in fam.generators:
                assert fam.membership(negated_commutator(a, b))

    def test_c_generator_count_is_3n_squared(self):
        for n in (1, 2, 3):
            fam = classical_algebra("C", n)
            assert len(fam.generators) == 3 * n * n

    def test_c_generators_skew_and_closed(self):
        fam = classical_algebra("C", 2)
        assert all(
            symplectic_involution(g) == g.negate() for g in fam.generators
        )
        for a in fam.generators[:6]:
            for b in fam.generators[:6]:
                assert fam.membership(negated_commutator(a, b))

    def test_gl_basis_size(self):
        fam = classical_algebra("gl", 3)
        assert len(fam.generators) == 9

    def test_bad_kind_rejected(self):
        with pytest.raises(ValueError):
            classical_algebra("E", 8)
        with pytest.raises(ValueError):
            classical_algebra("A", 0)


class TestInvolutions:
    def test_involution_laws(self):
        rng = random.Random(5)
        for _ in range(60):
            a, b = random_matrix(rng, 4), random_matrix(rng, 4)
            for inv in (transpose_involution, symplectic_involution):
                assert inv(inv(a)) == a
                assert inv(mat_mul(a, b)) == mat_mul(inv(b), inv(a))

    def test_skew_sets_closed_under_commutator(self):
        rng = random.Random(6)
        for inv in (transpose_involution, symplectic_involution):
            for _ in range(40):
                a0, b0 = random_matrix(rng, 4), random_matrix(rng, 4)
                a = a0 + inv(a0).negate()
                b = b0 + inv(b0).negate()
                assert inv(a) == a.negate()
                br = negated_commutator(a, b)
                assert inv(br) == br.negate()


class TestAdjoint:
    def test_sl2_layered_ad_h(self):
        alg = catalog.sl2_layered()
        _, _, h = alg.basis()
        adh = ad_matrix(h, alg)
        assert adh == Matrix(
            [
                [elt(0, 2), BOTTOM, BOTTOM],
                [BOTTOM, elt(0, -2), BOTTOM],
                [BOTTOM, BOTTOM, BOTTOM],
            ]
        )

    def test_quasi_zero_vector_has_quasi_zero_ad(self):
        alg = catalog.sl2()
        x = Vector([elt(1, 0), elt(2, 0), BOTTOM])
        assert ad_matrix(x, alg).is_quasi_zero()

    def test_ad_is_additive_and_jacobi_in_ad_form(self):
        rng = random.Random(7)
        alg = catalog.sl2_layered()
        for _ in range(60):
            x, y, z = (random_coords(rng, 3) for _ in range(3))
            assert ad_matrix(x + y, alg) == ad_matrix(x, alg) + ad_matrix(y, alg)
            cyclic = (
                bracket(x, bracket(y, z, alg), alg)
                + bracket(z, bracket(x, y, alg), alg)
                + bracket(y, bracket(z, x, alg), alg)
            )
            assert cyclic.is_quasi_zero()

    def test_ad_of_bracket_matches_bracket_action(self):
        # ad_{[x,y]} applied to any basis vector equals [[x,y],b]
        rng = random.Random(8)
        alg = catalog.sl2()
        for _ in range(40):
            x, y = random_coords(rng, 3), random_coords(rng, 3)
            br = bracket(x, y, alg)
            m = ad_matrix(br, alg)
            for j, b in enumerate(alg.basis()):
                assert m.col(j) == bracket(br, b, alg)


class TestSpansAndSeries:
    def test_abelian_bracket_span_is_quasi_zero(self):
        alg = catalog.abelian_algebra(2)
        whole = IdealGenerators(alg, alg.basis())
        assert bracket_of_spans(whole, whole).all_quasi_zero()

    def test_sl2_derived_generators(self):
        alg = catalog.sl2()
        whole = IdealGenerators(alg, alg.basis())
        step = bracket_of_spans(whole, whole)
        spans_expected = [
            bracket(alg.basis()[0], alg.basis()[1], alg),  # h
            bracket(alg.basis()[2], alg.basis()[0], alg),  # 2e
            bracket(alg.basis()[2], alg.basis()[1], alg),  # -2f
        ]
        for v in spans_expected:
            assert _span_member_for_ideal(v, step.gens, DEFAULT_GRID)

    def test_bracket_with_zeroset_span_is_quasi_zero(self):
        alg = catalog.sl2()
        whole = IdealGenerators(alg, alg.basis())
        zs = IdealGenerators(
            alg, [b.scale(elt(0, 0)) for b in alg.basis()]
        )
        assert bracket_of_spans(whole, zs).all_quasi_zero()

    def test_derived_within_lower_central_sl2(self):
        alg = catalog.sl2()
        ds = derived_series(alg, 3)
        ls = lower_central_series(alg, 3)
        for k in range(4):
            for g in ds[k].gens:
                assert _span_member_for_ideal(g, ls[k].gens, DEFAULT_GRID)

    def test_heisenberg_lower_central_dies_at_two(self):
        steps = lower_central_series(catalog.heisenberg_algebra(), 3)
        assert not steps[1].all_quasi_zero()
        assert steps[2].all_quasi_zero()

    def test_strictly_upper_matrix_commutators_die(self):
        e12, e13, e23 = (
            e_matrix(3, 0, 1),
            e_matrix(3, 0, 2),
            e_matrix(3, 1, 2),
        )
        gens = [e12, e13, e23]
        level1 = [negated_commutator(a, b) for a in gens for b in gens]
        level2 = [
            negated_commutator(a, b) for a in gens for b in level1
        ]
        assert any(not m.is_quasi_zero() for m in level1)
        assert all(m.is_quasi_zero() for m in level2)


class TestVerdicts:
    def test_abelian_solvable_and_nilpotent_at_one(self):
        alg = catalog.abelian_algebra(2)
        sv = is_solvable(alg, 3)
        nv = is_nilpotent(alg, 3)
        assert sv and sv.step == 1
        assert nv and nv.step == 1
        assert is_abelian(alg)

    def test_heisenberg_nilpotent(self):
        verdict = is_nilpotent(catalog.heisenberg_algebra(), 4)
        assert verdict and verdict.step == 2

    def test_sl2_not_solvable(self):
        verdict = is_solvable(catalog.sl2(), 6)
        assert verdict.decided and not verdict.value

    def test_disproof_algebra_is_solvable_at_two(self):
        # every bracket is a multiple of x1 + x2, so the second derived
        # step is balanced
        alg = catalog.disproof_algebra()
        verdict = is_solvable(alg, 6)
        assert verdict and verdict.step == 2
        nverdict = is_nilpotent(alg, 6)
        assert nverdict and nverdict.step == 2

    def test_kmax_validated(self):
        with pytest.raises(ValueError):
            is_solvable(catalog.sl2(), 0)


class TestModulo:
    def test_modulo_whole_algebra_trivially_true(self):
        alg = catalog.sl2()
        whole = IdealGenerators(alg, alg.basis())
        verdict = solvable_modulo(alg, whole, 3)
        assert verdict and verdict.step == 0

    def test_modulo_zeroset_reduces_to_plain(self):
        alg = construct_2dim(
            BOTTOM, BOTTOM, BOTTOM, BOTTOM, ELT_ONE, BOTTOM
        )  # [x1,x2] = x1
        zs = IdealGenerators(alg, [b.scale(elt(0, 0)) for b in alg.basis()])
        plain = is_solvable(alg, 4)
        modulo = solvable_modulo(alg, zs, 4)
        assert plain.decided and modulo.decided
        assert plain.value == modulo.value
        assert plain.step == modulo.step

    def test_span_e_is_not_an_ideal_of_sl2(self):
        alg = catalog.sl2()
        e = alg.basis()[0]
        with pytest.raises(NonIdealError):
            solvable_modulo(alg, IdealGenerators(alg, [e]), 3)

    def test_nilpotent_modulo_center_of_heisenberg(self):
        alg = catalog.heisenberg_algebra()
        center = IdealGenerators(alg, [alg.basis()[2]])
        certify_ideal(center, DEFAULT_GRID)
        verdict = nilpotent_modulo(alg, center, 3)
        assert verdict and verdict.step == 1


class TestCenter:
    def test_quasi_zero_vectors_are_central(self):
        alg = catalog.sl2()
        assert in_center(Vector([elt(1, 0), BOTTOM, elt(0, 0)]), alg)

    def test_sl2_e_not_central(self):
        alg = catalog.sl2()
        assert not in_center(alg.basis()[0], alg)

    def test_abelian_everything_central(self):
        rng = random.Random(9)
        alg = catalog.abelian_algebra(3)
        for _ in range(30):
            assert in_center(random_coords(rng, 3), alg)

    def test_heisenberg_center(self):
        alg = catalog.heisenberg_algebra()
        p, q, z = alg.basis()
        assert in_center(z, alg)
        assert not in_center(p, alg)


class TestSolvableIdealSum:
    def test_sum_of_solvable_ideals_is_solvable(self):
        alg = catalog.heisenberg_algebra()
        p, q, z = alg.basis()
        i1 = IdealGenerators(alg, [p, z])
        i2 = IdealGenerators(alg, [q, z])
        certify_ideal(i1, DEFAULT_GRID)
        certify_ideal(i2, DEFAULT_GRID)
        assert is_solvable_span(i1, 4)
        assert is_solvable_span(i2, 4)
        total = IdealGenerators(alg, i1.gens + i2.gens)
        assert is_solvable_span(total, 4)

    def test_affine_plus_zeroset(self):
        alg = construct_2dim(BOTTOM, BOTTOM, BOTTOM, BOTTOM, ELT_ONE, BOTTOM)
        x1 = alg.basis()[0]
        i1 = IdealGenerators(alg, [x1])
        certify_ideal(i1, DEFAULT_GRID)
        zs = IdealGenerators(alg, [b.scale(elt(0, 0)) for b in alg.basis()])
        certify_ideal(zs, DEFAULT_GRID)
        total = IdealGenerators(alg, i1.gens + zs.gens)
        assert is_solvable_span(total, 4)


class TestRandomVerifiedGeneration:
    def test_generator_produces_verified_algebras(self):
        rng = random.Random(10)
        for _ in range(60):
            alg = catalog.random_verified_algebra(rng)
            assert verify_axioms(alg).passed
