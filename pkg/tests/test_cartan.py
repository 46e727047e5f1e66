import itertools
import random
from fractions import Fraction

import pytest

from eltlie.scalars import BOTTOM, ELT_MINUS_ONE, ELT_ONE, elt
from eltlie.linalg import (
    DEFAULT_GRID,
    SMALL_GRID,
    EltPolynomial,
    Matrix,
    ShapeError,
    Vector,
    elt_determinant,
    identity_matrix,
    mat_mul,
    unit_vector,
)
from eltlie.cartan import (
    CharPoly,
    cartan_check,
    char_poly,
    essential_indices,
    essential_killing_pair,
    essential_trace,
    is_elt_nilpotent,
    killing_form,
    probe_form_radical,
)
from eltlie.lie import ad_matrix, bracket
from eltlie import catalog


def random_elt(rng, allow_bottom=True):
    if allow_bottom and rng.random() < 0.2:
        return BOTTOM
    return elt(rng.randint(-3, 3), rng.randint(-2, 2))


def random_matrix(rng, n):
    return Matrix(tuple(random_elt(rng) for _ in range(n)) for _ in range(n))


def char_poly_oracle(a: Matrix) -> EltPolynomial:
    """Permutation-sum oracle over polynomial entries, written directly
    (no reuse of the production determinant)."""
    n = a.rows
    total = EltPolynomial([])
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if perm[i] > perm[j]
        )
        sign = ELT_ONE if inversions % 2 == 0 else ELT_MINUS_ONE
        term = EltPolynomial([sign])
        for i in range(n):
            entry = EltPolynomial(
                [
                    ELT_MINUS_ONE * a[(i, perm[i])],
                    ELT_ONE if i == perm[i] else BOTTOM,
                ]
            )
            term = term * entry
        total = total + term
    return total


class TestCharPoly:
    def test_bottom_matrix_gives_pure_power(self):
        p = char_poly(Matrix([[BOTTOM, BOTTOM], [BOTTOM, BOTTOM]]))
        assert p.alphas() == [BOTTOM, BOTTOM]
        assert p.poly.coeff(2) == ELT_ONE

    def test_diagonal_example(self):
        a = Matrix([[elt(1, 1), BOTTOM], [BOTTOM, elt(2, 1)]])
        p = char_poly(a)
        assert p.alphas() == [elt(2, -1), elt(3, 1)]

    def test_matches_permutation_oracle(self):
        rng = random.Random(0)
        for _ in range(80):
            n = rng.choice((2, 3))
            a = random_matrix(rng, n)
            assert char_poly(a).poly == char_poly_oracle(a)

    def test_alpha1_is_negated_trace(self):
        rng = random.Random(1)
        for _ in range(100):
            a = random_matrix(rng, 3)
            assert char_poly(a).alpha(1) == ELT_MINUS_ONE * a.trace()

    def test_non_square_rejected(self):
        with pytest.raises(ShapeError):
            char_poly(Matrix([[BOTTOM, BOTTOM]]))

    def test_alpha_index_bounds(self):
        p = char_poly(identity_matrix(2))
        with pytest.raises(IndexError):
            p.alpha(0)
        with pytest.raises(IndexError):
            p.alpha(3)


class TestEssentialIndices:
    def _poly(self, a1, a2):
        return CharPoly(EltPolynomial([a2, a1, ELT_ONE]), 2)

    def test_first_slope_dominates(self):
        assert essential_indices(self._poly(elt(4, 1), elt(2, 1))) == {1}

    def test_second_slope_dominates(self):
        assert essential_indices(self._poly(elt(1, 1), elt(4, 1))) == {2}

    def test_tied_slopes(self):
        assert essential_indices(self._poly(elt(1, 1), elt(2, 1))) == {1, 2}

    def test_bottom_coefficients_excluded(self):
        assert essential_indices(self._poly(BOTTOM, elt(2, 1))) == {2}
        assert essential_indices(self._poly(BOTTOM, BOTTOM)) == set()


class TestEssentialTrace:
    def test_trace_branch_on_diagonal_example(self):
        a = Matrix([[elt(1, 1), BOTTOM], [BOTTOM, elt(2, 1)]])
        res = essential_trace(a)
        assert res.used_trace_branch
        assert res.value == elt(2, 1)
        assert res.l_set == {1}

    def test_fallback_branch_on_cancelling_diagonal(self):
        # trace t is small after a tangible tie, the off-diagonal minor
        # dominates: slope of alpha_2 wins
        a = Matrix([[elt(0, 1), elt(5, 1)], [elt(5, 1), elt(0, -1)]])
        res = essential_trace(a)
        assert not res.used_trace_branch
        assert res.mu == 2
        assert res.value == elt(5, 0)

    def test_mu_is_min_of_l_set(self):
        rng = random.Random(2)
        for _ in range(100):
            a = random_matrix(rng, 3)
            res = essential_trace(a)
            assert res.used_trace_branch == (not res.l_set or 1 in res.l_set)
            if res.l_set:
                assert res.mu == min(res.l_set)
            if res.used_trace_branch:
                assert res.value == a.trace()

    def test_nilpotent_matrices_have_zero_layer(self):
        rng = random.Random(3)
        for _ in range(500):
            n = rng.randint(2, 4)
            a = catalog.random_elt_nilpotent_matrix(rng, n)
            verdict = is_elt_nilpotent(a, n + 1)
            assert verdict, a
            assert essential_trace(a).value.layer == 0


class TestEltNilpotency:
    def test_strictly_upper_triangular(self):
        a = catalog.strictly_upper_triangular(3)
        verdict = is_elt_nilpotent(a, 5)
        assert verdict and verdict.step == 3

    def test_identity_decided_false(self):
        verdict = is_elt_nilpotent(identity_matrix(2), 10)
        assert verdict.decided and not verdict.value

    def test_quasi_zero_matrix_nilpotent_at_one(self):
        a = Matrix([[elt(1, 0), elt(3, 0)], [BOTTOM, elt(0, 0)]])
        verdict = is_elt_nilpotent(a, 3)
        assert verdict and verdict.step == 1

    def test_kmax_validated(self):
        with pytest.raises(ValueError):
            is_elt_nilpotent(identity_matrix(2), 0)


class TestKillingForm:
    def test_abelian_grams_are_quasi_zero(self):
        data = killing_form(catalog.abelian_algebra(3))
        assert data.gram.is_quasi_zero()
        assert data.essential_gram.is_quasi_zero()

    def test_sl2_layered_h_pairing(self):
        data = killing_form(catalog.sl2_layered())
        assert data.gram[(2, 2)] == elt(0, 8)

    def test_sl2_tangible_h_pairing(self):
        # ad_h squares to (4,1) on e and f, so the trace doubles the layer
        data = killing_form(catalog.sl2())
        assert data.gram[(2, 2)] == elt(4, 2)

    def test_gram_matches_direct_trace(self):
        alg = catalog.sl2_layered()
        data = killing_form(alg)
        basis = alg.basis()
        for i, bi in enumerate(basis):
            for j, bj in enumerate(basis):
                direct = mat_mul(
                    ad_matrix(bi, alg), ad_matrix(bj, alg)
                ).trace()
                assert data.gram[(i, j)] == direct

    def test_symmetry_on_random_verified_algebras(self):
        rng = random.Random(4)
        for _ in range(200):
            alg = catalog.random_verified_algebra(rng, dim=3)
            data = killing_form(alg)
            n = alg.dim
            for i in range(n):
                for j in range(n):
                    assert data.gram[(i, j)] == data.gram[(j, i)]
                    assert data.essential_gram[(i, j)] == data.essential_gram[(j, i)]

    def test_trace_commutes_oracle(self):
        rng = random.Random(5)
        for _ in range(100):
            a, b = random_matrix(rng, 3), random_matrix(rng, 3)
            assert mat_mul(a, b).trace() == mat_mul(b, a).trace()


class TestRadicalProbe:
    def test_abelian_is_degenerate(self):
        report = probe_form_radical(catalog.abelian_algebra(2), SMALL_GRID)
        assert report.degenerate

    def test_sl2_has_no_witness_in_default_grid(self):
        report = probe_form_radical(catalog.sl2(), DEFAULT_GRID)
        assert not report.degenerate
        report_layered = probe_form_radical(catalog.sl2_layered(), DEFAULT_GRID)
        assert not report_layered.degenerate

    def test_central_generator_is_a_witness(self):
        alg = catalog.central_extension_algebra()
        report = probe_form_radical(alg, SMALL_GRID, stop_at_first=False)
        assert report.degenerate
        central = alg.basis()[2]
        assert any(w == central for w in report.witnesses)

    def test_radical_members_pass_gram_rows(self):
        # inclusion of the plain-form radical in the essential one,
        # probed on the central-extension witness
        alg = catalog.central_extension_algebra()
        central = alg.basis()[2]
        for y in alg.basis():
            assert essential_killing_pair(alg, central, y).layer == 0


class TestCartanCheck:
    def test_sl2_consistent(self):
        report = cartan_check(catalog.sl2(), SMALL_GRID, ideal_samples=60)
        assert report.applicable
        assert report.consistent
        assert report.abelian_ideal_witness is None

    def test_abelian_not_applicable(self):
        report = cartan_check(catalog.abelian_algebra(2), SMALL_GRID)
        assert not report.applicable
        assert report.consistent

    def test_central_extension_is_degenerate_with_abelian_ideal(self):
        alg = catalog.central_extension_algebra()
        report = cartan_check(alg, SMALL_GRID, ideal_samples=40)
        assert not report.applicable  # degeneracy witness found
        # and the contrapositive data exists: a certified abelian ideal
        # outside the balanced submodule
        from eltlie.lie import IdealGenerators, certify_ideal

        center = IdealGenerators(alg, [alg.basis()[2]])
        certify_ideal(center, SMALL_GRID)
        assert not alg.basis()[2].is_quasi_zero()
        assert bracket(
            alg.basis()[2], alg.basis()[2], alg
        ).is_quasi_zero()

    def test_consistency_sweep_on_random_algebras(self):
        rng = random.Random(6)
        for _ in range(50):
            alg = catalog.random_verified_algebra(rng)
            report = cartan_check(alg, SMALL_GRID, ideal_samples=40, seed=1)
            assert report.consistent, repr(alg.constants.alpha)
