"""Acceptance gate: the ten end-to-end criteria.

Each test prints one pass/fail line (visible with -s or on failure)
and enforces its wall-clock budget. All value checks are exact.
"""

import itertools
import json
import random
import time

from eltlie.scalars import (
    BOTTOM,
    ELT_ONE,
    EltScalar,
    elt,
    supertropical,
    sym,
)
from eltlie.linalg import (
    DEFAULT_GRID,
    SMALL_GRID,
    Matrix,
    Vector,
    elt_determinant,
    is_dependent_det,
    matrix_from_columns,
    projectively_equivalent,
    span_membership_grid,
    unit_vector,
)
from eltlie.lift import (
    dependence_via_lift,
    free_elt_lift,
    puiseux_elt_lift,
    verify_lift_laws,
)
from eltlie.lie import (
    classical_algebra,
    negated_commutator,
    verify_strong_jacobi,
    verify_strong_jacobi_triple,
)
from eltlie.cartan import cartan_check, essential_trace, is_elt_nilpotent
from eltlie.pbw import pbw_counterexample
from eltlie.cli import main as cli_main
from eltlie import catalog


def _report(number, description, elapsed, budget):
    status = "PASS"
    print(f"[{status}] criterion {number}: {description} ({elapsed:.2f}s / {budget}s)")
    assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget"


def test_criterion_01_sl2_verification(capsys):
    start = time.perf_counter()
    code = cli_main(["lie-check", "--builtin", "sl2"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["passed"]
    assert out["cyclic_sums_123"] == [
        "bottom",
        "bottom",
        {"t": "2", "layer": "0"},
    ]
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(1, "sl2-type verification, cyclic sums bottom/bottom/(2,0)", elapsed, 1.0)


def test_criterion_02_determinant_golden(capsys):
    start = time.perf_counter()
    u1 = Vector([elt(1, 1), elt(0, 1), elt(0, 1)])
    u2 = Vector([elt(0, 1), elt(1, 1), elt(1, 1)])
    u3 = Vector([elt(1, 1), elt(0, -1), elt(0, 1)])
    m = matrix_from_columns([u1, u2, u3])
    assert elt_determinant(m) == elt(2, 2)

    def brute_force(mat):
        n = mat.rows
        total = None
        for perm in itertools.permutations(range(n)):
            inversions = sum(
                1
                for a in range(n)
                for b in range(a + 1, n)
                if perm[a] > perm[b]
            )
            term = elt(0, 1) if inversions % 2 == 0 else elt(0, -1)
            for i in range(n):
                term = term * mat[(i, perm[i])]
            total = term if total is None else total + term
        return total

    assert brute_force(m) == elt(2, 2)
    assert not is_dependent_det([u1, u2, u3])
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(2, "determinant of the worked 3x3 family is exactly (2,2)", elapsed, 1.0)


def test_criterion_03_a1_relations(capsys):
    start = time.perf_counter()
    fam = classical_algebra("A", 1)
    e, f, h = fam.generators[:3]
    assert negated_commutator(e, f) == h
    assert negated_commutator(e, h) == e.scale(elt(0, -2))
    assert negated_commutator(f, h) == f.scale(elt(0, 2))
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(3, "A1 relations [e,f]=h, [e,h]=(0,-2)e, [f,h]=(0,2)f", elapsed, 1.0)


def test_criterion_04_sbase_nonequivalence(capsys):
    start = time.perf_counter()
    v1 = Vector([elt(0, 1), elt(0, 1), elt(0, 0)])
    v2 = Vector([elt(0, 1), BOTTOM, BOTTOM])
    v3 = Vector([BOTTOM, elt(0, 1), elt(-1, 1)])
    v1p = Vector([elt(0, 1), elt(0, 0), elt(0, 0)])
    s, sp = [v1, v2, v3], [v1p, v2, v3]

    # the displayed identity, exactly
    assert v1.scale(elt(0, 0)) + v2 + v3 == v1p + v3
    assert v1p + v3 == v1

    # each spanning set generates the other's generators under the grid
    assert all(span_membership_grid(g, sp, DEFAULT_GRID) for g in s)
    assert all(span_membership_grid(g, s, DEFAULT_GRID) for g in sp)

    # and the two sets are genuinely not projectively equivalent
    assert not any(projectively_equivalent(v1, w) for w in sp)
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(4, "the two spanning sets generate each other; identity exact", elapsed, 5.0)


def test_criterion_05_pbw_counterexample(capsys):
    start = time.perf_counter()
    report = pbw_counterexample(samples=200, seed=0)
    assert report.y1 == Vector([elt(1, 0), elt(1, 0)])
    assert report.y2 == Vector([elt(2, 0), elt(2, 0)])
    assert report.surpass_y2_y1
    assert not report.equal
    assert report.strong_jacobi_in_free
    assert report.conclusion == "no injective morphism exists"
    code = cli_main(["pbw"])
    capsys.readouterr()
    assert code == 0
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(5, "enveloping counterexample end to end, exit 0", elapsed, 5.0)


def test_criterion_06_axiom_property_suites(capsys):
    start = time.perf_counter()
    rng = random.Random(0)

    def rand_elt():
        if rng.random() < 0.15:
            return BOTTOM
        return elt(rng.randint(-6, 6), rng.randint(-5, 5))

    def rand_super():
        if rng.random() < 0.15:
            return supertropical(None)
        return supertropical(rng.randint(-6, 6), rng.random() < 0.4)

    def rand_pair():
        return sym(rng.randint(0, 10), rng.randint(0, 10))

    failures = 0
    for sampler in (rand_elt, rand_super, rand_pair):
        for _ in range(1000):
            a, b, c = sampler(), sampler(), sampler()
            if (a + b).negate() != a.negate() + b.negate():
                failures += 1
            if (a * b).negate() != a * b.negate() or (a * b).negate() != a.negate() * b:
                failures += 1
            if a.negate().negate() != a:
                failures += 1
            if a.zero().negate() != a.zero():
                failures += 1

    for _ in range(1000):
        a, b, c = rand_elt(), rand_elt(), rand_elt()
        if not a.surpasses(a):
            failures += 1
        if a.surpasses(b) and b.surpasses(c) and not a.surpasses(c):
            failures += 1
        if a.surpasses(b) and b.surpasses(a) and a != b:
            failures += 1

    for _ in range(1000):
        p, q, r = rand_pair(), rand_pair(), rand_pair()
        if (p * q) * r != p * (q * r) or p * q != q * p:
            failures += 1
        if sym(0, 1) * p != p.negate():
            failures += 1

    assert failures == 0
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(6, "negation/surpassing/twist suites, 1000+ cases each, zero failures", elapsed, 30.0)


def test_criterion_07_lift_laws_and_rank(capsys):
    start = time.perf_counter()
    for contract in (puiseux_elt_lift(), free_elt_lift()):
        report = verify_lift_laws(contract, samples=1000, seed=0)
        assert report.passed, report

    values = [elt(0, 1), elt(1, 1)]
    for n in (1, 2, 3):
        for assignment in itertools.product(values, repeat=n * (n + 1)):
            vectors = [
                Vector(assignment[i * n : (i + 1) * n]) for i in range(n + 1)
            ]
            cert = dependence_via_lift(vectors)
            assert cert.verify()

    rng = random.Random(1)
    for seed in range(100):
        n = rng.randint(2, 5)
        vectors = [
            Vector(
                [
                    elt(rng.randint(-4, 4), rng.choice((-2, -1, 1, 2)))
                    if rng.random() < 0.9
                    else BOTTOM
                    for _ in range(n)
                ]
            )
            for _ in range(n + 1)
        ]
        cert = dependence_via_lift(vectors, seed=seed)
        assert cert.verify()

    for n in (2, 3, 4, 5):
        assert not is_dependent_det([unit_vector(n, i) for i in range(n)])
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(7, "lift laws (2x1000) and rank transfer (exhaustive n<=3, random n<=5)", elapsed, 60.0)


def test_criterion_08_essential_trace_invariant(capsys):
    start = time.perf_counter()
    rng = random.Random(2)
    for _ in range(500):
        n = rng.randint(2, 4)
        a = catalog.random_elt_nilpotent_matrix(rng, n)
        assert is_elt_nilpotent(a, n + 1)
        assert essential_trace(a).value.layer == 0
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(8, "500 nilpotent matrices, essential trace layer zero", elapsed, 30.0)


def test_criterion_09_cartan_consistency(capsys):
    start = time.perf_counter()
    rng = random.Random(3)
    checked = 0
    for _ in range(50):
        alg = catalog.random_verified_algebra(rng)
        report = cartan_check(alg, SMALL_GRID, ideal_samples=40, seed=1)
        assert report.consistent, repr(alg.constants.alpha)
        checked += 1
    assert checked == 50
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(9, "50 verified algebras, criterion never violated", elapsed, 60.0)


def test_criterion_10_strong_jacobi_separation(capsys):
    start = time.perf_counter()
    rng_sampler = lambda rng: Matrix(
        tuple(
            BOTTOM if rng.random() < 0.2 else elt(rng.randint(-3, 3), rng.randint(-2, 2))
            for _ in range(2)
        )
        for _ in range(2)
    )
    report = verify_strong_jacobi(
        negated_commutator, rng_sampler, samples=500, seed=0
    )
    assert report.passed

    alg = catalog.disproof_algebra()
    x1, x2 = alg.basis()
    assert not verify_strong_jacobi_triple(x1, x1, x2, alg)
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(10, "gl(2) passes strong Jacobi; the 2-dim algebra fails on (x1,x1,x2)", elapsed, 10.0)
