"""Canonical algebras used by the CLI demos and the test suite."""

from __future__ import annotations

import random
from typing import List, Optional

from .scalars import BOTTOM, ELT_ONE, EltScalar, elt
from .linalg import Matrix, Vector
from .lie import (
    FreeLieAlgebra,
    LieStructureError,
    StructureConstants,
    construct_2dim,
    construct_3dim,
    cyclic_jacobi_sum,
)


def sl2(two: EltScalar = elt(2, 1)) -> FreeLieAlgebra:
    """The three-dimensional algebra with the classical relations
    [e,f] = h, [h,e] = 2e, [h,f] = 2f, where the doubling scalar is a
    parameter. The default carries the doubling on the tangible value;
    ``sl2_layered`` puts it in the layer (e + e)."""
    one = ELT_ONE
    entries = {
        (0, 1, 2): one,
        (2, 0, 0): two,
        (2, 1, 1): two.negate(),
    }
    constants = StructureConstants.from_entries(3, entries, fill_antisymmetric=True)
    return construct_3dim(constants, labels=("e", "f", "h"))


def sl2_layered() -> FreeLieAlgebra:
    """The doubling read as repeated addition: 2e = e + e = (0,2)e."""
    return sl2(two=elt(0, 2))


def disproof_algebra() -> FreeLieAlgebra:
    """The two-dimensional algebra separating weak from strong Jacobi:
    [x1,x1] = [x2,x2] = (1,0)x1 + (1,0)x2, [x1,x2] = x1 + x2."""
    one0 = elt(1, 0)
    return construct_2dim(one0, one0, one0, one0, ELT_ONE, ELT_ONE)


def abelian_algebra(dim: int) -> FreeLieAlgebra:
    """All brackets bottom."""
    tensor = [
        [[BOTTOM for _ in range(dim)] for _ in range(dim)] for _ in range(dim)
    ]
    return FreeLieAlgebra(StructureConstants(tensor))


def heisenberg_algebra() -> FreeLieAlgebra:
    """[x1,x2] = x3 with x3 central; nilpotent in two steps."""
    constants = StructureConstants.from_entries(
        3, {(0, 1, 2): ELT_ONE}, fill_antisymmetric=True
    )
    return construct_3dim(constants, labels=("p", "q", "z"))


def central_extension_algebra() -> FreeLieAlgebra:
    """[x1,x2] = x1 with x3 central: a solvable part plus a central
    line, so the essential Killing form is degenerate and span{x3} is
    an abelian ideal outside the quasi-zero submodule."""
    constants = StructureConstants.from_entries(
        3, {(0, 1, 0): ELT_ONE}, fill_antisymmetric=True
    )
    return construct_3dim(constants)


def strictly_upper_triangular(n: int, layer: int = 1) -> Matrix:
    """Strictly upper triangular matrix with non-zero-layer entries;
    its n-th power is entrywise bottom."""
    return Matrix(
        tuple(
            elt(i + j, layer) if j > i else BOTTOM for j in range(n)
        )
        for i in range(n)
    )


def random_verified_algebra(rng: random.Random, dim: Optional[int] = None) -> FreeLieAlgebra:
    """A random verified 2- or 3-dimensional algebra.

    Mixes guaranteed families (abelian, rescaled sl2-type, Heisenberg,
    central extensions, 2-dim lemma instances) with rejection-sampled
    sparse 3-dim tensors; always returns a verified algebra.
    """
    if dim is None:
        dim = rng.choice((2, 2, 3))
    if dim == 2:
        choices = [elt(0, 0), elt(1, 0), elt(-1, 0), BOTTOM]
        a1, a2, b1, b2 = (rng.choice(choices) for _ in range(4))
        g = [
            rng.choice([BOTTOM, ELT_ONE, elt(0, -1), elt(1, 1), elt(0, 2)])
            for _ in range(2)
        ]
        return construct_2dim(a1, a2, b1, b2, g[0], g[1])

    family = rng.random()
    if family < 0.25:
        return abelian_algebra(3)
    if family < 0.45:
        scale = rng.choice([ELT_ONE, elt(0, 2), elt(1, 1), elt(0, -1)])
        two = rng.choice([elt(0, 2), elt(2, 1), elt(1, 2)])
        entries = {
            (0, 1, 2): scale,
            (2, 0, 0): two,
            (2, 1, 1): two.negate(),
        }
        constants = StructureConstants.from_entries(
            3, entries, fill_antisymmetric=True
        )
        return construct_3dim(constants)
    if family < 0.6:
        return heisenberg_algebra()
    if family < 0.7:
        return central_extension_algebra()

    pool = [BOTTOM, BOTTOM, ELT_ONE, elt(0, -1), elt(0, 2), elt(1, 1), elt(-1, -1)]
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
        if all(
            cyclic_jacobi_sum(constants, 0, 1, 2, m).is_quasi_zero()
            for m in range(3)
        ):
            return construct_3dim(constants)
    return heisenberg_algebra()


def random_elt_nilpotent_matrix(rng: random.Random, n: int) -> Matrix:
    """A random matrix whose powers die: a strictly triangular layered
    matrix conjugated by a permutation, or an entrywise quasi-zero one."""
    kind = rng.random()
    if kind < 0.25:
        return Matrix(
            tuple(
                elt(rng.randint(-3, 3), 0) if rng.random() < 0.7 else BOTTOM
                for _ in range(n)
            )
            for _ in range(n)
        )
    strict = [
        [
            elt(rng.randint(-3, 3), rng.choice((-2, -1, 1, 2)))
            if j > i and rng.random() < 0.8
            else BOTTOM
            for j in range(n)
        ]
        for i in range(n)
    ]
    perm = list(range(n))
    rng.shuffle(perm)
    return Matrix(
        tuple(strict[perm[i]][perm[j]] for j in range(n)) for i in range(n)
    )
