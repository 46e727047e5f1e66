"""Lie semialgebras with a negation map over the layered scalars.

Free algebras are given by a full structure-constant tensor
alpha[i][j][l] (the coordinates of the bracket of basis elements i and
j); matrix algebras carry the negated commutator. Axiom verification
checks the antisymmetry and alternating tensor constraints plus the
quasi-zero Jacobi membership on every basis triple, which bilinearity
extends to the whole module.

Ideals are represented by generator lists; series, solvability and
centrality questions reduce to generator computations, with span
membership delegated to the grid-bounded oracle where no exact
reduction exists.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .scalars import BOTTOM, ELT_MINUS_ONE, ELT_ONE, ELT_ZERO_LAYER_ONE, EltScalar, elt
from .linalg import (
    DEFAULT_GRID,
    Matrix,
    ShapeError,
    Vector,
    identity_matrix,
    mat_mul,
    projectively_equivalent,
    span_membership_grid,
    unit_vector,
    zero_vector,
)


class LieStructureError(ValueError):
    """Structure-constant data violating a construction precondition."""


class NonIdealError(ValueError):
    """A generator set failed grid-certified bracket closure."""


class StructureConstants:
    """The full tensor alpha[i][j][l], 0-based, dense."""

    __slots__ = ("dim", "alpha")

    def __init__(self, alpha: Sequence[Sequence[Sequence[EltScalar]]]):
        n = len(alpha)
        tensor = tuple(
            tuple(tuple(row) for row in plane) for plane in alpha
        )
        for plane in tensor:
            if len(plane) != n or any(len(r) != n for r in plane):
                raise ShapeError("structure tensor must be n x n x n")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "alpha", tensor)

    def __setattr__(self, name, value):
        raise AttributeError("StructureConstants is immutable")

    def entry(self, i: int, j: int, l: int) -> EltScalar:
        return self.alpha[i][j][l]

    @classmethod
    def from_entries(
        cls,
        dim: int,
        entries: Dict[Tuple[int, int, int], EltScalar],
        fill_antisymmetric: bool = False,
    ) -> "StructureConstants":
        """Build from a sparse 0-based map; missing entries are bottom.
        With fill_antisymmetric, absent (j, i, l) slots get the negated
        (i, j, l) value for i < j."""
        tensor = [
            [[BOTTOM for _ in range(dim)] for _ in range(dim)]
            for _ in range(dim)
        ]
        for (i, j, l), v in entries.items():
            tensor[i][j][l] = v
        if fill_antisymmetric:
            for (i, j, l), v in entries.items():
                if i != j and (j, i, l) not in entries:
                    tensor[j][i][l] = v.negate()
        return cls(tensor)

    def __eq__(self, other):
        return isinstance(other, StructureConstants) and self.alpha == other.alpha

    def __hash__(self):
        return hash(self.alpha)

    def __repr__(self):
        return f"StructureConstants(dim={self.dim})"


class FreeLieAlgebra:
    """A free module with a bracket given by structure constants."""

    __slots__ = ("constants", "labels")

    def __init__(self, constants: StructureConstants, labels: Optional[Sequence[str]] = None):
        if labels is None:
            labels = tuple(f"x{i + 1}" for i in range(constants.dim))
        labels = tuple(labels)
        if len(labels) != constants.dim:
            raise ShapeError("one label per basis element")
        object.__setattr__(self, "constants", constants)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("FreeLieAlgebra is immutable")

    @property
    def dim(self) -> int:
        return self.constants.dim

    def basis(self) -> List[Vector]:
        return [unit_vector(self.dim, i) for i in range(self.dim)]

    def zero(self) -> Vector:
        return zero_vector(self.dim)

    def __repr__(self):
        return f"FreeLieAlgebra({', '.join(self.labels)})"


def bracket(x: Vector, y: Vector, alg: FreeLieAlgebra) -> Vector:
    """Bilinear extension of the structure-constant table."""
    n = alg.dim
    if len(x) != n or len(y) != n:
        raise ShapeError("coordinate length must match the algebra dimension")
    a = alg.constants.alpha
    out = [BOTTOM] * n
    for i in range(n):
        xi = x[i]
        if xi.is_bottom:
            continue
        for j in range(n):
            yj = y[j]
            if yj.is_bottom:
                continue
            c = xi * yj
            row = a[i][j]
            for l in range(n):
                if not row[l].is_bottom:
                    out[l] = out[l] + c * row[l]
    return Vector(out)


def negated_commutator(a: Matrix, b: Matrix) -> Matrix:
    """AB - BA on square matrices of equal size."""
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeError("matrix size mismatch")
    return mat_mul(a, b) + mat_mul(b, a).negate()


class AxiomReport:
    """Outcome of verifying the Lie axioms on a structure tensor.

    Violations are recorded with 1-based indices; ``cyclic_sums``
    stores the value of the (i,j,k)-cyclic Jacobi sum for every basis
    triple and target coordinate m.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.antisymmetry_violations: List[Tuple[int, int, int]] = []
        self.alternating_violations: List[Tuple[int, int, int]] = []
        self.jacobi_violations: List[Tuple[int, int, int, int]] = []
        self.cyclic_sums: Dict[Tuple[int, int, int, int], EltScalar] = {}

    @property
    def passed(self) -> bool:
        return not (
            self.antisymmetry_violations
            or self.alternating_violations
            or self.jacobi_violations
        )

    def sums_for_triple(self, i: int, j: int, k: int) -> List[EltScalar]:
        return [self.cyclic_sums[(i, j, k, m)] for m in range(1, self.dim + 1)]

    def __repr__(self):
        state = "pass" if self.passed else (
            f"FAIL anti={self.antisymmetry_violations} "
            f"alt={self.alternating_violations} jac={self.jacobi_violations}"
        )
        return f"AxiomReport(dim={self.dim}, {state})"


def cyclic_jacobi_sum(c: StructureConstants, i: int, j: int, k: int, m: int) -> EltScalar:
    """Sum over the cyclic rotations of (i,j,k) of
    sum_l alpha[i][l][m] alpha[j][k][l]; quasi-zero for every m iff the
    basis triple satisfies Jacobi."""
    a = c.alpha
    total = BOTTOM
    for (p, q, r) in ((i, j, k), (k, i, j), (j, k, i)):
        for l in range(c.dim):
            total = total + a[p][l][m] * a[q][r][l]
    return total


def verify_axioms(source) -> AxiomReport:
    """Check the tensor constraints making the bilinear extension a Lie
    semialgebra: negated antisymmetry, alternating diagonals, and the
    quasi-zero Jacobi sums on all basis triples."""
    constants = source.constants if isinstance(source, FreeLieAlgebra) else source
    n = constants.dim
    a = constants.alpha
    report = AxiomReport(n)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                if a[j][i][l] != a[i][j][l].negate():
                    report.antisymmetry_violations.append((j + 1, i + 1, l + 1))
    for i in range(n):
        for l in range(n):
            if not a[i][i][l].is_quasi_zero():
                report.alternating_violations.append((i + 1, i + 1, l + 1))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    s = cyclic_jacobi_sum(constants, i, j, k, m)
                    report.cyclic_sums[(i + 1, j + 1, k + 1, m + 1)] = s
                    if not s.is_quasi_zero():
                        report.jacobi_violations.append((i + 1, j + 1, k + 1, m + 1))
    return report


class StrongJacobiReport:
    """Sampled check of [x,[y,z]] - [y,[x,z]] surpassing [[x,y],z]."""

    def __init__(self):
        self.checked = 0
        self.failures: List[Tuple] = []

    @property
    def passed(self) -> bool:
        return not self.failures

    def __repr__(self):
        state = "pass" if self.passed else f"{len(self.failures)} failures"
        return f"StrongJacobiReport(checked={self.checked}, {state})"


def strong_jacobi_holds(x, y, z, brack: Callable, neg: Callable) -> bool:
    lhs = brack(x, brack(y, z)) + neg(brack(y, brack(x, z)))
    return lhs.surpasses(brack(brack(x, y), z))


def verify_strong_jacobi(
    brack: Callable,
    sampler: Callable,
    samples: int,
    seed: int = 0,
    neg: Callable = lambda v: v.negate(),
) -> StrongJacobiReport:
    """Sample triples from ``sampler(rng)`` and test the surpassing form
    of Jacobi. The weak form does not imply it; algebras built from
    associative products satisfy it identically."""
    rng = random.Random(seed)
    report = StrongJacobiReport()
    for _ in range(samples):
        x, y, z = sampler(rng), sampler(rng), sampler(rng)
        report.checked += 1
        if not strong_jacobi_holds(x, y, z, brack, neg):
            report.failures.append((x, y, z))
    return report


def verify_strong_jacobi_triple(x, y, z, alg: FreeLieAlgebra) -> bool:
    return strong_jacobi_holds(
        x, y, z, lambda u, v: bracket(u, v, alg), lambda v: v.negate()
    )


def construct_2dim(
    a1: EltScalar, a2: EltScalar,
    b1: EltScalar, b2: EltScalar,
    g1: EltScalar, g2: EltScalar,
    labels: Optional[Sequence[str]] = None,
) -> FreeLieAlgebra:
    """Two-dimensional free Lie semialgebra from the six bracket
    coordinates [x1,x1] = a1 x1 + a2 x2, [x2,x2] = b1 x1 + b2 x2,
    [x1,x2] = -[x2,x1] = g1 x1 + g2 x2. The diagonal coordinates must
    be quasi-zero; Jacobi then holds automatically."""
    for name, v in (("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)):
        if not v.is_quasi_zero():
            raise LieStructureError(f"{name} = {v!r} must be quasi-zero")
    entries = {
        (0, 0, 0): a1, (0, 0, 1): a2,
        (1, 1, 0): b1, (1, 1, 1): b2,
        (0, 1, 0): g1, (0, 1, 1): g2,
        (1, 0, 0): g1.negate(), (1, 0, 1): g2.negate(),
    }
    constants = StructureConstants.from_entries(2, entries)
    alg = FreeLieAlgebra(constants, labels)
    report = verify_axioms(alg)
    if not report.passed:
        raise LieStructureError(f"verification failed unexpectedly: {report!r}")
    return alg


def construct_3dim(
    constants: StructureConstants, labels: Optional[Sequence[str]] = None
) -> FreeLieAlgebra:
    """Three-dimensional construction: antisymmetry and alternating
    tensor constraints plus the single (1,2,3) cyclic-sum condition per
    target coordinate, which suffices for full Jacobi."""
    if constants.dim != 3:
        raise LieStructureError("construct_3dim needs a 3 x 3 x 3 tensor")
    a = constants.alpha
    for i in range(3):
        for j in range(3):
            for l in range(3):
                if a[j][i][l] != a[i][j][l].negate():
                    raise LieStructureError(
                        f"antisymmetry fails at (i,j,l)=({j + 1},{i + 1},{l + 1})"
                    )
    for i in range(3):
        for l in range(3):
            if not a[i][i][l].is_quasi_zero():
                raise LieStructureError(
                    f"alternating fails at (i,i,l)=({i + 1},{i + 1},{l + 1})"
                )
    for m in range(3):
        s = cyclic_jacobi_sum(constants, 0, 1, 2, m)
        if not s.is_quasi_zero():
            raise LieStructureError(
                f"cyclic-sum condition fails at m={m + 1}: {s!r}"
            )
    return FreeLieAlgebra(constants, labels)


def ad_matrix(x: Vector, alg: FreeLieAlgebra) -> Matrix:
    """Column j is the bracket of x with the j-th basis vector."""
    n = alg.dim
    if len(x) != n:
        raise ShapeError("coordinate length must match the algebra dimension")
    cols = [bracket(x, b, alg) for b in alg.basis()]
    return Matrix(tuple(cols[j][m] for j in range(n)) for m in range(n))


def in_center(x: Vector, alg: FreeLieAlgebra) -> bool:
    """Quasi-zero brackets against every basis vector; bilinearity and
    the submodule property of the quasi-zero set make this exact."""
    return all(bracket(x, b, alg).is_quasi_zero() for b in alg.basis())


# --- matrix families ---

def e_matrix(n: int, i: int, j: int) -> Matrix:
    """The matrix unit with the multiplicative identity in slot (i, j)."""
    return Matrix(
        tuple(ELT_ONE if (r, c) == (i, j) else BOTTOM for c in range(n))
        for r in range(n)
    )


def transpose_involution(a: Matrix) -> Matrix:
    return a.transpose()


def symplectic_involution(a: Matrix) -> Matrix:
    """Block involution on 2n x 2n matrices:
    [[A,B],[C,D]] -> [[D^t, -B^t], [-C^t, A^t]]."""
    if a.rows != a.cols or a.rows % 2 != 0:
        raise ShapeError("symplectic involution needs an even square matrix")
    n = a.rows // 2

    def entry(r: int, c: int) -> EltScalar:
        if r < n and c < n:
            return a[(n + c, n + r)]
        if r < n and c >= n:
            return a[(c - n, n + r)].negate()
        if r >= n and c < n:
            return a[(n + c, r - n)].negate()
        return a[(c - n, r - n)]

    return Matrix(
        tuple(entry(r, c) for c in range(2 * n)) for r in range(2 * n)
    )


class ClassicalFamily:
    """A classical matrix Lie family: generator list plus a membership
    predicate (and the defining involution where there is one)."""

    def __init__(
        self,
        kind: str,
        rank: int,
        size: int,
        generators: List[Matrix],
        labels: List[str],
        membership: Callable[[Matrix], bool],
        involution: Optional[Callable[[Matrix], Matrix]] = None,
    ):
        self.kind = kind
        self.rank = rank
        self.size = size
        self.generators = generators
        self.labels = labels
        self.membership = membership
        self.involution = involution

    def __repr__(self):
        return f"ClassicalFamily({self.kind}_{self.rank}, size={self.size}, gens={len(self.generators)})"


def classical_algebra(kind: str, n: int) -> ClassicalFamily:
    """The negated classical families.

    gl: all matrix units of gl(n). A: trace of layer zero inside
    gl(n+1). B/D: skew-symmetric under transpose in odd/even size.
    C: skew-symmetric under the symplectic involution, with the three
    listed generator families (3 n^2 generators).
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    if kind == "gl":
        size = n
        gens = [e_matrix(size, i, j) for i in range(size) for j in range(size)]
        labels = [f"e[{i + 1},{j + 1}]" for i in range(size) for j in range(size)]
        return ClassicalFamily("gl", n, size, gens, labels, lambda m: True)

    if kind == "A":
        size = n + 1
        gens, labels = [], []
        for i in range(size):
            for j in range(size):
                if i != j:
                    gens.append(e_matrix(size, i, j))
                    labels.append(f"e[{i + 1},{j + 1}]")
        for i in range(size):
            for j in range(i + 1, size):
                gens.append(e_matrix(size, i, i) + e_matrix(size, j, j).negate())
                labels.append(f"h[{i + 1},{j + 1}]")
        for i in range(size):
            gens.append(e_matrix(size, i, i).scale(ELT_ZERO_LAYER_ONE))
            labels.append(f"z[{i + 1}]")

        def a_member(m: Matrix) -> bool:
            tr = m.trace()
            return tr.is_quasi_zero()

        return ClassicalFamily("A", n, size, gens, labels, a_member)

    if kind in ("B", "D"):
        size = 2 * n + 1 if kind == "B" else 2 * n
        gens, labels = [], []
        for i in range(size):
            for j in range(i + 1, size):
                gens.append(e_matrix(size, i, j) + e_matrix(size, j, i).negate())
                labels.append(f"s[{i + 1},{j + 1}]")
        for i in range(size):
            gens.append(e_matrix(size, i, i).scale(ELT_ZERO_LAYER_ONE))
            labels.append(f"z[{i + 1}]")

        def skew_member(m: Matrix) -> bool:
            return transpose_involution(m) == m.negate()

        return ClassicalFamily(
            kind, n, size, gens, labels, skew_member, transpose_involution
        )

    if kind == "C":
        size = 2 * n
        gens, labels = [], []
        for i in range(n):
            for j in range(n):
                gens.append(
                    e_matrix(size, i, j) + e_matrix(size, n + j, n + i).negate()
                )
                labels.append(f"a[{i + 1},{j + 1}]")
        for i in range(n):
            for j in range(n):
                gens.append(e_matrix(size, i, n + j) + e_matrix(size, j, n + i))
                labels.append(f"b[{i + 1},{j + 1}]")
        for i in range(n):
            for j in range(n):
                gens.append(e_matrix(size, n + i, j) + e_matrix(size, n + j, i))
                labels.append(f"c[{i + 1},{j + 1}]")

        def symp_member(m: Matrix) -> bool:
            return symplectic_involution(m) == m.negate()

        return ClassicalFamily(
            "C", n, size, gens, labels, symp_member, symplectic_involution
        )

    raise ValueError(f"unknown family kind {kind!r}")


# --- ideals, series, solvability ---

class IdealGenerators:
    """A generator list inside a fixed ambient free algebra. The
    represented set is the span; bracket closure is certified on
    demand, never assumed."""

    def __init__(self, ambient: FreeLieAlgebra, gens: Sequence[Vector]):
        gens = list(gens)
        for g in gens:
            if len(g) != ambient.dim:
                raise ShapeError("generator length must match the algebra dimension")
        self.ambient = ambient
        self.gens = gens

    def all_quasi_zero(self) -> bool:
        return all(g.is_quasi_zero() for g in self.gens)

    def __repr__(self):
        return f"IdealGenerators({len(self.gens)} gens in {self.ambient!r})"


def bracket_of_spans(i: IdealGenerators, j: IdealGenerators) -> IdealGenerators:
    """Generators of [Span I, Span J]: the pairwise generator brackets
    (bilinearity makes this reduction exact)."""
    if i.ambient is not j.ambient and i.ambient.constants != j.ambient.constants:
        raise ValueError("ideals live in different ambient algebras")
    alg = i.ambient
    gens = [bracket(g, h, alg) for g in i.gens for h in j.gens]
    return IdealGenerators(alg, reduce_generators(gens))


def reduce_generators(gens: Sequence[Vector]) -> List[Vector]:
    """Drop exact duplicates and projective multiples; the span is
    unchanged because the dropped scalars are invertible."""
    out: List[Vector] = []
    seen = set()
    for g in gens:
        if g.entries in seen:
            continue
        if any(projectively_equivalent(kept, g) for kept in out):
            continue
        seen.add(g.entries)
        out.append(g)
    return out


def _projective_set_equal(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    return len(a) == len(b) and all(
        any(projectively_equivalent(x, y) for y in b) for x in a
    ) and all(any(projectively_equivalent(y, x) for x in a) for y in b)


def derived_series_from(start: IdealGenerators, k_max: int) -> List[IdealGenerators]:
    """Derived series of the span of a generator set."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    steps = [start]
    for _ in range(k_max):
        prev = steps[-1]
        steps.append(bracket_of_spans(prev, prev))
    return steps


def derived_series(alg: FreeLieAlgebra, k_max: int) -> List[IdealGenerators]:
    """Generator sets of the derived series, step 0 the basis itself."""
    return derived_series_from(IdealGenerators(alg, alg.basis()), k_max)


def lower_central_series(alg: FreeLieAlgebra, k_max: int) -> List[IdealGenerators]:
    """Generator sets of the descending central series."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    whole = IdealGenerators(alg, alg.basis())
    steps = [whole]
    for _ in range(k_max):
        steps.append(bracket_of_spans(whole, steps[-1]))
    return steps


class Verdict:
    """Decision of a bounded series question.

    ``value`` is meaningful when ``decided``; an undecided verdict
    means the bound ran out before the series stabilized or died.
    """

    def __init__(self, decided: bool, value: bool = False, step: Optional[int] = None, reason: str = ""):
        self.decided = decided
        self.value = value
        self.step = step
        self.reason = reason

    def __bool__(self):
        return self.decided and self.value

    def __repr__(self):
        if not self.decided:
            return f"Verdict(inconclusive, {self.reason})"
        return f"Verdict({self.value}, step={self.step}, {self.reason})"


def _series_verdict(steps_iter, k_max: int, member: Callable[[IdealGenerators], bool]) -> Verdict:
    prev: Optional[IdealGenerators] = None
    for k, step in enumerate(steps_iter):
        if member(step):
            return Verdict(True, True, step=k, reason="generators reached the target span")
        if prev is not None and _projective_set_equal(prev.gens, step.gens):
            return Verdict(True, False, step=k, reason="series reached a fixpoint outside the target")
        prev = step
    return Verdict(False, reason=f"undecided within k_max={k_max}")


def is_solvable(alg: FreeLieAlgebra, k_max: int) -> Verdict:
    """Some derived step lands in the quasi-zero submodule (exact on
    generators); a projective fixpoint outside it decides False."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    return _series_verdict(derived_series(alg, k_max), k_max, lambda s: s.all_quasi_zero())


def is_solvable_span(start: IdealGenerators, k_max: int) -> Verdict:
    """Solvability of the subalgebra spanned by a generator set."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    return _series_verdict(
        derived_series_from(start, k_max), k_max, lambda s: s.all_quasi_zero()
    )


def is_nilpotent(alg: FreeLieAlgebra, k_max: int) -> Verdict:
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    return _series_verdict(
        lower_central_series(alg, k_max), k_max, lambda s: s.all_quasi_zero()
    )


def is_abelian(alg: FreeLieAlgebra) -> bool:
    """All pairwise basis brackets quasi-zero; exact."""
    bs = alg.basis()
    return all(
        bracket(x, y, alg).is_quasi_zero() for x in bs for y in bs
    )


def _exact_multiple_of(x: Vector, g: Vector) -> bool:
    """x == c g for some scalar c, solved exactly when a coordinate of
    g is invertible."""
    for xi, gi in zip(x.entries, g.entries):
        if not gi.is_quasi_zero() and not xi.is_bottom:
            c = xi * gi.inverse()
            return g.scale(c) == x
    return False


def _span_member_for_ideal(
    x: Vector, gens: Sequence[Vector], grid: Sequence[EltScalar]
) -> bool:
    # exact shortcuts first: the zero vector is 0_R times any generator
    # (no quasi-zero-free grid can witness that), and single-generator
    # multiples are solvable by division; the grid search is the
    # general, one-sided fallback
    if x.is_zero():
        return True
    if any(_exact_multiple_of(x, g) for g in gens):
        return True
    return span_membership_grid(x, gens, grid)


def certify_ideal(i: IdealGenerators, grid: Sequence[EltScalar] = DEFAULT_GRID) -> None:
    """Grid-certified bracket closure of the span against the ambient
    basis; raises NonIdealError with the failing pair."""
    alg = i.ambient
    if not i.gens:
        raise NonIdealError("an ideal needs at least one generator")
    for gi, g in enumerate(i.gens):
        for bj, b in enumerate(alg.basis()):
            br = bracket(g, b, alg)
            if not _span_member_for_ideal(br, i.gens, grid):
                raise NonIdealError(
                    f"[gen {gi + 1}, basis {bj + 1}] = {br!r} has no grid witness in the span"
                )


def solvable_modulo(
    alg: FreeLieAlgebra,
    ideal: IdealGenerators,
    k_max: int,
    grid: Sequence[EltScalar] = DEFAULT_GRID,
) -> Verdict:
    """Some derived step lies (grid-witnessed) in the span of the ideal
    generators. The ideal is certified first."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    certify_ideal(ideal, grid)
    member = lambda s: all(
        _span_member_for_ideal(g, ideal.gens, grid) for g in s.gens
    )
    return _series_verdict(derived_series(alg, k_max), k_max, member)


def nilpotent_modulo(
    alg: FreeLieAlgebra,
    ideal: IdealGenerators,
    k_max: int,
    grid: Sequence[EltScalar] = DEFAULT_GRID,
) -> Verdict:
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    certify_ideal(ideal, grid)
    member = lambda s: all(
        _span_member_for_ideal(g, ideal.gens, grid) for g in s.gens
    )
    return _series_verdict(lower_central_series(alg, k_max), k_max, member)
