"""Vectors, matrices and polynomials over negation-map scalars.

Everything is generic over the shared scalar signature (add, mul,
negate, is_quasi_zero, surpasses, zero, one), so the same determinant
code runs on layered scalars and on polynomials of them.

The brute-force dependence / span / criticality oracles are grid
bounded and one sided: True certifies a witness, False only means "no
witness with coefficients from this grid".
"""

from __future__ import annotations

import itertools
from typing import Iterable, List, Optional, Sequence, Tuple

from .scalars import BOTTOM, ELT_ONE, EltScalar, elt


class ShapeError(ValueError):
    """Dimension mismatch between operands."""


class EmptyGridError(ValueError):
    """A coefficient grid must contain at least one scalar."""


class NotInSpanError(ValueError):
    """Coordinate resolution found no representation."""


class AmbiguousRepresentationError(ValueError):
    """Coordinate resolution found two distinct representations."""


class Vector:
    """Immutable tuple of scalars with componentwise structure."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "Vector") -> "Vector":
        if len(self) != len(other):
            raise ShapeError(f"vector lengths {len(self)} != {len(other)}")
        return Vector(a + b for a, b in zip(self.entries, other.entries))

    def scale(self, alpha) -> "Vector":
        return Vector(alpha * a for a in self.entries)

    def __rmul__(self, alpha) -> "Vector":
        return self.scale(alpha)

    def negate(self) -> "Vector":
        return Vector(a.negate() for a in self.entries)

    __neg__ = negate

    def is_quasi_zero(self) -> bool:
        """Membership in the quasi-zero submodule: componentwise."""
        return all(a.is_quasi_zero() for a in self.entries)

    def is_zero(self) -> bool:
        """The adjoined zero vector: every entry is the scalar zero."""
        return all(a == a.zero() for a in self.entries)

    def surpasses(self, other: "Vector") -> bool:
        if len(self) != len(other):
            raise ShapeError(f"vector lengths {len(self)} != {len(other)}")
        return all(a.surpasses(b) for a, b in zip(self.entries, other.entries))

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "vec[" + ", ".join(repr(a) for a in self.entries) + "]"


def zero_vector(n: int, zero=BOTTOM) -> Vector:
    return Vector([zero] * n)


def unit_vector(n: int, i: int, one=ELT_ONE, zero=BOTTOM) -> Vector:
    return Vector([one if j == i else zero for j in range(n)])


class Matrix:
    """Row-major immutable matrix of scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", len(rows[0]) if rows else 0)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i) -> Vector:
        return Vector(self.entries[i])

    def col(self, j) -> Vector:
        return Vector(r[j] for r in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix shape mismatch")
        return Matrix(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )

    def scale(self, alpha) -> "Matrix":
        return Matrix(tuple(alpha * a for a in r) for r in self.entries)

    def negate(self) -> "Matrix":
        return Matrix(tuple(a.negate() for a in r) for r in self.entries)

    __neg__ = negate

    def __mul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.entries)) if self.rows else self

    def trace(self):
        if self.rows != self.cols:
            raise ShapeError("trace of a non-square matrix")
        if self.rows == 0:
            raise ShapeError("trace of an empty matrix")
        out = self.entries[0][0]
        for i in range(1, self.rows):
            out = out + self.entries[i][i]
        return out

    def is_quasi_zero(self) -> bool:
        return all(a.is_quasi_zero() for r in self.entries for a in r)

    def surpasses(self, other: "Matrix") -> bool:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix shape mismatch")
        return all(
            a.surpasses(b)
            for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(
            ", ".join(repr(a) for a in r) for r in self.entries
        )
        return f"mat[{body}]"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = a.entries[i][0] * b.entries[0][j]
            for k in range(1, a.cols):
                acc = acc + a.entries[i][k] * b.entries[k][j]
            row.append(acc)
        out.append(row)
    return Matrix(out)


def identity_matrix(n: int, one=ELT_ONE, zero=BOTTOM) -> Matrix:
    return Matrix(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def mat_power(a: Matrix, k: int) -> Matrix:
    if a.rows != a.cols:
        raise ShapeError("powers of a non-square matrix")
    out = a
    for _ in range(k - 1):
        out = mat_mul(out, a)
    return out


def matrix_from_columns(columns: Sequence[Vector]) -> Matrix:
    n = len(columns[0])
    if any(len(c) != n for c in columns):
        raise ShapeError("columns of unequal length")
    return Matrix(tuple(c[i] for c in columns) for i in range(n))


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def elt_determinant(a: Matrix):
    """Permutation-expansion determinant with the sign realized as a
    layer +-1 scalar factor.

    Works for any entries implementing the scalar signature, including
    polynomials; raises on non-square input.
    """
    if a.rows != a.cols:
        raise ShapeError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        raise ShapeError("determinant of an empty matrix")
    some = a.entries[0][0]
    plus, minus = some.one(), some.one().negate()
    total = None
    for perm in itertools.permutations(range(n)):
        term = plus if _permutation_sign(perm) == 1 else minus
        for i in range(n):
            term = term * a.entries[i][perm[i]]
        total = term if total is None else total + term
    return total


def is_dependent_det(vectors: Sequence[Vector]) -> bool:
    """Determinant criterion: n vectors of length n are dependent iff
    the determinant of their column matrix is quasi-zero."""
    n = len(vectors)
    if any(len(v) != n for v in vectors):
        raise ShapeError(f"need {n} vectors of length {n}")
    return elt_determinant(matrix_from_columns(vectors)).is_quasi_zero()


class EltPolynomial:
    """Univariate polynomial with layered-scalar coefficients.

    Coefficients are indexed by degree with trailing bottoms trimmed;
    the zero polynomial stores nothing. Implements the same signature
    as the scalars so matrix code (determinants in particular) can run
    on polynomial entries unchanged.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[EltScalar]):
        cs = list(coeffs)
        while cs and cs[-1].is_bottom:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("EltPolynomial is immutable")

    @property
    def degree(self) -> int:
        """Highest non-bottom index; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> EltScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else BOTTOM

    def __add__(self, other: "EltPolynomial") -> "EltPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return EltPolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    def __mul__(self, other: "EltPolynomial") -> "EltPolynomial":
        if not self.coeffs or not other.coeffs:
            return POLY_ZERO
        out = [BOTTOM] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_bottom:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return EltPolynomial(out)

    def negate(self) -> "EltPolynomial":
        return EltPolynomial(c.negate() for c in self.coeffs)

    __neg__ = negate

    def is_quasi_zero(self) -> bool:
        return all(c.is_quasi_zero() for c in self.coeffs)

    def surpasses(self, other: "EltPolynomial") -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(k).surpasses(other.coeff(k)) for k in range(n))

    def zero(self) -> "EltPolynomial":
        return POLY_ZERO

    def one(self) -> "EltPolynomial":
        return POLY_ONE

    def __eq__(self, other) -> bool:
        return isinstance(other, EltPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "poly(0)"
        parts = [
            f"{c!r}*L^{k}" for k, c in enumerate(self.coeffs) if not c.is_bottom
        ]
        return "poly(" + " + ".join(parts) + ")"


POLY_ZERO = EltPolynomial([])
POLY_ONE = EltPolynomial([ELT_ONE])


# --- coefficient grids and grid-bounded oracles ---

def make_grid(scalars: Iterable[EltScalar]) -> Tuple[EltScalar, ...]:
    """Validate a coefficient grid: non-empty, quasi-zeros excluded
    (dependence needs coefficients outside the quasi-zero set)."""
    grid = tuple(scalars)
    if not grid:
        raise EmptyGridError("empty coefficient grid")
    bad = [g for g in grid if g.is_quasi_zero()]
    if bad:
        raise ValueError(f"grid contains quasi-zero scalars: {bad}")
    return grid


DEFAULT_GRID = make_grid(
    elt(t, l) for t in (-1, 0, 1) for l in (-2, -1, 1, 2)
)
SMALL_GRID = make_grid([elt(0, 1), elt(0, -1)])
LARGE_GRID = make_grid(
    elt(t, l) for t in (-2, -1, 0, 1, 2) for l in (-3, -2, -1, 1, 2, 3)
)

GRIDS = {"small": SMALL_GRID, "default": DEFAULT_GRID, "large": LARGE_GRID}


def _exceeds(partial: Vector, target: Vector) -> bool:
    # Tangible dominance is monotone under addition, so a partial sum
    # strictly above the target in some coordinate can never come back.
    for p, t in zip(partial.entries, target.entries):
        if p.t is not None and (t.t is None or p.t > t.t):
            return True
    return False


def span_membership_grid(
    x: Vector,
    gens: Sequence[Vector],
    grid: Sequence[EltScalar],
    max_support: Optional[int] = None,
) -> bool:
    """Is x a non-empty grid-coefficient combination of gens, exactly?

    One sided: False only means no witness within the grid/support
    bounds. The all-bottom vector needs a quasi-zero coefficient to be
    witnessed, which valid grids exclude.
    """
    if not gens:
        raise ValueError("empty generator list")
    if any(len(g) != len(x) for g in gens):
        raise ShapeError("generator length mismatch")
    grid = tuple(grid)
    if not grid:
        raise EmptyGridError("empty coefficient grid")

    n = len(gens)

    def search(i: int, acc: Optional[Vector], used: int) -> bool:
        if acc is not None and _exceeds(acc, x):
            return False
        if i == n:
            return acc is not None and acc == x
        # skip generator i
        if search(i + 1, acc, used):
            return True
        if max_support is not None and used >= max_support:
            return False
        for c in grid:
            term = gens[i].scale(c)
            nxt = term if acc is None else acc + term
            if search(i + 1, nxt, used + 1):
                return True
        return False

    return search(0, None, 0)


def grid_combinations(
    gens: Sequence[Vector],
    grid: Sequence[EltScalar],
    max_support: int = 2,
):
    """All non-empty grid combinations of up to max_support generators,
    deduplicated; the candidate pool for criticality and radical scans."""
    out = {}
    idx = range(len(gens))
    for k in range(1, max_support + 1):
        for subset in itertools.combinations(idx, k):
            for coeffs in itertools.product(grid, repeat=k):
                v = gens[subset[0]].scale(coeffs[0])
                for j, c in zip(subset[1:], coeffs[1:]):
                    v = v + gens[j].scale(c)
                out[v.entries] = v
    return list(out.values())


def is_dependent_grid(
    vectors: Sequence[Vector],
    grid: Sequence[EltScalar],
    max_support: Optional[int] = None,
) -> bool:
    """Does some non-empty sub-selection with grid coefficients land in
    the quasi-zero submodule? One sided, like span_membership_grid."""
    if not vectors:
        raise ValueError("empty vector list")
    grid = tuple(grid)
    if not grid:
        raise EmptyGridError("empty coefficient grid")
    n = len(vectors)

    def search(i: int, acc: Optional[Vector], used: int) -> bool:
        if i == n:
            return acc is not None and acc.is_quasi_zero()
        if search(i + 1, acc, used):
            return True
        if max_support is not None and used >= max_support:
            return False
        for c in grid:
            term = vectors[i].scale(c)
            nxt = term if acc is None else acc + term
            if search(i + 1, nxt, used + 1):
                return True
        return False

    return search(0, None, 0)


def projectively_equivalent(x: Vector, y: Vector) -> bool:
    """y == alpha x for some invertible (non-quasi-zero) layered scalar.

    Exact: the tangible shift must be constant across non-bottom slots
    and the layer ratio constant and non-zero across non-quasi-zero
    slots (quasi-zero slots only pin the shift, any ratio scales a zero
    layer to a zero layer).
    """
    if len(x) != len(y):
        return False
    shift = None
    ratio = None
    for a, b in zip(x.entries, y.entries):
        if a.is_bottom != b.is_bottom:
            return False
        if a.is_bottom:
            continue
        d = b.t - a.t
        if shift is None:
            shift = d
        elif shift != d:
            return False
        if a.layer == 0:
            if b.layer != 0:
                return False
        else:
            r = b.layer / a.layer
            if r == 0:
                return False
            if ratio is None:
                ratio = r
            elif ratio != r:
                return False
    # All-bottom x matches all-bottom y (shift stayed None); if every
    # slot was quasi-zero, any non-zero layer works for alpha.
    return True


def is_critical(
    x: Vector,
    gens: Sequence[Vector],
    grid: Sequence[EltScalar],
    max_support: int = 2,
) -> bool:
    """No decomposition x = x1 + x2 with both parts outside the
    projective class of x, over grid combinations of the ambient
    generators. Raises on quasi-zero input (criticality is defined off
    the quasi-zero set)."""
    if x.is_quasi_zero():
        raise ValueError("criticality is undefined for quasi-zero vectors")
    pool = grid_combinations(gens, grid, max_support)
    outside = [v for v in pool if not projectively_equivalent(x, v)]
    for x1 in outside:
        for x2 in outside:
            if x1 + x2 == x:
                return False
    return True


def coordinate_vector(
    x: Vector,
    base: Sequence[Vector],
    grid: Sequence[EltScalar] = DEFAULT_GRID,
) -> Vector:
    """Coefficients of x over the given base, bottom marking absence.

    Generalized-permutation bases (each element supported on a single,
    distinct coordinate) are solved exactly by division. Otherwise the
    grid is searched in order; finding two distinct representations
    raises AmbiguousRepresentationError, none raises NotInSpanError.
    """
    if not base:
        raise ValueError("empty base")
    n = len(x)
    if any(len(b) != n for b in base):
        raise ShapeError("base vector length mismatch")

    supports = []
    for b in base:
        sup = [j for j, a in enumerate(b.entries) if not a.is_bottom]
        supports.append(sup)
    simple = (
        all(len(s) == 1 for s in supports)
        and len({s[0] for s in supports}) == len(base)
        and all(not b[s[0]].is_quasi_zero() for b, s in zip(base, supports))
    )
    if simple:
        coeffs = []
        for b, s in zip(base, supports):
            j = s[0]
            xj = x[j]
            coeffs.append(BOTTOM if xj.is_bottom else xj * b[j].inverse())
        candidate = Vector(coeffs)
        recomposed = zero_vector(n)
        for c, b in zip(coeffs, base):
            recomposed = recomposed + b.scale(c)
        if recomposed == x:
            return candidate
        raise NotInSpanError(f"{x!r} is not in the span of the base")

    grid = tuple(grid)
    found: List[Tuple] = []

    def search(i: int, acc: Vector, coeffs: Tuple):
        if len(found) >= 2:
            return
        if _exceeds(acc, x):
            return
        if i == len(base):
            if acc == x and any(c is not None for c in coeffs):
                key = tuple(BOTTOM if c is None else c for c in coeffs)
                if key not in found:
                    found.append(key)
            return
        search(i + 1, acc, coeffs + (None,))
        for c in grid:
            search(i + 1, acc + base[i].scale(c), coeffs + (c,))

    search(0, zero_vector(n), ())
    if not found:
        raise NotInSpanError(f"{x!r} has no grid representation over the base")
    if len(found) > 1:
        raise AmbiguousRepresentationError(
            f"two representations over the base: {found[0]} and {found[1]}"
        )
    return Vector(found[0])


def transformation_matrix(
    base_b: Sequence[Vector],
    base_c: Sequence[Vector],
    grid: Sequence[EltScalar] = DEFAULT_GRID,
) -> Matrix:
    """Columns are the coordinate vectors of base_b over base_c.

    Coordinate resolution failures (the input not actually being a
    base) propagate as NotInSpanError / AmbiguousRepresentationError.
    """
    if len(base_b) != len(base_c):
        raise ShapeError("bases of different sizes")
    columns = [coordinate_vector(v, base_c, grid) for v in base_b]
    return matrix_from_columns(columns)
