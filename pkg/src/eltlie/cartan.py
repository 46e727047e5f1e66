"""Characteristic polynomials, essential traces and Killing forms.

The essential trace of a matrix reads the trace off its layered
characteristic polynomial when the trace monomial is essential there,
and otherwise falls back to the zero-layer scalar whose tangible is
the dominant slope. Composing with adjoint maps gives the Killing and
essential Killing forms, whose degeneracy is probed on grid-bounded
candidate sets; the semisimplicity criterion is then checked for
consistency by enumerating candidate abelian ideals.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .scalars import BOTTOM, ELT_MINUS_ONE, ELT_ONE, EltScalar
from .linalg import (
    DEFAULT_GRID,
    EltPolynomial,
    Matrix,
    ShapeError,
    Vector,
    elt_determinant,
    grid_combinations,
    mat_mul,
)
from .lie import (
    FreeLieAlgebra,
    IdealGenerators,
    NonIdealError,
    Verdict,
    ad_matrix,
    bracket,
    certify_ideal,
)


class CharPoly:
    """Monic layered characteristic polynomial of an n x n matrix,
    lambda^n + sum alpha_i lambda^(n-i)."""

    def __init__(self, poly: EltPolynomial, n: int):
        if poly.degree != n:
            raise ShapeError("characteristic polynomial must have degree n")
        if poly.coeff(n) != ELT_ONE:
            raise ValueError("characteristic polynomial must be monic")
        self.poly = poly
        self.n = n

    def alpha(self, i: int) -> EltScalar:
        """Coefficient of lambda^(n-i), 1 <= i <= n."""
        if not 1 <= i <= self.n:
            raise IndexError(f"alpha index {i} outside 1..{self.n}")
        return self.poly.coeff(self.n - i)

    def alphas(self) -> List[EltScalar]:
        return [self.alpha(i) for i in range(1, self.n + 1)]

    def __eq__(self, other):
        return isinstance(other, CharPoly) and self.poly == other.poly

    def __repr__(self):
        return f"CharPoly(n={self.n}, {self.poly!r})"


def char_poly(a: Matrix) -> CharPoly:
    """det(lambda I + (0,-1) A) by permutation expansion over
    polynomial entries."""
    if a.rows != a.cols:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = a.rows
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            const = ELT_MINUS_ONE * a[(i, j)]
            lam = ELT_ONE if i == j else BOTTOM
            row.append(EltPolynomial([const, lam]))
        entries.append(row)
    det = elt_determinant(Matrix(entries))
    return CharPoly(det, n)


def essential_indices(p: CharPoly) -> Set[int]:
    """Indices l whose slope t(alpha_l)/l dominates every other slope;
    bottom coefficients never dominate and are excluded."""
    slopes: Dict[int, Fraction] = {}
    for l in range(1, p.n + 1):
        al = p.alpha(l)
        if not al.is_bottom:
            slopes[l] = Fraction(al.t, l)
    if not slopes:
        return set()
    best = max(slopes.values())
    return {l for l, s in slopes.items() if s == best}


class EssentialTraceResult:
    """Essential trace plus the data that produced it."""

    def __init__(
        self,
        l_set: Set[int],
        mu: Optional[int],
        value: EltScalar,
        used_trace_branch: bool,
    ):
        self.l_set = l_set
        self.mu = mu
        self.value = value
        self.used_trace_branch = used_trace_branch

    def __repr__(self):
        branch = "trace" if self.used_trace_branch else f"slope(mu={self.mu})"
        return f"EssentialTraceResult({self.value!r}, {branch}, L={sorted(self.l_set)})"


def essential_trace(a: Matrix) -> EssentialTraceResult:
    """Trace branch when the trace monomial is essential (1 is a
    dominant slope); otherwise the zero-layer scalar at the dominant
    slope. A polynomial with no surviving coefficients (all bottom)
    keeps the trace, which is then bottom."""
    p = char_poly(a)
    l_set = essential_indices(p)
    tr = a.trace()
    if not l_set or 1 in l_set:
        return EssentialTraceResult(l_set, min(l_set) if l_set else None, tr, True)
    mu = min(l_set)
    slope = Fraction(p.alpha(mu).t, mu)
    return EssentialTraceResult(l_set, mu, EltScalar(slope, 0), False)


def is_elt_nilpotent(a: Matrix, k_max: int) -> Verdict:
    """Some power with every entry quasi-zero (layer zero or bottom);
    a repeated power decides False."""
    if a.rows != a.cols:
        raise ShapeError("nilpotency of a non-square matrix")
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    power = a
    prev = None
    for k in range(1, k_max + 1):
        if power.is_quasi_zero():
            return Verdict(True, True, step=k, reason="power is entrywise quasi-zero")
        if prev is not None and power == prev:
            return Verdict(True, False, step=k, reason="powers reached a fixpoint")
        prev = power
        power = mat_mul(power, a)
    return Verdict(False, reason=f"undecided within k_max={k_max}")


class KillingData:
    """Gram matrices of the Killing and essential Killing forms over
    the basis, plus the per-entry essential-trace diagnostics."""

    def __init__(self, gram: Matrix, essential_gram: Matrix, details):
        self.gram = gram
        self.essential_gram = essential_gram
        self.details = details

    def __repr__(self):
        return f"KillingData(n={self.gram.rows})"


def killing_form(alg: FreeLieAlgebra) -> KillingData:
    """gram[i][j] = trace of ad_i ad_j; essential_gram uses the
    essential trace of the same products."""
    ads = [ad_matrix(b, alg) for b in alg.basis()]
    n = alg.dim
    gram_rows, ess_rows, details = [], [], []
    for i in range(n):
        grow, erow, drow = [], [], []
        for j in range(n):
            prod = mat_mul(ads[i], ads[j])
            grow.append(prod.trace())
            res = essential_trace(prod)
            erow.append(res.value)
            drow.append(res)
        gram_rows.append(grow)
        ess_rows.append(erow)
        details.append(drow)
    return KillingData(Matrix(gram_rows), Matrix(ess_rows), details)


def killing_pair(alg: FreeLieAlgebra, x: Vector, y: Vector) -> EltScalar:
    return mat_mul(ad_matrix(x, alg), ad_matrix(y, alg)).trace()


def essential_killing_pair(alg: FreeLieAlgebra, x: Vector, y: Vector) -> EltScalar:
    return essential_trace(mat_mul(ad_matrix(x, alg), ad_matrix(y, alg))).value


def _layer_is_zero(v: EltScalar) -> bool:
    # bottom carries layer zero under the normalization
    return v.layer == 0


class RadicalProbeReport:
    """Grid-bounded scan for non-quasi-zero members of the essential
    radical. A witness certifies degeneracy; an empty list is only
    evidence of non-degeneracy (no witness within the probe set)."""

    def __init__(self, witnesses: List[Vector], probed: int):
        self.witnesses = witnesses
        self.probed = probed

    @property
    def degenerate(self) -> bool:
        return bool(self.witnesses)

    def __repr__(self):
        state = f"degenerate, witness={self.witnesses[0]!r}" if self.witnesses else "no witness in grid"
        return f"RadicalProbeReport(probed={self.probed}, {state})"


def probe_form_radical(
    alg: FreeLieAlgebra,
    grid: Sequence[EltScalar] = DEFAULT_GRID,
    max_support: int = 2,
    stop_at_first: bool = True,
) -> RadicalProbeReport:
    """Scan grid combinations x (support bounded) for membership in the
    essential radical: layer-zero essential Killing pairing against
    every basis vector and every probe candidate."""
    ads = {b.entries: ad_matrix(b, alg) for b in alg.basis()}
    candidates = grid_combinations(alg.basis(), grid, max_support)
    probes = alg.basis() + [c for c in candidates if c.entries not in ads]

    def ad_of(v: Vector) -> Matrix:
        key = v.entries
        if key not in ads:
            ads[key] = ad_matrix(v, alg)
        return ads[key]

    witnesses = []
    probed = 0
    for x in candidates:
        if x.is_quasi_zero():
            continue
        probed += 1
        ad_x = ad_of(x)
        in_radical = True
        for y in probes:
            value = essential_trace(mat_mul(ad_x, ad_of(y))).value
            if not _layer_is_zero(value):
                in_radical = False
                break
        if in_radical:
            witnesses.append(x)
            if stop_at_first:
                break
    return RadicalProbeReport(witnesses, probed)


class CartanReport:
    """Consistency check of the semisimplicity criterion on one
    algebra: a non-degenerate probed form must not coexist with a
    grid-found abelian ideal outside the quasi-zero submodule."""

    def __init__(
        self,
        probe: RadicalProbeReport,
        abelian_ideal_witness: Optional[List[Vector]],
        ideals_checked: int,
    ):
        self.probe = probe
        self.abelian_ideal_witness = abelian_ideal_witness
        self.ideals_checked = ideals_checked

    @property
    def applicable(self) -> bool:
        return not self.probe.degenerate

    @property
    def consistent(self) -> bool:
        return self.probe.degenerate or self.abelian_ideal_witness is None

    def __repr__(self):
        if not self.applicable:
            return "CartanReport(degenerate form; criterion not applicable)"
        state = "consistent" if self.consistent else f"VIOLATION {self.abelian_ideal_witness!r}"
        return f"CartanReport(non-degenerate, ideals_checked={self.ideals_checked}, {state})"


def _is_abelian_generator_set(alg: FreeLieAlgebra, gens: Sequence[Vector]) -> bool:
    return all(
        bracket(g, h, alg).is_quasi_zero() for g in gens for h in gens
    )


def _is_certified_ideal(alg: FreeLieAlgebra, gens: Sequence[Vector], grid) -> bool:
    try:
        certify_ideal(IdealGenerators(alg, list(gens)), grid)
        return True
    except NonIdealError:
        return False


def cartan_check(
    alg: FreeLieAlgebra,
    grid: Sequence[EltScalar] = DEFAULT_GRID,
    ideal_samples: int = 200,
    seed: int = 0,
    probe_max_support: int = 2,
) -> CartanReport:
    """Probe the essential Killing form; when no degeneracy witness is
    found, enumerate candidate ideals (generator subsets drawn from
    grid combinations, up to ideal_samples) and report any abelian one
    outside the quasi-zero submodule. Such a finding would falsify the
    implementation, not the criterion."""
    probe = probe_form_radical(
        alg, grid, max_support=probe_max_support, stop_at_first=True
    )
    if probe.degenerate:
        return CartanReport(probe, None, 0)

    rng = random.Random(seed)
    pool = [
        v
        for v in grid_combinations(alg.basis(), grid, probe_max_support)
        if not v.is_quasi_zero()
    ]
    candidates: List[Tuple[Vector, ...]] = [(v,) for v in pool]
    pairs = list(itertools.combinations(range(len(pool)), 2))
    rng.shuffle(pairs)
    candidates.extend((pool[i], pool[j]) for i, j in pairs)

    checked = 0
    for gens in candidates:
        if checked >= ideal_samples:
            break
        checked += 1
        if not _is_abelian_generator_set(alg, gens):
            continue
        if not _is_certified_ideal(alg, gens, grid):
            continue
        if any(not g.is_quasi_zero() for g in gens):
            return CartanReport(probe, list(gens), checked)
    return CartanReport(probe, None, checked)
