"""Lifts of negation semirings and their modules.

Two concrete lifts are provided:

* truncated Puiseux series over Q with rational exponents, projected
  onto layered scalars by reading the leading term (tangible is minus
  the least exponent, layer its coefficient);
* the free integer lift: the contracted monoid ring Z[A] on symbols
  a_alpha indexed by the non-quasi-zero scalars, with a_alpha a_beta
  collapsing to the absorbing symbol when the product is quasi-zero.

On top of these sit the generic lift-law verifier and the dependence
transfer: n+1 vectors over the layered scalars are certified dependent
by lifting entrywise to monomials, extracting an exact kernel vector
upstairs (maximal-minor expansion, fraction free), and tropicalizing
it back down.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .scalars import BOTTOM, ELT_ONE, EltScalar, rat, rat_str
from .linalg import ShapeError, Vector, zero_vector


class PuiseuxError(ValueError):
    pass


class LiftEliminationError(RuntimeError):
    """Kernel extraction failed within the perturbation budget; retry
    with a different seed or perturbation order."""


class PuiseuxSeries:
    """Finite sorted term map exponent -> coefficient, plus an optional
    truncation order: exponents at or above it are unknown.

    Exact inputs (truncation None) stay exact under + and *; mixed
    arithmetic carries the tightest honest truncation bound.
    """

    __slots__ = ("terms", "truncation")

    def __init__(self, terms, truncation: Optional[Fraction] = None):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        clean = {}
        for e, c in items:
            e, c = rat(e), rat(c)
            if c != 0:
                clean[e] = clean.get(e, Fraction(0)) + c
        trunc = None if truncation is None else rat(truncation)
        pruned = tuple(
            sorted(
                (e, c)
                for e, c in clean.items()
                if c != 0 and (trunc is None or e < trunc)
            )
        )
        object.__setattr__(self, "terms", pruned)
        object.__setattr__(self, "truncation", trunc)

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxSeries is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading(self) -> Tuple[Fraction, Fraction]:
        if not self.terms:
            raise PuiseuxError("zero series has no leading term")
        return self.terms[0]

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        merged = dict(self.terms)
        for e, c in other.terms:
            merged[e] = merged.get(e, Fraction(0)) + c
        return PuiseuxSeries(merged, _min_trunc(self.truncation, other.truncation))

    def negate(self) -> "PuiseuxSeries":
        return PuiseuxSeries(
            [(e, -c) for e, c in self.terms], self.truncation
        )

    __neg__ = negate

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + other.negate()

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        out: Dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        trunc = None
        if self.truncation is not None and other.terms:
            trunc = _min_trunc(trunc, self.truncation + other.terms[0][0])
        if other.truncation is not None and self.terms:
            trunc = _min_trunc(trunc, other.truncation + self.terms[0][0])
        if self.truncation is not None and other.truncation is not None:
            trunc = _min_trunc(trunc, self.truncation + other.truncation)
        return PuiseuxSeries(out, trunc)

    def inverse(self, order) -> "PuiseuxSeries":
        """Long-division inverse: self * result = 1 + terms of exponent
        >= order. Exact (truncation-free) when the division terminates,
        e.g. on monomials."""
        if self.is_zero:
            raise PuiseuxError("cannot invert the zero series")
        order = rat(order)
        lead_e, lead_c = self.leading()
        quotient: Dict[Fraction, Fraction] = {}
        residual = PuiseuxSeries({Fraction(0): Fraction(1)})
        while not residual.is_zero:
            re, rc = residual.leading()
            qe, qc = re - lead_e, rc / lead_c
            if qe >= order:
                break
            quotient[qe] = quotient.get(qe, Fraction(0)) + qc
            residual = residual - PuiseuxSeries({qe: qc}) * self
        trunc = None if residual.is_zero else order
        return PuiseuxSeries(quotient, trunc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PuiseuxSeries)
            and self.terms == other.terms
            and self.truncation == other.truncation
        )

    def __hash__(self):
        return hash((self.terms, self.truncation))

    def __repr__(self):
        from .io import puiseux_to_literal

        body = puiseux_to_literal(self)
        if self.truncation is not None:
            body += f" + O(t^{rat_str(self.truncation)})"
        return body


def _min_trunc(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


PUISEUX_ZERO = PuiseuxSeries({})
PUISEUX_ONE = PuiseuxSeries({Fraction(0): Fraction(1)})


def monomial(coeff, exponent) -> PuiseuxSeries:
    return PuiseuxSeries({rat(exponent): rat(coeff)})


def el_tropicalize(a: PuiseuxSeries) -> EltScalar:
    """Leading-term projection: 0 -> bottom, else tangible is minus the
    least exponent and the layer is its coefficient."""
    if a.is_zero:
        return BOTTOM
    e, c = a.leading()
    return EltScalar(-e, c)


def lift_scalar(a: EltScalar) -> PuiseuxSeries:
    """The canonical monomial preimage of a layered scalar."""
    if a.is_bottom:
        return PUISEUX_ZERO
    return monomial(a.layer, -a.t)


# --- the free integer lift (contracted monoid ring) ---

class FreeLiftElement:
    """Reduced integer combination of monoid symbols a_alpha.

    Keys are non-quasi-zero scalars; the absorbing symbol a_0 is
    identified with the ring zero, so it is never stored. Addition
    merges integer coefficients; multiplication extends the monoid rule
    bilinearly, collapsing quasi-zero products.
    """

    __slots__ = ("combination",)

    def __init__(self, combination: Dict[EltScalar, int]):
        clean = {}
        for key, n in combination.items():
            if n == 0:
                continue
            if key.is_quasi_zero() and not key.is_bottom:
                raise ValueError(f"symbol index must be outside the quasi-zero set: {key!r}")
            if key.is_bottom:
                continue  # a_0 is the zero of the contracted ring
            clean[key] = clean.get(key, 0) + n
        object.__setattr__(
            self, "combination", {k: v for k, v in clean.items() if v != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("FreeLiftElement is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.combination

    def __add__(self, other: "FreeLiftElement") -> "FreeLiftElement":
        out = dict(self.combination)
        for k, n in other.combination.items():
            out[k] = out.get(k, 0) + n
        return FreeLiftElement(out)

    def negate(self) -> "FreeLiftElement":
        return FreeLiftElement({k: -n for k, n in self.combination.items()})

    __neg__ = negate

    def __mul__(self, other: "FreeLiftElement") -> "FreeLiftElement":
        out: Dict[EltScalar, int] = {}
        for ka, na in self.combination.items():
            for kb, nb in other.combination.items():
                key = monoid_mul(ka, kb)
                if key.is_bottom:
                    continue
                out[key] = out.get(key, 0) + na * nb
        return FreeLiftElement(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeLiftElement)
            and self.combination == other.combination
        )

    def __hash__(self):
        return hash(frozenset(self.combination.items()))

    def __repr__(self):
        if not self.combination:
            return "zlift(0)"
        parts = [f"{n}*a[{k!r}]" for k, n in sorted(
            self.combination.items(), key=lambda kv: repr(kv[0])
        )]
        return "zlift(" + " + ".join(parts) + ")"


def monoid_mul(alpha: EltScalar, beta: EltScalar) -> EltScalar:
    """The symbol-level product: a_alpha a_beta = a_{alpha beta} when
    that index stays outside the quasi-zero set, else the absorbing
    a_0 (returned as bottom)."""
    prod = alpha * beta
    return prod if not prod.is_quasi_zero() else BOTTOM

ZLIFT_ZERO = FreeLiftElement({})
ZLIFT_ONE = FreeLiftElement({ELT_ONE: 1})


def zlift(alpha: EltScalar, n: int = 1) -> FreeLiftElement:
    return FreeLiftElement({alpha: n})


def _int_copies(alpha, n: int):
    """alpha added to itself n >= 1 times (generic over the scalar)."""
    out = alpha
    for _ in range(n - 1):
        out = out + alpha
    return out


def free_lift_map(x: FreeLiftElement, zero: EltScalar = BOTTOM) -> EltScalar:
    """Sum over terms of |n| copies of (sign(n) . alpha), the sign acting
    as identity / negation."""
    total = zero
    for alpha, n in x.combination.items():
        signed = alpha if n > 0 else alpha.negate()
        total = total + _int_copies(signed, abs(n))
    return total


def free_lift_mul(x: FreeLiftElement, y: FreeLiftElement) -> FreeLiftElement:
    return x * y


# --- lift contracts and the law suite ---

class LiftContract:
    """A lift candidate packaged with everything the law suite needs.

    Downstairs values must implement the scalar signature; upstairs is
    an arbitrary ring given by callables. ``dense_preimage`` realizes
    the density law: for a sampled downstairs y it must return an
    upstairs element whose image y surpasses.
    """

    def __init__(
        self,
        name: str,
        project: Callable,
        up_add: Callable,
        up_mul: Callable,
        up_neg: Callable,
        up_zero,
        up_one,
        sample_up: Callable,
        sample_down: Callable,
        dense_preimage: Callable,
        up_is_zero: Optional[Callable] = None,
    ):
        self.name = name
        self.project = project
        self.up_add = up_add
        self.up_mul = up_mul
        self.up_neg = up_neg
        self.up_zero = up_zero
        self.up_one = up_one
        self.sample_up = sample_up
        self.sample_down = sample_down
        self.dense_preimage = dense_preimage
        self.up_is_zero = up_is_zero or (lambda x: x == up_zero)


class LiftLawReport:
    """Outcome of a randomized run of the five lift laws."""

    LAWS = ("add", "mul", "negation", "kernel", "density")

    def __init__(self, name: str, samples: int):
        self.name = name
        self.samples = samples
        self.failures: Dict[str, List[str]] = {law: [] for law in self.LAWS}

    def record(self, law: str, detail: str):
        self.failures[law].append(detail)

    @property
    def passed(self) -> bool:
        return all(not f for f in self.failures.values())

    def failed_laws(self) -> List[str]:
        return [law for law in self.LAWS if self.failures[law]]

    def __repr__(self):
        state = "pass" if self.passed else f"FAIL {self.failed_laws()}"
        return f"LiftLawReport({self.name}, samples={self.samples}, {state})"


def verify_lift_laws(
    contract: LiftContract, samples: int, seed: int = 0
) -> LiftLawReport:
    """Randomized check of the lift laws.

    Additive and multiplicative laws are checked in the orientation
    that leading-term cancellation actually satisfies: the combination
    of images surpasses the image of the combination. Negation must
    commute exactly, the kernel must be exactly the upstairs zero, and
    sampled downstairs elements must surpass the image of their chosen
    preimage.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    report = LiftLawReport(contract.name, samples)
    phi = contract.project

    z = phi(contract.up_zero)
    if not z == z.zero():
        report.record("kernel", "projection of upstairs zero is not zero")
    one_img = phi(contract.up_one)
    if not one_img == one_img.one():
        report.record("kernel", "projection of upstairs one is not one")

    for _ in range(samples):
        x = contract.sample_up(rng)
        y = contract.sample_up(rng)
        px, py = phi(x), phi(y)

        if not (px + py).surpasses(phi(contract.up_add(x, y))):
            report.record("add", f"x={x!r} y={y!r}")
        if not (px * py).surpasses(phi(contract.up_mul(x, y))):
            report.record("mul", f"x={x!r} y={y!r}")
        if not phi(contract.up_neg(x)) == px.negate():
            report.record("negation", f"x={x!r}")
        if not contract.up_is_zero(x) and px == px.zero():
            report.record("kernel", f"nonzero upstairs x={x!r} projects to zero")

        d = contract.sample_down(rng)
        pre = contract.dense_preimage(d)
        if not d.surpasses(phi(pre)):
            report.record("density", f"d={d!r} preimage={pre!r}")

    return report


def _random_fraction(rng: random.Random, span: int = 3) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.choice((1, 1, 2))
    return Fraction(num, den)


def _random_nonzero_fraction(rng: random.Random, span: int = 3) -> Fraction:
    while True:
        f = _random_fraction(rng, span)
        if f != 0:
            return f


def random_elt_scalar(rng: random.Random, allow_bottom: bool = True) -> EltScalar:
    if allow_bottom and rng.random() < 0.15:
        return BOTTOM
    return EltScalar(_random_fraction(rng), _random_fraction(rng))


def random_nonquasizero_elt(rng: random.Random) -> EltScalar:
    return EltScalar(_random_fraction(rng), _random_nonzero_fraction(rng))


def random_puiseux(rng: random.Random, max_terms: int = 3) -> PuiseuxSeries:
    n = rng.randint(0, max_terms)
    return PuiseuxSeries(
        {
            _random_fraction(rng): _random_fraction(rng)
            for _ in range(n)
        }
    )


def puiseux_elt_lift() -> LiftContract:
    """The Puiseux-series lift of the layered scalars."""
    return LiftContract(
        name="puiseux->elt",
        project=el_tropicalize,
        up_add=lambda a, b: a + b,
        up_mul=lambda a, b: a * b,
        up_neg=lambda a: a.negate(),
        up_zero=PUISEUX_ZERO,
        up_one=PUISEUX_ONE,
        sample_up=random_puiseux,
        sample_down=random_elt_scalar,
        dense_preimage=lift_scalar,
        up_is_zero=lambda a: a.is_zero,
    )


def _random_free_lift(rng: random.Random) -> FreeLiftElement:
    n = rng.randint(0, 3)
    combo: Dict[EltScalar, int] = {}
    for _ in range(n):
        key = random_nonquasizero_elt(rng)
        combo[key] = combo.get(key, 0) + rng.choice((-3, -2, -1, 1, 2, 3))
    return FreeLiftElement(combo)


def _free_dense_preimage(d: EltScalar) -> FreeLiftElement:
    if d.is_bottom:
        return ZLIFT_ZERO
    if not d.is_quasi_zero():
        return zlift(d)
    # layer-zero d: a_x + a_{-x} with x = (t(d), 1) maps onto d exactly
    probe = EltScalar(d.t, 1)
    return FreeLiftElement({probe: 1}) + FreeLiftElement({probe.negate(): 1})


def free_elt_lift() -> LiftContract:
    """The contracted Z[A] lift over the layered scalars with bottom."""
    return LiftContract(
        name="zfree->elt",
        project=free_lift_map,
        up_add=lambda a, b: a + b,
        up_mul=lambda a, b: a * b,
        up_neg=lambda a: a.negate(),
        up_zero=ZLIFT_ZERO,
        up_one=ZLIFT_ONE,
        sample_up=_random_free_lift,
        sample_down=random_elt_scalar,
        dense_preimage=_free_dense_preimage,
        up_is_zero=lambda a: a.is_zero,
    )


class _NatScalar:
    """Naturals with the identity negation; quasi-zeros are the evens.
    Only used as the downstairs side of the two-element lift."""

    __slots__ = ("n",)

    def __init__(self, n: int):
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __add__(self, other):
        return _NatScalar(self.n + other.n)

    def __mul__(self, other):
        return _NatScalar(self.n * other.n)

    def negate(self):
        return self

    def is_quasi_zero(self):
        return self.n % 2 == 0

    def surpasses(self, other):
        return self.n >= other.n and (self.n - other.n) % 2 == 0

    def zero(self):
        return _NatScalar(0)

    def one(self):
        return _NatScalar(1)

    def __eq__(self, other):
        return isinstance(other, _NatScalar) and self.n == other.n

    def __hash__(self):
        return hash(("nat", self.n))

    def __repr__(self):
        return f"nat({self.n})"


def z2_nat_lift() -> LiftContract:
    """Z/2Z lifting the naturals with the identity negation: lifts need
    not be big."""
    return LiftContract(
        name="z2->nat",
        project=lambda r: _NatScalar(r % 2),
        up_add=lambda a, b: (a + b) % 2,
        up_mul=lambda a, b: (a * b) % 2,
        up_neg=lambda a: (-a) % 2,
        up_zero=0,
        up_one=1,
        sample_up=lambda rng: rng.randint(0, 1),
        sample_down=lambda rng: _NatScalar(rng.randint(0, 8)),
        dense_preimage=lambda d: d.n % 2,
        up_is_zero=lambda a: a == 0,
    )


def module_lift_map(
    coeffs: Sequence,
    gens: Sequence[Vector],
    project: Callable = el_tropicalize,
) -> Vector:
    """Push an upstairs coefficient tuple through the lift against a
    generator list: sum of project(coeff) . gen. For the standard basis
    this is the entrywise projection."""
    if len(coeffs) != len(gens):
        raise ShapeError("one upstairs coefficient per generator")
    n = len(gens[0])
    out = zero_vector(n)
    for c, g in zip(coeffs, gens):
        out = out + g.scale(project(c))
    return out


# --- dependence transfer ---

class DependenceCertificate:
    """Coefficients certifying a dependence: not all bottom, none
    quasi-zero, and the combination lands in the quasi-zero submodule."""

    def __init__(self, vectors: Sequence[Vector], coefficients: Sequence[EltScalar]):
        self.vectors = list(vectors)
        self.coefficients = list(coefficients)

    def combination(self) -> Vector:
        out = zero_vector(len(self.vectors[0]))
        for c, v in zip(self.coefficients, self.vectors):
            if not c.is_bottom:
                out = out + v.scale(c)
        return out

    def verify(self) -> bool:
        used = [c for c in self.coefficients if not c.is_bottom]
        if not used or any(c.is_quasi_zero() for c in used):
            return False
        return self.combination().is_quasi_zero()

    def __repr__(self):
        return f"DependenceCertificate({self.coefficients!r})"


def _perm_sign(perm: Sequence[int]) -> int:
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


def _puiseux_det(cols: List[List[PuiseuxSeries]]) -> PuiseuxSeries:
    k = len(cols)
    total = PUISEUX_ZERO
    for perm in itertools.permutations(range(k)):
        term = PUISEUX_ONE
        for i, j in enumerate(perm):
            term = term * cols[j][i]
        total = total + (term if _perm_sign(perm) == 1 else term.negate())
    return total


def _cofactor_kernel(cols: List[List[PuiseuxSeries]]) -> List[PuiseuxSeries]:
    """Signed maximal minors of an (m-1) x m column list; a kernel
    vector whenever the matrix has full row rank."""
    m = len(cols)
    kernel = []
    for drop in range(m):
        kept = [cols[j] for j in range(m) if j != drop]
        minor = _puiseux_det(kept)
        if drop % 2 == 1:
            minor = minor.negate()
        kernel.append(minor)
    return kernel


def _exact_kernel(
    cols: List[List[PuiseuxSeries]], rows: Sequence[int]
) -> Optional[List[PuiseuxSeries]]:
    """Nonzero kernel vector of the column list over the given rows,
    exactly, or None.

    Maximal-minor cofactors over every (m-1)-row subset, verified
    against all live rows; if every subset fails the rank is below m-1
    and the last column is dropped (the remaining columns are still
    dependent), extending the recursive kernel by zero. Complete for
    dependent column lists.
    """
    m = len(cols)
    if m == 0:
        return None
    live = [i for i in rows if any(not c[i].is_zero for c in cols)]
    if not live:
        return [PUISEUX_ONE] + [PUISEUX_ZERO] * (m - 1)
    if m == 1:
        return None
    if len(live) >= m - 1:
        for subset in itertools.combinations(live, m - 1):
            sub = [[c[i] for i in subset] for c in cols]
            kern = _cofactor_kernel(sub)
            if all(k.is_zero for k in kern):
                continue
            good = True
            for i in live:
                acc = PUISEUX_ZERO
                for j in range(m):
                    acc = acc + cols[j][i] * kern[j]
                if not acc.is_zero:
                    good = False
                    break
            if good:
                return kern
    sub_kern = _exact_kernel(cols[:-1], rows)
    if sub_kern is None:
        return None
    return sub_kern + [PUISEUX_ZERO]


def dependence_via_lift(
    vectors: Sequence[Vector],
    order=1,
    seed: int = 0,
    retries: int = 6,
    size_bound: int = 5,
) -> DependenceCertificate:
    """Certify that n+1 vectors over the layered scalars with bottom
    are dependent, by solving the lifted homogeneous system exactly.

    Entries must be tangibly representable: non-quasi-zero or bottom.
    Degenerate inputs are retried with random higher-order terms added
    to the monomial lifts (the tropicalization is unchanged); exhausted
    retries raise LiftEliminationError.
    """
    n = len(vectors[0])
    if len(vectors) != n + 1:
        raise ShapeError(f"need {n + 1} vectors of length {n}")
    if any(len(v) != n for v in vectors):
        raise ShapeError("ragged vector list")
    if n > size_bound:
        raise ValueError(f"desk-scale bound exceeded: {n} > {size_bound}")
    for v in vectors:
        for a in v.entries:
            if a.is_quasi_zero() and not a.is_bottom:
                raise ValueError(
                    f"entry {a!r} is quasi-zero but not bottom; not tangibly representable"
                )

    rng = random.Random(seed)
    order = rat(order)

    def lifted_columns(perturb: bool) -> List[List[PuiseuxSeries]]:
        cols = []
        for v in vectors:
            col = []
            for a in v.entries:
                s = lift_scalar(a)
                if perturb and not s.is_zero:
                    e, _ = s.leading()
                    delta = Fraction(rng.randint(1, 4), 4) * order
                    eps = Fraction(rng.randint(1, 9))
                    s = s + monomial(eps, e + delta)
                col.append(s)
            cols.append(col)
        return cols

    for attempt in range(retries):
        cols = lifted_columns(perturb=attempt > 0)
        kernel = _exact_kernel(cols, range(n))
        if kernel is None:
            continue
        first = next(k for k in kernel if not k.is_zero)
        le, lc = first.leading()
        norm = monomial(1 / lc, -le)
        coeffs = [el_tropicalize(k * norm) for k in kernel]
        cert = DependenceCertificate(vectors, coeffs)
        if cert.verify():
            return cert
    raise LiftEliminationError(
        f"no kernel vector after {retries} perturbation attempts"
    )
