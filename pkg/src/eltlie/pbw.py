"""Free associative words over layered coefficients and the failure of
the naive enveloping-algebra embedding.

Elements are finite maps word -> layered scalar (bottom coefficients
dropped, quasi-zero ones kept: they carry the balancing information).
The negated commutator of the concatenation product satisfies the
surpassing form of Jacobi identically, which is exactly what the
embedding argument needs; the two-dimensional algebra below satisfies
only the weak form, and chasing one triple through both sides pins the
contradiction.
"""

from __future__ import annotations

import random
from typing import Dict, Tuple

from .scalars import BOTTOM, ELT_ONE, EltScalar, elt
from .linalg import Vector
from .lie import (
    FreeLieAlgebra,
    StrongJacobiReport,
    bracket,
    construct_2dim,
    strong_jacobi_holds,
    verify_strong_jacobi_triple,
)

Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


def concat(u: Word, v: Word) -> Word:
    return u + v


class FreeWordElement:
    """Finite layered-coefficient combination of words over integer
    symbols; graded by word length under concatenation."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[Word, EltScalar]):
        clean = {}
        for w, c in coeffs.items():
            if not c.is_bottom:
                clean[tuple(w)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FreeWordElement is immutable")

    @classmethod
    def symbol(cls, i: int, coeff: EltScalar = ELT_ONE) -> "FreeWordElement":
        return cls({(i,): coeff})

    @classmethod
    def unit(cls) -> "FreeWordElement":
        return cls({EMPTY_WORD: ELT_ONE})

    @classmethod
    def zero(cls) -> "FreeWordElement":
        return cls({})

    def coeff(self, w: Word) -> EltScalar:
        return self.coeffs.get(tuple(w), BOTTOM)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((len(w) for w in self.coeffs), default=0)

    def __add__(self, other: "FreeWordElement") -> "FreeWordElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return FreeWordElement(out)

    def negate(self) -> "FreeWordElement":
        return FreeWordElement({w: c.negate() for w, c in self.coeffs.items()})

    __neg__ = negate

    def scale(self, alpha: EltScalar) -> "FreeWordElement":
        return FreeWordElement({w: alpha * c for w, c in self.coeffs.items()})

    def __mul__(self, other: "FreeWordElement") -> "FreeWordElement":
        out: Dict[Word, EltScalar] = {}
        for wu, cu in self.coeffs.items():
            for wv, cv in other.coeffs.items():
                w = concat(wu, wv)
                c = cu * cv
                out[w] = out[w] + c if w in out else c
        return FreeWordElement(out)

    def is_quasi_zero(self) -> bool:
        return all(c.is_quasi_zero() for c in self.coeffs.values())

    def surpasses(self, other: "FreeWordElement") -> bool:
        words = set(self.coeffs) | set(other.coeffs)
        return all(self.coeff(w).surpasses(other.coeff(w)) for w in words)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWordElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "word(0)"
        parts = []
        for w in sorted(self.coeffs, key=lambda w: (len(w), w)):
            name = "1" if not w else "".join(f"x{i}" for i in w)
            parts.append(f"{self.coeffs[w]!r}*{name}")
        return "word(" + " + ".join(parts) + ")"


def word_mul(u: FreeWordElement, v: FreeWordElement) -> FreeWordElement:
    """Bilinear concatenation product."""
    return u * v


def free_commutator(u: FreeWordElement, v: FreeWordElement) -> FreeWordElement:
    """uv - vu in the free algebra."""
    return u * v + (v * u).negate()


def rewrite_bracket_once(
    x: Vector, y: Vector, alg: FreeLieAlgebra
) -> Tuple[FreeWordElement, FreeWordElement]:
    """One step of the enveloping relation: the bracket of two module
    elements as a degree-1 word element, alongside the commutator side
    x (x) y - y (x) x. Demonstration only; the full congruence closure
    is not computed."""
    br = bracket(x, y, alg)
    lhs = FreeWordElement(
        {(i,): c for i, c in enumerate(br.entries) if not c.is_bottom}
    )
    wx = FreeWordElement({(i,): c for i, c in enumerate(x.entries) if not c.is_bottom})
    wy = FreeWordElement({(i,): c for i, c in enumerate(y.entries) if not c.is_bottom})
    return lhs, free_commutator(wx, wy)


def random_word_element(
    rng: random.Random,
    n_symbols: int,
    degree: int,
    max_terms: int = 3,
    quasi_zero_only: bool = False,
) -> FreeWordElement:
    coeffs: Dict[Word, EltScalar] = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, degree)
        w = tuple(rng.randint(1, n_symbols) for _ in range(length))
        layer = 0 if quasi_zero_only else rng.choice((-2, -1, 1, 2))
        c = elt(rng.randint(-1, 1), layer)
        coeffs[w] = coeffs[w] + c if w in coeffs else c
    return FreeWordElement(coeffs)


def verify_strong_jacobi_free(
    n_symbols: int, degree: int, samples: int, seed: int = 0
) -> StrongJacobiReport:
    """Sampled surpassing-Jacobi check in the free algebra; it holds
    identically there (the two sides differ by balanced words)."""
    if degree < 3:
        raise ValueError("need degree at least 3")
    rng = random.Random(seed)
    report = StrongJacobiReport()
    for _ in range(samples):
        x = random_word_element(rng, n_symbols, degree // 3)
        y = random_word_element(rng, n_symbols, degree // 3)
        z = random_word_element(rng, n_symbols, degree // 3)
        report.checked += 1
        if not strong_jacobi_holds(
            x, y, z, free_commutator, lambda v: v.negate()
        ):
            report.failures.append((x, y, z))
    return report


def counterexample_algebra() -> FreeLieAlgebra:
    """The two-dimensional algebra whose brackets are
    [x1,x1] = [x2,x2] = (1,0)x1 + (1,0)x2 and [x1,x2] = x1 + x2."""
    one0 = elt(1, 0)
    return construct_2dim(
        one0, one0, one0, one0, ELT_ONE, ELT_ONE, labels=("x1", "x2")
    )


class PbwAssertionError(AssertionError):
    """A step of the counterexample failed; carries the step name."""

    def __init__(self, step: str, detail: str = ""):
        super().__init__(f"counterexample step failed: {step} {detail}".rstrip())
        self.step = step


class PbwReport:
    """End-to-end record of the no-embedding argument."""

    def __init__(
        self,
        y1: Vector,
        y2: Vector,
        surpass_y2_y1: bool,
        equal: bool,
        strong_jacobi_in_free: bool,
        partial_order_checked: int,
        conclusion: str,
    ):
        self.y1 = y1
        self.y2 = y2
        self.surpass_y2_y1 = surpass_y2_y1
        self.equal = equal
        self.strong_jacobi_in_free = strong_jacobi_in_free
        self.partial_order_checked = partial_order_checked
        self.conclusion = conclusion

    def __repr__(self):
        return (
            f"PbwReport(y1={self.y1!r}, y2={self.y2!r}, "
            f"surpass={self.surpass_y2_y1}, equal={self.equal}, "
            f"conclusion={self.conclusion!r})"
        )


def _check_antisymmetry_samples(samples: int, seed: int) -> int:
    """Randomized partial-order premise: whenever mutual surpassing is
    constructed (a = b + quasi-zero), it collapses to equality."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        b = elt(rng.randint(-3, 3), rng.choice((-2, -1, 0, 1, 2)))
        c = elt(rng.randint(-3, 3), 0) if rng.random() < 0.8 else BOTTOM
        a = b + c
        if a.surpasses(b) and b.surpasses(a) and a != b:
            return -1
        checked += 1
    return checked


def pbw_counterexample(
    samples: int = 200, seed: int = 0
) -> PbwReport:
    """Reproduce the no-embedding argument end to end.

    Computes y1 and y2 in the two-dimensional algebra, checks the
    strict one-way surpassing there, checks that the free associative
    algebra satisfies the strong Jacobi form on the decisive triple
    (and on samples), checks the partial-order premise on samples, and
    concludes that no injective bracket-preserving map into a negated
    commutator algebra exists. Raises PbwAssertionError on the first
    failing step.
    """
    alg = counterexample_algebra()
    x1, x2 = alg.basis()

    y1 = bracket(x1, bracket(x1, x2, alg), alg) + bracket(
        x1, bracket(x2, x1, alg), alg
    )
    y2 = bracket(x2, bracket(x1, x1, alg), alg)

    expected_y1 = Vector([elt(1, 0), elt(1, 0)])
    expected_y2 = Vector([elt(2, 0), elt(2, 0)])
    if y1 != expected_y1:
        raise PbwAssertionError("y1-value", f"got {y1!r}")
    if y2 != expected_y2:
        raise PbwAssertionError("y2-value", f"got {y2!r}")

    surpass = y2.surpasses(y1)
    equal = y1 == y2
    if not surpass:
        raise PbwAssertionError("y2-surpasses-y1")
    if equal:
        raise PbwAssertionError("y1-differs-from-y2")

    # weak Jacobi consistency of the source algebra on the triple
    jac = (
        bracket(x1, bracket(x1, x2, alg), alg)
        + bracket(x2, bracket(x1, x1, alg), alg)
        + bracket(x1, bracket(x2, x1, alg), alg)
    )
    if not jac.is_quasi_zero():
        raise PbwAssertionError("weak-jacobi-in-source")

    # the decisive triple in the free associative algebra
    a1 = FreeWordElement.symbol(1)
    a2 = FreeWordElement.symbol(2)
    b1 = free_commutator(a1, free_commutator(a1, a2)) + free_commutator(
        a1, free_commutator(a2, a1)
    )
    b2 = free_commutator(a2, free_commutator(a1, a1))
    strong_triple = strong_jacobi_holds(
        a1, a1, a2, free_commutator, lambda v: v.negate()
    )
    if not strong_triple:
        raise PbwAssertionError("strong-jacobi-triple-in-free")
    if not b1.surpasses(b2):
        raise PbwAssertionError("b1-surpasses-b2-in-free")
    if b2.negate() != b2:
        raise PbwAssertionError("b2-self-negating")
    sampled = verify_strong_jacobi_free(2, 3, samples=samples, seed=seed)
    if not sampled.passed:
        raise PbwAssertionError("strong-jacobi-sampled-in-free")

    # and the source algebra itself must fail the strong form
    if verify_strong_jacobi_triple(x1, x1, x2, alg):
        raise PbwAssertionError("source-should-fail-strong-jacobi")

    checked = _check_antisymmetry_samples(samples, seed)
    if checked < 0:
        raise PbwAssertionError("partial-order-premise")

    conclusion = "no injective morphism exists"
    return PbwReport(
        y1=y1,
        y2=y2,
        surpass_y2_y1=surpass,
        equal=equal,
        strong_jacobi_in_free=strong_triple and sampled.passed,
        partial_order_checked=checked,
        conclusion=conclusion,
    )
