"""Scalar arithmetic for semirings with a negation map.

Three concrete scalar families share one operation signature (add, mul,
negate, quasi-zero test, surpassing relation):

* ``EltScalar`` -- layered tropical numbers (tangible value, layer) over
  QxQ, with an adjoined absorbing bottom element;
* ``SupertropicalScalar`` -- max-plus numbers refined by a ghost flag,
  ties become ghosts;
* ``SymPair`` -- the symmetrization R x R of an arbitrary commutative
  base semiring, with the twist product and coordinate-swap negation.

All values are immutable; every operation is pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

Rat = Union[Fraction, int, str]


def rat(x: Rat) -> Fraction:
    """Coerce ints, strings like '3' or '-1/2', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rat_str(x: Fraction) -> str:
    """Render exactly, 'p' or 'p/q'."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class EltScalar:
    """A layered tropical scalar: tangible value and layer, or bottom.

    Addition keeps the larger tangible; on tangible ties the layers add.
    Multiplication adds tangibles and multiplies layers. Negation flips
    the layer sign. Bottom is the adjoined additive identity, absorbing
    under multiplication; its layer slot is normalized to 0.
    """

    __slots__ = ("t", "layer")

    def __init__(self, t: Optional[Rat], layer: Rat = 0):
        if t is None:
            object.__setattr__(self, "t", None)
            object.__setattr__(self, "layer", Fraction(0))
        else:
            object.__setattr__(self, "t", rat(t))
            object.__setattr__(self, "layer", rat(layer))

    def __setattr__(self, name, value):
        raise AttributeError("EltScalar is immutable")

    @property
    def is_bottom(self) -> bool:
        return self.t is None

    def is_quasi_zero(self) -> bool:
        """Layer zero or bottom: the elements playing the role of 0."""
        return self.t is None or self.layer == 0

    def __add__(self, other: "EltScalar") -> "EltScalar":
        if self.t is None:
            return other
        if other.t is None:
            return self
        if self.t > other.t:
            return self
        if self.t < other.t:
            return other
        return EltScalar(self.t, self.layer + other.layer)

    def __mul__(self, other: "EltScalar") -> "EltScalar":
        if self.t is None or other.t is None:
            return BOTTOM
        return EltScalar(self.t + other.t, self.layer * other.layer)

    def negate(self) -> "EltScalar":
        if self.t is None:
            return self
        return EltScalar(self.t, -self.layer)

    __neg__ = negate

    def __pow__(self, n: int) -> "EltScalar":
        out = ELT_ONE
        for _ in range(n):
            out = out * self
        return out

    def circ(self) -> "EltScalar":
        return self + self.negate()

    def surpasses(self, other: "EltScalar") -> bool:
        """Closed form of: exists quasi-zero c with self == other + c."""
        if self == other:
            return True
        if other.t is None:
            return self.is_quasi_zero()
        return self.layer == 0 and self.t is not None and self.t > other.t

    def zero(self) -> "EltScalar":
        return BOTTOM

    def one(self) -> "EltScalar":
        return ELT_ONE

    def inverse(self) -> "EltScalar":
        if self.is_quasi_zero():
            raise ZeroDivisionError("quasi-zero layered scalars are not invertible")
        return EltScalar(-self.t, 1 / self.layer)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EltScalar)
            and self.t == other.t
            and self.layer == other.layer
        )

    def __hash__(self) -> int:
        return hash((self.t, self.layer))

    def __repr__(self) -> str:
        if self.t is None:
            return "bottom"
        return f"({rat_str(self.t)},{rat_str(self.layer)})"


BOTTOM = EltScalar(None)
ELT_ONE = EltScalar(0, 1)
ELT_MINUS_ONE = EltScalar(0, -1)
ELT_ZERO_LAYER_ONE = EltScalar(0, 0)


def elt(t: Optional[Rat], layer: Rat = 0) -> EltScalar:
    """Shorthand constructor; ``elt(None)`` is bottom."""
    return BOTTOM if t is None else EltScalar(t, layer)


class SupertropicalScalar:
    """Max-plus scalar with a ghost flag; ties produce ghosts.

    Negation is the identity map; the quasi-zero set is the ghost ideal
    (plus bottom). Bottom is normalized to the ghost flag being set.
    """

    __slots__ = ("value", "ghost")

    def __init__(self, value: Optional[Rat], ghost: bool = False):
        if value is None:
            object.__setattr__(self, "value", None)
            object.__setattr__(self, "ghost", True)
        else:
            object.__setattr__(self, "value", rat(value))
            object.__setattr__(self, "ghost", bool(ghost))

    def __setattr__(self, name, value):
        raise AttributeError("SupertropicalScalar is immutable")

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    def is_quasi_zero(self) -> bool:
        return self.ghost

    def __add__(self, other: "SupertropicalScalar") -> "SupertropicalScalar":
        if self.value is None:
            return other
        if other.value is None:
            return self
        if self.value > other.value:
            return self
        if self.value < other.value:
            return other
        return SupertropicalScalar(self.value, True)

    def __mul__(self, other: "SupertropicalScalar") -> "SupertropicalScalar":
        if self.value is None or other.value is None:
            return SUPER_BOTTOM
        return SupertropicalScalar(self.value + other.value, self.ghost or other.ghost)

    def negate(self) -> "SupertropicalScalar":
        return self

    __neg__ = negate

    def circ(self) -> "SupertropicalScalar":
        return self + self

    def surpasses(self, other: "SupertropicalScalar") -> bool:
        if self == other:
            return True
        if not self.ghost:
            return False
        if other.value is None:
            return True
        return self.value is not None and self.value >= other.value

    def zero(self) -> "SupertropicalScalar":
        return SUPER_BOTTOM

    def one(self) -> "SupertropicalScalar":
        return SUPER_ONE

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SupertropicalScalar)
            and self.value == other.value
            and self.ghost == other.ghost
        )

    def __hash__(self) -> int:
        return hash((self.value, self.ghost))

    def __repr__(self) -> str:
        if self.value is None:
            return "st-bottom"
        tag = "ghost" if self.ghost else "tangible"
        return f"{tag}({rat_str(self.value)})"


SUPER_BOTTOM = SupertropicalScalar(None)
SUPER_ONE = SupertropicalScalar(0, False)


def supertropical(value: Optional[Rat], ghost: bool = False) -> SupertropicalScalar:
    return SUPER_BOTTOM if value is None else SupertropicalScalar(value, ghost)


class BaseSemiring:
    """Operation table for the base of a symmetrization.

    ``try_difference(a, b)`` should return c with b + c == a, or None;
    it backs the surpassing test and may be omitted for bases where no
    such search is available.
    """

    def __init__(self, add, mul, zero, one, try_difference=None, name="semiring"):
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.try_difference = try_difference
        self.name = name

    def __repr__(self):
        return f"BaseSemiring({self.name})"


def _nat_difference(a, b):
    return a - b if a >= b else None

NATURALS = BaseSemiring(
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
    zero=0,
    one=1,
    try_difference=_nat_difference,
    name="N0",
)


class SymPair:
    """Symmetrized pair (pos, neg) over a commutative base semiring.

    Componentwise addition; the twist product
    (r1, r2)(s1, s2) = (r1 s1 + r2 s2, r1 s2 + r2 s1);
    negation swaps the components. (pos, neg) stands for pos - neg.
    """

    __slots__ = ("pos", "neg", "base")

    def __init__(self, pos, neg, base: BaseSemiring = NATURALS):
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "base", base)

    def __setattr__(self, name, value):
        raise AttributeError("SymPair is immutable")

    def is_quasi_zero(self) -> bool:
        return self.pos == self.neg

    def __add__(self, other: "SymPair") -> "SymPair":
        b = self.base
        return SymPair(b.add(self.pos, other.pos), b.add(self.neg, other.neg), b)

    def __mul__(self, other: "SymPair") -> "SymPair":
        b = self.base
        return SymPair(
            b.add(b.mul(self.pos, other.pos), b.mul(self.neg, other.neg)),
            b.add(b.mul(self.pos, other.neg), b.mul(self.neg, other.pos)),
            b,
        )

    def negate(self) -> "SymPair":
        return SymPair(self.neg, self.pos, self.base)

    __neg__ = negate

    def circ(self) -> "SymPair":
        return self + self.negate()

    def surpasses(self, other: "SymPair") -> bool:
        if self.base.try_difference is None:
            raise NotImplementedError(
                f"no difference search on base {self.base.name}"
            )
        d1 = self.base.try_difference(self.pos, other.pos)
        d2 = self.base.try_difference(self.neg, other.neg)
        return d1 is not None and d2 is not None and d1 == d2

    def zero(self) -> "SymPair":
        return SymPair(self.base.zero, self.base.zero, self.base)

    def one(self) -> "SymPair":
        return SymPair(self.base.one, self.base.zero, self.base)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPair)
            and self.pos == other.pos
            and self.neg == other.neg
        )

    def __hash__(self) -> int:
        return hash((self.pos, self.neg))

    def __repr__(self) -> str:
        return f"sym({self.pos},{self.neg})"


def sym(pos, neg, base: BaseSemiring = NATURALS) -> SymPair:
    return SymPair(pos, neg, base)


# Generic signature operations: every scalar above provides these methods,
# so higher layers (vectors, matrices, polynomials) stay scalar-agnostic.

def circ(a):
    """a + (-)a; always quasi-zero."""
    return a.circ()


def surpasses(a, b) -> bool:
    """The surpassing relation: a = b + c for some quasi-zero c."""
    return a.surpasses(b)


def nabla(a, b) -> bool:
    """True iff a - b is quasi-zero."""
    return (a + b.negate()).is_quasi_zero()


def elt_surpasses_by_witness(a: EltScalar, b: EltScalar) -> bool:
    """Witness-enumeration oracle for the layered surpassing relation.

    A quasi-zero witness c with a == b + c, if one exists, can be taken
    with tangible drawn from {t(a), t(b)} or bottom; scan those.
    """
    candidates = [BOTTOM]
    for s in (a, b):
        if s.t is not None:
            candidates.append(EltScalar(s.t, 0))
    return any(b + c == a for c in candidates)
