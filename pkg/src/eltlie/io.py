"""Serialization: the scalar/vector/matrix JSON formats, structure
constant files, the Puiseux literal syntax, and the tiny scalar
expression grammar used by the CLI.

Scalars are ``"bottom"`` or ``{"t": "p/q", "layer": "p/q"}`` with
rationals as exact strings; round trips are bit exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Tuple

from .scalars import BOTTOM, EltScalar, rat, rat_str
from .linalg import Matrix, Vector
from .lie import FreeLieAlgebra, StructureConstants


class FormatError(ValueError):
    """Malformed input file or literal; the message carries the spot."""


def _parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return rat(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational {s!r}: {exc}") from None
    raise FormatError(f"rational must be a string or integer, got {type(s).__name__}")


def scalar_to_json(a: EltScalar):
    if a.is_bottom:
        return "bottom"
    return {"t": rat_str(a.t), "layer": rat_str(a.layer)}


def scalar_from_json(data) -> EltScalar:
    if data == "bottom":
        return BOTTOM
    if isinstance(data, dict) and set(data) == {"t", "layer"}:
        return EltScalar(_parse_rational(data["t"]), _parse_rational(data["layer"]))
    raise FormatError(f"bad scalar {data!r}")


def vector_to_json(v: Vector) -> List:
    return [scalar_to_json(a) for a in v.entries]


def vector_from_json(data) -> Vector:
    if not isinstance(data, list):
        raise FormatError("vector must be a list of scalars")
    return Vector(scalar_from_json(a) for a in data)


def matrix_to_json(m: Matrix) -> Dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[scalar_to_json(a) for a in row] for row in m.entries],
    }


def matrix_from_json(data) -> Matrix:
    if not isinstance(data, dict) or "entries" not in data:
        raise FormatError("matrix must be an object with an entries grid")
    entries = data["entries"]
    m = Matrix([scalar_from_json(a) for a in row] for row in entries)
    if "rows" in data and data["rows"] != m.rows:
        raise FormatError(f"declared rows={data['rows']} but found {m.rows}")
    if "cols" in data and data["cols"] != m.cols:
        raise FormatError(f"declared cols={data['cols']} but found {m.cols}")
    return m


def algebra_to_json(alg: FreeLieAlgebra) -> Dict:
    entries = []
    a = alg.constants.alpha
    n = alg.dim
    for i in range(n):
        for j in range(n):
            if j < i:
                continue  # the lower half is antisymmetric bookkeeping
            for l in range(n):
                if not a[i][j][l].is_bottom:
                    entries.append(
                        {
                            "i": i + 1,
                            "j": j + 1,
                            "l": l + 1,
                            "scalar": scalar_to_json(a[i][j][l]),
                        }
                    )
    return {"dim": n, "base": list(alg.labels), "alpha": entries}


def algebra_from_json(data) -> FreeLieAlgebra:
    """Load structure constants.

    Omitted entries default to bottom; an omitted i>j half is filled by
    negated antisymmetry. Structural violations (duplicates, explicit
    antisymmetry conflicts, non-quasi-zero diagonal coordinates) are
    rejected with the offending indices.
    """
    if not isinstance(data, dict):
        raise FormatError("structure constants must be a JSON object")
    try:
        dim = int(data["dim"])
    except (KeyError, TypeError, ValueError):
        raise FormatError("missing or bad dim") from None
    if dim < 1:
        raise FormatError("dim must be positive")
    labels = data.get("base")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != dim:
            raise FormatError(f"base must list {dim} labels")
        labels = [str(x) for x in labels]
    raw = data.get("alpha", [])
    if not isinstance(raw, list):
        raise FormatError("alpha must be a list of entries")

    explicit: Dict[Tuple[int, int, int], EltScalar] = {}
    for pos, item in enumerate(raw):
        if not isinstance(item, dict):
            raise FormatError(f"alpha[{pos}] must be an object")
        try:
            i, j, l = int(item["i"]), int(item["j"]), int(item["l"])
        except (KeyError, TypeError, ValueError):
            raise FormatError(f"alpha[{pos}] needs integer i, j, l") from None
        for name, v in (("i", i), ("j", j), ("l", l)):
            if not 1 <= v <= dim:
                raise FormatError(
                    f"alpha[{pos}]: index {name}={v} outside 1..{dim}"
                )
        if "scalar" not in item:
            raise FormatError(f"alpha[{pos}] misses the scalar")
        value = scalar_from_json(item["scalar"])
        key = (i - 1, j - 1, l - 1)
        if key in explicit:
            raise FormatError(f"duplicate entry at (i,j,l)=({i},{j},{l})")
        explicit[key] = value

    for (i, j, l), v in explicit.items():
        mirror = (j, i, l)
        if i != j and mirror in explicit and explicit[mirror] != v.negate():
            raise FormatError(
                "antisymmetry violated at (i,j,l)="
                f"({j + 1},{i + 1},{l + 1}): expected the negation of "
                f"({i + 1},{j + 1},{l + 1})"
            )
        if i == j and not v.is_quasi_zero():
            raise FormatError(
                f"diagonal entry at (i,i,l)=({i + 1},{i + 1},{l + 1}) "
                "must be quasi-zero"
            )

    constants = StructureConstants.from_entries(
        dim, explicit, fill_antisymmetric=True
    )
    return FreeLieAlgebra(constants, labels)


# --- Puiseux literals: "5t^-3 + 1t^0", coefficients and exponents rational,
# terms joined by '+'; exponents may be negative but carry no bare '+' ---

_TERM_RE = re.compile(
    r"^(?P<sign>-)?(?P<coeff>\d+(?:/\d+)?)?t(?:\^(?P<exp>-?\d+(?:/\d+)?))?$"
)
_CONST_RE = re.compile(r"^(?P<coeff>-?\d+(?:/\d+)?)$")


def puiseux_from_literal(text: str):
    from .lift import PuiseuxSeries

    if not text.strip():
        raise FormatError("empty series literal")
    if text.strip() == "0":
        return PuiseuxSeries({})
    terms = {}
    for raw in text.split("+"):
        part = raw.strip().replace(" ", "")
        if not part:
            raise FormatError(f"empty term in {text!r}")
        m = _TERM_RE.match(part)
        if m:
            coeff = rat(m.group("coeff")) if m.group("coeff") else Fraction(1)
            if m.group("sign"):
                coeff = -coeff
            exp = rat(m.group("exp")) if m.group("exp") else Fraction(0)
        else:
            c = _CONST_RE.match(part)
            if not c:
                raise FormatError(f"bad series term {raw!r}")
            coeff, exp = rat(c.group("coeff")), Fraction(0)
        terms[exp] = terms.get(exp, Fraction(0)) + coeff
    return PuiseuxSeries(terms)


def puiseux_to_literal(s) -> str:
    if not s.terms:
        return "0"
    parts = []
    for e, c in s.terms:
        parts.append(f"{rat_str(c)}t^{rat_str(e)}")
    return " + ".join(parts)


# --- scalar expressions for the eval command: literals, + and * ---

_SCALAR_LIT = re.compile(
    r"\(\s*(?P<t>[+-]?\d+(?:/\d+)?)\s*,\s*(?P<l>[+-]?\d+(?:/\d+)?)\s*\)|bottom"
)


def _tokenize_expr(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "+*~":
            tokens.append((ch, ch))
            pos += 1
            continue
        m = _SCALAR_LIT.match(text, pos)
        if not m:
            raise FormatError(f"bad token at position {pos} in {text!r}")
        if m.group(0) == "bottom":
            tokens.append(("scalar", BOTTOM))
        else:
            tokens.append(
                ("scalar", EltScalar(rat(m.group("t")), rat(m.group("l"))))
            )
        pos = m.end()
    return tokens


def eval_scalar_expression(text: str) -> EltScalar:
    """Evaluate an expression over scalar literals with + and * (and
    unary ~ for the negation map); * binds tighter than +."""
    tokens = _tokenize_expr(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def parse_atom() -> EltScalar:
        nonlocal pos
        kind = peek()
        if kind == "~":
            pos += 1
            return parse_atom().negate()
        if kind == "scalar":
            value = tokens[pos][1]
            pos += 1
            return value
        raise FormatError(f"expected a scalar at token {pos} in {text!r}")

    def parse_product() -> EltScalar:
        nonlocal pos
        value = parse_atom()
        while peek() == "*":
            pos += 1
            value = value * parse_atom()
        return value

    def parse_sum() -> EltScalar:
        nonlocal pos
        value = parse_product()
        while peek() == "+":
            pos += 1
            value = value + parse_product()
        return value

    out = parse_sum()
    if pos != len(tokens):
        raise FormatError(f"trailing tokens in {text!r}")
    return out
