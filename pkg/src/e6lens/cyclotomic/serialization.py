import json
import re
from fractions import Fraction
from typing import List, Optional

from e6lens.cyclotomic import (
    DEGREE,
    IMAGINARY_UNIT,
    ONE,
    SQRT2,
    SQRT3,
    CyclotomicNumber,
)
from e6lens.cyclotomic.linalg import solve_rational

SURD_LIMIT = 1000

_TERM = re.compile(r"(-?\d+)/(\d+)(\*z(?:\^(\d+))?)?")


class SerializationError(Exception):
    def __init__(self, text: str, reason: str):
        super().__init__(f"cannot parse {text!r}: {reason}")
        self.text = text
        self.reason = reason


def _term(k: int, c: Fraction) -> str:
    coeff = f"{c.numerator}/{c.denominator}"
    if k == 0:
        return coeff
    if k == 1:
        return f"{coeff}*z"
    return f"{coeff}*z^{k}"


def to_text(x: CyclotomicNumber) -> str:
    """Canonical form `c0 + c1*z + ... + c7*z^7`, every c as num/den."""
    return " + ".join(_term(k, c) for k, c in enumerate(x.coeffs))


def from_text(text: str) -> CyclotomicNumber:
    terms = text.strip().split(" + ")
    if len(terms) != DEGREE:
        raise SerializationError(text, f"expected {DEGREE} terms, got {len(terms)}")

    coeffs = []
    for k, term in enumerate(terms):
        match = _TERM.fullmatch(term)
        if match is None:
            raise SerializationError(text, f"malformed term {term!r}")

        num, den, power, exponent = match.groups()
        found = 0 if power is None else int(exponent or 1)
        if found != k or (k == 1 and exponent is not None):
            raise SerializationError(text, f"term {term!r} out of order")
        if int(den) == 0:
            raise SerializationError(text, "zero denominator")

        coeffs.append(Fraction(int(num), int(den)))

    return CyclotomicNumber(coeffs)


def to_json_value(x: CyclotomicNumber) -> List[List[int]]:
    return [[c.numerator, c.denominator] for c in x.coeffs]


def to_json(x: CyclotomicNumber) -> str:
    return json.dumps(to_json_value(x), separators=(",", ":"))


def from_json_value(value) -> CyclotomicNumber:
    if not isinstance(value, list) or len(value) != DEGREE:
        raise SerializationError(str(value), f"expected {DEGREE} [num, den] pairs")

    coeffs = []
    for pair in value:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)
            or pair[1] <= 0
        ):
            raise SerializationError(str(value), f"bad pair {pair!r}")
        coeffs.append(Fraction(pair[0], pair[1]))

    return CyclotomicNumber(coeffs)


def from_json(text: str) -> CyclotomicNumber:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(text, str(exc)) from exc
    return from_json_value(value)


# Q(ζ24) = Q(√2, √3, i)
_SURD_BASIS = [
    ("", ONE),
    ("√2", SQRT2),
    ("√3", SQRT3),
    ("√6", SQRT2 * SQRT3),
    ("i", IMAGINARY_UNIT),
    ("i√2", IMAGINARY_UNIT * SQRT2),
    ("i√3", IMAGINARY_UNIT * SQRT3),
    ("i√6", IMAGINARY_UNIT * SQRT2 * SQRT3),
]


def surd_coordinates(x: CyclotomicNumber) -> List[Fraction]:
    """Coordinates of x over 1, √2, √3, √6, i, i√2, i√3, i√6."""
    columns = [element.coeffs for _, element in _SURD_BASIS]
    matrix = [[columns[j][i] for j in range(DEGREE)] for i in range(DEGREE)]
    return solve_rational(matrix, list(x.coeffs))


def _surd_term(magnitude: Fraction, label: str) -> str:
    if label == "":
        return str(magnitude)
    if magnitude == 1:
        return label
    if magnitude.denominator == 1:
        return f"{magnitude}{label}"
    return f"({magnitude}){label}"


def to_surd(x: CyclotomicNumber) -> Optional[str]:
    """
    Human-readable form such as `6 + 2√3`, or None when some coordinate has a
    numerator or denominator larger than SURD_LIMIT.
    """
    coordinates = surd_coordinates(x)
    if any(
        abs(c.numerator) > SURD_LIMIT or c.denominator > SURD_LIMIT
        for c in coordinates
    ):
        return None

    text = ""
    for c, (label, _) in zip(coordinates, _SURD_BASIS):
        if c == 0:
            continue
        term = _surd_term(abs(c), label)
        if not text:
            text = f"-{term}" if c < 0 else term
        else:
            text += f" - {term}" if c < 0 else f" + {term}"

    return text or "0"
