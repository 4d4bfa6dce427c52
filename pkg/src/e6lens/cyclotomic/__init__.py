"""
Exact arithmetic in Q(ζ) with ζ = exp(πi/12), a primitive 24th root of unity.

Elements are stored over the power basis 1, ζ, ..., ζ^7 and reduced modulo
Φ24(x) = x^8 - x^4 + 1, so two elements are equal iff their coefficients are.
"""

from fractions import Fraction
from functools import cache
from math import gcd, lcm
from typing import Iterable, Tuple

import mpmath

from e6lens.cyclotomic.linalg import invert_modulo_minimal_polynomial, solve_rational

DEGREE = 8
ORDER = 24

# arbitrary-precision signed rational, always reduced
BigRational = Fraction


class NotRealError(Exception):
    def __init__(self, value: "CyclotomicNumber"):
        super().__init__(f"{value!r} is not real")
        self.value = value


def _reduce(poly: list) -> list:
    """Fold exponents >= 8 back into the basis with ζ^8 = ζ^4 - 1."""
    for k in range(len(poly) - 1, DEGREE - 1, -1):
        c = poly[k]
        if c:
            poly[k - 4] += c
            poly[k - 8] -= c
    return poly[:DEGREE]


def _from_integers(num, den: int) -> "CyclotomicNumber":
    """Build sum(num[k] ζ^k) / den, den > 0, normalizing the common factor."""
    num = tuple(num)
    if not any(num):
        num, den = (0,) * DEGREE, 1
    else:
        g = gcd(den, *num)
        if g != 1:
            num = tuple(c // g for c in num)
            den //= g

    x = object.__new__(CyclotomicNumber)
    x._num = num
    x._den = den
    return x


def _coerce(value):
    if isinstance(value, CyclotomicNumber):
        return value
    if isinstance(value, int):
        return _from_integers((value,) + (0,) * (DEGREE - 1), 1)
    if isinstance(value, Fraction):
        return _from_integers(
            (value.numerator,) + (0,) * (DEGREE - 1), value.denominator
        )
    return NotImplemented


class CyclotomicNumber:
    """An element sum(coeffs[k] ζ^k), k = 0..7, of Q(ζ24). Immutable."""

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable[int | Fraction] = (0,) * DEGREE):
        values = [Fraction(c) for c in coeffs]
        if len(values) != DEGREE:
            raise ValueError(f"expected {DEGREE} coefficients, got {len(values)}")

        den = lcm(*(v.denominator for v in values))
        normalized = _from_integers(
            (v.numerator * (den // v.denominator) for v in values), den
        )
        self._num = normalized._num
        self._den = normalized._den

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> Tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def __repr__(self) -> str:
        return f"CyclotomicNumber({[str(c) for c in self.coeffs]})"

    def __reduce__(self):
        return (_from_integers, (self._num, self._den))

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> "CyclotomicNumber":
        return _from_integers((-c for c in self._num), self._den)

    def __add__(self, other) -> "CyclotomicNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == other._den:
            return _from_integers(
                (a + b for a, b in zip(self._num, other._num)), self._den
            )
        return _from_integers(
            (a * other._den + b * self._den for a, b in zip(self._num, other._num)),
            self._den * other._den,
        )

    def __radd__(self, other) -> "CyclotomicNumber":
        return self + other

    def __sub__(self, other) -> "CyclotomicNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CyclotomicNumber":
        return (-self) + other

    def __mul__(self, other) -> "CyclotomicNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO

        prod = [0] * (2 * DEGREE - 1)
        for i, a in enumerate(self._num):
            if a:
                for j, b in enumerate(other._num):
                    if b:
                        prod[i + j] += a * b
        return _from_integers(_reduce(prod), self._den * other._den)

    def __rmul__(self, other) -> "CyclotomicNumber":
        return self * other

    def __truediv__(self, other) -> "CyclotomicNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CyclotomicNumber":
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "CyclotomicNumber":
        if n < 0:
            return self.inverse() ** -n
        result, base = ONE, self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CyclotomicNumber":
        """
        Solve the 8x8 rational system given by multiplication by self in the
        power basis.
        """
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in Q(ζ24)")

        columns = [(self * reduce_power(j)).coeffs for j in range(DEGREE)]
        matrix = [[columns[j][i] for j in range(DEGREE)] for i in range(DEGREE)]
        rhs = [Fraction(1)] + [Fraction(0)] * (DEGREE - 1)
        return CyclotomicNumber(solve_rational(matrix, rhs))

    def conjugate(self) -> "CyclotomicNumber":
        out = [0] * DEGREE
        for k, c in enumerate(self._num):
            if c:
                for i, v in enumerate(_CONJUGATE_IMAGES[k]):
                    out[i] += c * v
        return _from_integers(out, self._den)

    def __complex__(self) -> complex:
        re, im = to_complex_float(self, 53)
        return complex(float(re), float(im))


@cache
def reduce_power(k: int) -> CyclotomicNumber:
    """ζ^k in the power basis."""
    poly = [0] * ORDER
    poly[k % ORDER] = 1
    return _from_integers(_reduce(poly), 1)


ZERO = _from_integers((0,) * DEGREE, 1)
ONE = reduce_power(0)
ZETA = reduce_power(1)

_CONJUGATE_IMAGES = [reduce_power(-k).numerators for k in range(DEGREE)]


def add(x: CyclotomicNumber, y: CyclotomicNumber) -> CyclotomicNumber:
    return x + y


def sub(x: CyclotomicNumber, y: CyclotomicNumber) -> CyclotomicNumber:
    return x - y


def mul(x: CyclotomicNumber, y: CyclotomicNumber) -> CyclotomicNumber:
    return x * y


def neg(x: CyclotomicNumber) -> CyclotomicNumber:
    return -x


def inv(x: CyclotomicNumber) -> CyclotomicNumber:
    return x.inverse()


def conjugate(x: CyclotomicNumber) -> CyclotomicNumber:
    """Complex conjugation, the automorphism ζ -> ζ^-1."""
    return x.conjugate()


def is_real(x: CyclotomicNumber) -> bool:
    return x.conjugate() == x


IMAGINARY_UNIT = reduce_power(6)
SQRT2 = reduce_power(3) + reduce_power(-3)
SQRT3 = reduce_power(2) + reduce_power(-2)

_QUANTUM_DENOMINATOR = (ZETA - reduce_power(-1)).inverse()


@cache
def _quantum_integer(n: int) -> CyclotomicNumber:
    return (reduce_power(n) - reduce_power(-n)) * _QUANTUM_DENOMINATOR


def quantum_integer(n: int) -> CyclotomicNumber:
    """[n] = (ζ^n - ζ^-n) / (ζ - ζ^-1)."""
    return _quantum_integer(n % ORDER)


# w = 2 + [3]^2 = 6 + 2√3
W = 2 + quantum_integer(3) ** 2


def to_complex_float(
    x: CyclotomicNumber, precision_bits: int = 53
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Evaluate x at ζ = exp(πi/12) with the given binary precision."""
    if precision_bits < 53:
        raise ValueError(f"precision must be at least 53 bits, got {precision_bits}")

    with mpmath.workprec(precision_bits):
        den = mpmath.mpf(x.denominator)
        re = mpmath.mpf(0)
        im = mpmath.mpf(0)
        for k, c in enumerate(x.numerators):
            if c:
                angle = mpmath.mpf(k) / 12
                re += c * mpmath.cospi(angle)
                im += c * mpmath.sinpi(angle)
        return re / den, im / den


def sign(x: CyclotomicNumber, precision_bits: int = 128) -> int:
    """Sign of a real element, decided on its float embedding."""
    if not is_real(x):
        raise NotRealError(x)
    if x.is_zero():
        return 0

    bits = precision_bits
    while True:
        re, _ = to_complex_float(x, bits)
        if abs(re) >= mpmath.mpf(2) ** (-(bits // 2)):
            return 1 if re > 0 else -1
        # x != 0 here, so this terminates
        bits *= 2


def abs_real(x: CyclotomicNumber) -> CyclotomicNumber:
    """|x| for real x. Raise NotRealError otherwise."""
    return -x if sign(x) < 0 else x


def inverse_by_euclid(x: CyclotomicNumber) -> CyclotomicNumber:
    """Same as inv(x), computed by extended Euclid against Φ24."""
    if x.is_zero():
        raise ZeroDivisionError("zero has no inverse in Q(ζ24)")
    return CyclotomicNumber(invert_modulo_minimal_polynomial(x.coeffs))
