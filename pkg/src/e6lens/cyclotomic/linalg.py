from fractions import Fraction
from typing import List, Sequence

from sympy import Poly, Rational, cyclotomic_poly, symbols
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

_x = symbols("x")

MINIMAL_POLYNOMIAL = Poly(cyclotomic_poly(24, _x), _x, domain=QQ)


class SingularSystemError(Exception):
    def __init__(self, size: int):
        self.size = size


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def solve_rational(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> List[Fraction]:
    """
    Solve matrix @ x = rhs exactly over the rationals.

    Raise SingularSystemError when the matrix is not invertible.
    """
    size = len(rhs)
    a = DomainMatrix(
        [[QQ(v.numerator, v.denominator) for v in row] for row in matrix],
        (size, size),
        QQ,
    )
    b = DomainMatrix(
        [[QQ(v.numerator, v.denominator)] for v in rhs],
        (size, 1),
        QQ,
    )
    if a.rank() < size:
        raise SingularSystemError(size)

    solution = a.lu_solve(b)
    return [_to_fraction(row[0]) for row in solution.to_list()]


def invert_modulo_minimal_polynomial(coeffs: Sequence[Fraction]) -> List[Fraction]:
    """
    Inverse of sum(coeffs[k] x^k) modulo x^8 - x^4 + 1, via the polynomial
    extended Euclidean algorithm. Coefficients are returned lowest degree first.
    """
    poly = Poly(
        [Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
        _x,
        domain=QQ,
    )
    inverse = poly.invert(MINIMAL_POLYNOMIAL)

    low_first = [Fraction(int(c.p), int(c.q)) for c in reversed(inverse.all_coeffs())]
    degree = MINIMAL_POLYNOMIAL.degree()
    return low_first + [Fraction(0)] * (degree - len(low_first))
