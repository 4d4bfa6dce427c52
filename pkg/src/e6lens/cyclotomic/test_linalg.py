from fractions import Fraction

import pytest

from e6lens.cyclotomic.linalg import (
    MINIMAL_POLYNOMIAL,
    SingularSystemError,
    invert_modulo_minimal_polynomial,
    solve_rational,
)


def test_minimal_polynomial_is_phi24():
    assert MINIMAL_POLYNOMIAL.all_coeffs() == [1, 0, 0, 0, -1, 0, 0, 0, 1]


def test_solve_rational():
    matrix = [
        [Fraction(2), Fraction(1)],
        [Fraction(1), Fraction(3)],
    ]
    solution = solve_rational(matrix, [Fraction(1), Fraction(2)])

    assert solution == [Fraction(1, 5), Fraction(3, 5)]


def test_solve_rational_singular():
    matrix = [
        [Fraction(1), Fraction(2)],
        [Fraction(2), Fraction(4)],
    ]
    with pytest.raises(SingularSystemError) as exc_info:
        solve_rational(matrix, [Fraction(1), Fraction(0)])

    assert exc_info.value.size == 2


def test_invert_constant():
    coeffs = [Fraction(4)] + [Fraction(0)] * 7

    assert invert_modulo_minimal_polynomial(coeffs) == [Fraction(1, 4)] + [0] * 7


def test_invert_generator():
    # ζ^-1 = ζ^3 - ζ^7
    coeffs = [Fraction(0), Fraction(1)] + [Fraction(0)] * 6

    assert invert_modulo_minimal_polynomial(coeffs) == [0, 0, 0, 1, 0, 0, 0, -1]
