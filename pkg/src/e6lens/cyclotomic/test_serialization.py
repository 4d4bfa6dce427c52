from fractions import Fraction

import numpy as np
import pytest

from e6lens.cyclotomic import (
    IMAGINARY_UNIT,
    ONE,
    W,
    ZERO,
    ZETA,
    CyclotomicNumber,
    quantum_integer,
    reduce_power,
)
from e6lens.cyclotomic.serialization import (
    SerializationError,
    from_json,
    from_text,
    surd_coordinates,
    to_json,
    to_surd,
    to_text,
)


def test_text_form():
    assert (
        to_text(ONE)
        == "1/1 + 0/1*z + 0/1*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7"
    )
    assert (
        to_text(reduce_power(10))
        == "0/1 + 0/1*z + -1/1*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 1/1*z^6 + 0/1*z^7"
    )


def test_text_parses_back():
    rng = np.random.default_rng(3)
    for _ in range(20):
        x = CyclotomicNumber(
            Fraction(int(n), int(d))
            for n, d in zip(rng.integers(-50, 51, 8), rng.integers(1, 30, 8))
        )
        assert from_text(to_text(x)) == x
        assert from_json(to_json(x)) == x

    assert from_text(to_text(W.inverse())) == W.inverse()


def test_json_form():
    assert to_json(W.inverse()) == "[[1,4],[0,1],[-1,6],[0,1],[0,1],[0,1],[1,12],[0,1]]"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "1/1 + 0/1*z",
        "1/1 + 0/1*z^1 + 0/1*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7",
        "1/1 + 0/1*z + 0/1*z^3 + 0/1*z^2 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7",
        "1/0 + 0/1*z + 0/1*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7",
        "1.5 + 0/1*z + 0/1*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7",
    ],
)
def test_malformed_text(text):
    with pytest.raises(SerializationError) as exc_info:
        from_text(text)

    assert exc_info.value.text == text


@pytest.mark.parametrize(
    "text",
    ["{", "[]", "[[1,1]]", "[[1,0],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1]]"],
)
def test_malformed_json(text):
    with pytest.raises(SerializationError):
        from_json(text)


def test_surd_forms():
    assert to_surd(ZERO) == "0"
    assert to_surd(ONE) == "1"
    assert to_surd(-ONE) == "-1"
    assert to_surd(W) == "6 + 2√3"
    assert to_surd(quantum_integer(5)) == "2 + √3"
    assert to_surd(quantum_integer(2)) == "(1/2)√2 + (1/2)√6"
    assert to_surd(IMAGINARY_UNIT) == "i"
    assert to_surd(ZETA**3) == "(1/2)√2 + (1/2)i√2"
    assert to_surd(1 - quantum_integer(3)) == "-√3"


def test_surd_coordinates_of_zeta():
    # ζ = cos(π/12) + i sin(π/12) = (√6 + √2)/4 + i (√6 - √2)/4
    assert surd_coordinates(ZETA) == [
        0,
        Fraction(1, 4),
        0,
        Fraction(1, 4),
        0,
        Fraction(-1, 4),
        0,
        Fraction(1, 4),
    ]


def test_surd_form_gives_up_on_large_coefficients():
    assert to_surd(ONE / 1001) is None
