"""
The 10-dimensional representation ρ of SL(2,Z) attached to the E6 subfactor,
given exactly over Q(ζ24) by ρ(S) and ρ(T).
"""

import logging
from functools import cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from e6lens.cyclotomic import (
    IMAGINARY_UNIT,
    ONE,
    W,
    ZERO,
    CyclotomicNumber,
    quantum_integer,
    reduce_power,
)
from e6lens.modular import UnimodularMatrix
from e6lens.modular.kernel import TranscriptionError
from e6lens.modular.words import GeneratorWord, decompose_word

logger = logging.getLogger(__name__)

DIMENSION = 10

# ρ(T) = diag(1, -ζ^2, -1, 1, i, -ζ^2, 1, ζ^8, ζ^-4, -1) as powers of ζ
T_EXPONENTS = (0, 14, 12, 0, 6, 14, 0, 8, 20, 12)
T_ORDER = 12

# [4][3]/[2] = 3 + √3
X = quantum_integer(4) * quantum_integer(3) / quantum_integer(2)

_S_SYMBOLS = {
    "0": ZERO,
    "1": ONE,
    "[3]": quantum_integer(3),
    "2[3]": 2 * quantum_integer(3),
    "[2]^2": quantum_integer(2) ** 2,
    "X": X,
    "iX": IMAGINARY_UNIT * X,
}

# w ρ(S)
_S_ROWS = [
    "1     [3]   1     [2]^2  [3]   [3]   X    [3]    [3]   [2]^2",
    "[3]   iX    -[3]  -[3]   0     -iX   0    [3]    -[3]  [3]",
    "1     -[3]  1     [2]^2  -[3]  -[3]  -X   [3]    [3]   [2]^2",
    "[2]^2 -[3]  [2]^2 1      -[3]  -[3]  X    -[3]   -[3]  1",
    "[3]   0     -[3]  -[3]   0     0     0    -2[3]  2[3]  [3]",
    "[3]   -iX   -[3]  -[3]   0     iX    0    [3]    -[3]  [3]",
    "X     0     -X    X      0     0     0    0      0     -X",
    "[3]   [3]   [3]   -[3]   -2[3] [3]   0    [3]    [3]   -[3]",
    "[3]   -[3]  [3]   -[3]   2[3]  -[3]  0    [3]    [3]   -[3]",
    "[2]^2 [3]   [2]^2 1      [3]   [3]   -X   -[3]   -[3]  1",
]


def _symbol(text: str) -> CyclotomicNumber:
    if text.startswith("-"):
        return -_S_SYMBOLS[text[1:]]
    return _S_SYMBOLS[text]


def _object_array(rows: Sequence[Sequence[CyclotomicNumber]]) -> np.ndarray:
    array = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            array[i, j] = value
    return array


class RepMatrix:
    """A 10x10 matrix over Q(ζ24), backed by a numpy object array."""

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[CyclotomicNumber]]) -> "RepMatrix":
        return cls(_object_array(rows))

    @classmethod
    def identity(cls) -> "RepMatrix":
        return cls.diagonal([ONE] * DIMENSION)

    @classmethod
    def diagonal(cls, values: Sequence[CyclotomicNumber]) -> "RepMatrix":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def __getitem__(self, index) -> CyclotomicNumber:
        return self.entries[index]

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.entries @ other.entries)

    def scale(self, factor: CyclotomicNumber) -> "RepMatrix":
        return RepMatrix(self.entries * factor)

    def scale_columns(self, values: Sequence[CyclotomicNumber]) -> "RepMatrix":
        """self @ diag(values)."""
        return RepMatrix(self.entries * _object_array([values]))

    def power(self, n: int) -> "RepMatrix":
        result, base = RepMatrix.identity(), self
        while n > 0:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self) -> "RepMatrix":
        return RepMatrix(self.entries.T.copy())

    def conjugate_transpose(self) -> "RepMatrix":
        rows, cols = self.shape
        return RepMatrix.from_rows(
            [[self.entries[j, i].conjugate() for j in range(rows)] for i in range(cols)]
        )

    def first_difference(
        self, other: "RepMatrix"
    ) -> Optional[Tuple[int, int, CyclotomicNumber, CyclotomicNumber]]:
        """First (row, col, other entry, own entry) that differs, 1-based."""
        rows, cols = self.shape
        for i in range(rows):
            for j in range(cols):
                if self.entries[i, j] != other.entries[i, j]:
                    return i + 1, j + 1, other.entries[i, j], self.entries[i, j]
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.shape == other.shape and self.first_difference(other) is None

    __hash__ = None


def w_rho_s_rows() -> List[List[CyclotomicNumber]]:
    """The integer-combination matrix w ρ(S), row by row."""
    return [[_symbol(token) for token in row.split()] for row in _S_ROWS]


@cache
def _rho_s_unchecked() -> RepMatrix:
    return RepMatrix.from_rows(w_rho_s_rows()).scale(W.inverse())


@cache
def rho_T() -> RepMatrix:
    return RepMatrix.diagonal([reduce_power(e) for e in T_EXPONENTS])


@cache
def t_diagonal_power(k: int) -> Tuple[CyclotomicNumber, ...]:
    """Diagonal of ρ(T)^k."""
    k %= T_ORDER
    return tuple(reduce_power(e * k) for e in T_EXPONENTS)


def row_norms(rows: Sequence[Sequence[CyclotomicNumber]]) -> List[CyclotomicNumber]:
    """Σ_j x_ij conj(x_ij) for every row i."""
    norms = []
    for row in rows:
        total = ZERO
        for x in row:
            total = total + x * x.conjugate()
        norms.append(total)
    return norms


def presentation_relations(
    s: RepMatrix, t: RepMatrix
) -> List[Tuple[str, RepMatrix, RepMatrix]]:
    """(name, left side, right side) for S^4 = 1, (ST)^3 = S^2, T^12 = 1."""
    identity = RepMatrix.identity()
    s2 = s @ s
    st = s @ t
    return [
        ("S^4 = I", s2 @ s2, identity),
        ("(ST)^3 = S^2", st @ st @ st, s2),
        ("T^12 = I", t.power(T_ORDER), identity),
    ]


@cache
def rho_S() -> RepMatrix:
    """
    ρ(S), checked on construction: every row of w ρ(S) has squared norm w^2
    and the presentation relations hold. Raise TranscriptionError otherwise.
    """
    w_squared = W * W
    for i, norm in enumerate(row_norms(w_rho_s_rows())):
        if norm != w_squared:
            raise TranscriptionError(
                "rho(S)", f"row {i + 1} of w rho(S) has squared norm {norm!r}, not w^2"
            )

    s = _rho_s_unchecked()
    for name, lhs, rhs in presentation_relations(s, rho_T()):
        difference = lhs.first_difference(rhs)
        if difference is not None:
            row, col, expected, actual = difference
            raise TranscriptionError(
                "rho(S)",
                f"relation {name} fails at ({row},{col}): {actual!r} != {expected!r}",
            )

    logger.debug("rho(S) passed row norm and relation checks")
    return s


def rho_word(word: GeneratorWord) -> RepMatrix:
    """ρ of a word: product of ρ(S) and diagonal powers of ρ(T), left to right."""
    s = rho_S()
    result = RepMatrix.identity()
    for generator, exponent in word:
        if generator == "S":
            result = result @ s
        else:
            result = result.scale_columns(t_diagonal_power(exponent))
    return result


def rho_matrix(A: UnimodularMatrix) -> RepMatrix:
    return rho_word(decompose_word(A))


def corner_entry(word: GeneratorWord) -> CyclotomicNumber:
    """
    ᵗe ρ(word) e with e the first basis vector, computed by pushing the first
    row of the identity through the word.
    """
    s = rho_S().entries
    row = RepMatrix.identity().entries[0].copy()
    for generator, exponent in word:
        if generator == "S":
            row = row @ s
        else:
            row = row * _object_array([t_diagonal_power(exponent)])[0]
    return row[0]
