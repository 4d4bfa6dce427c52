"""
SL(2,Z): unimodular matrices, cofactors of coprime pairs and the principal
congruence subgroup of level 12.
"""

from dataclasses import dataclass
from math import gcd
from typing import Tuple

LEVEL = 12


class NotCoprimeError(Exception):
    def __init__(self, p: int, q: int):
        self.p = p
        self.q = q
        self.gcd = gcd(p, q)
        super().__init__(f"gcd({p},{q})={self.gcd}")


class DeterminantError(Exception):
    def __init__(self, entries: Tuple[int, int, int, int]):
        self.entries = entries
        a11, a12, a21, a22 = entries
        self.determinant = a11 * a22 - a12 * a21
        super().__init__(f"determinant of {entries} is {self.determinant}, not 1")


class CongruenceError(Exception):
    def __init__(self, p: int, q: int, p_prime: int, q_prime: int):
        self.pairs = ((p, q), (p_prime, q_prime))
        super().__init__(
            f"({p},{q}) and ({p_prime},{q_prime}) are not congruent mod {LEVEL}"
        )


@dataclass(frozen=True)
class UnimodularMatrix:
    """(a11 a12; a21 a22) with a11 a22 - a12 a21 = 1."""

    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self):
        if self.a11 * self.a22 - self.a12 * self.a21 != 1:
            raise DeterminantError(self.entries)

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a11, self.a12, self.a21, self.a22)

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __neg__(self) -> "UnimodularMatrix":
        return UnimodularMatrix(-self.a11, -self.a12, -self.a21, -self.a22)

    def inverse(self) -> "UnimodularMatrix":
        return UnimodularMatrix(self.a22, -self.a12, -self.a21, self.a11)

    def __str__(self) -> str:
        return f"({self.a11} {self.a12}; {self.a21} {self.a22})"


IDENTITY = UnimodularMatrix(1, 0, 0, 1)
S = UnimodularMatrix(0, -1, 1, 0)
T = UnimodularMatrix(1, 1, 0, 1)


def t_power(k: int) -> UnimodularMatrix:
    return UnimodularMatrix(1, k, 0, 1)


def extended_gcd(x: int, y: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*x + t*y = g = gcd(x, y) >= 0."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t

    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def extended_cofactor(p: int, q: int) -> Tuple[int, int]:
    """
    Integers (a, b) with a*q - b*p = 1.

    The pair is canonical: 0 <= a < |p| when |p| > 1, (0, -p) when |p| = 1 and
    (q, 0) when p = 0.
    """
    g, s, t = extended_gcd(q, p)
    if g != 1:
        raise NotCoprimeError(p, q)

    if p == 0:
        return q, 0
    if abs(p) == 1:
        return 0, -p

    a, b = s, -t
    shift = (a % abs(p) - a) // p
    return a + shift * p, b + shift * q


def lens_matrix(p: int, q: int, a: int, b: int) -> UnimodularMatrix:
    """(-q b; p -a), the gluing matrix of L(p,q) for a cofactor pair (a, b)."""
    return UnimodularMatrix(-q, b, p, -a)


def in_gamma12(A: UnimodularMatrix) -> bool:
    return (
        A.a11 % LEVEL == 1
        and A.a22 % LEVEL == 1
        and A.a12 % LEVEL == 0
        and A.a21 % LEVEL == 0
    )


def congruent_lift(
    p: int, q: int, p_prime: int, q_prime: int
) -> Tuple[int, int, int, int]:
    """
    Cofactors (a, b) of (p, q) and (a', b') of (p', q') with a = a' and
    b = b' mod 12, for pairs congruent mod 12.

    Writes (a', p'; b', q') = (a, p; b, q) + 12 (x, z; y, w) and solves
    p' y - q' x = a w - z b.
    """
    if gcd(p_prime, q_prime) != 1:
        raise NotCoprimeError(p_prime, q_prime)
    if (p - p_prime) % LEVEL or (q - q_prime) % LEVEL:
        raise CongruenceError(p, q, p_prime, q_prime)

    a, b = extended_cofactor(p, q)
    z = (p_prime - p) // LEVEL
    w = (q_prime - q) // LEVEL

    _, s, t = extended_gcd(p_prime, q_prime)
    r = a * w - z * b
    x, y = -t * r, s * r

    a_prime = a + LEVEL * x
    b_prime = b + LEVEL * y
    assert a_prime * q_prime - b_prime * p_prime == 1

    return a, b, a_prime, b_prime


def periodicity_witness(
    p: int, q: int, p_prime: int, q_prime: int
) -> Tuple[UnimodularMatrix, UnimodularMatrix, UnimodularMatrix]:
    """
    Lens matrices A of L(p,q) and A' of L(p',q'), congruent mod 12, and
    P = I + A^-1 (A' - A) = A^-1 A' in Γ(12), so that A' = A P.
    """
    a, b, a_prime, b_prime = congruent_lift(p, q, p_prime, q_prime)

    A = lens_matrix(p, q, a, b)
    A_prime = lens_matrix(p_prime, q_prime, a_prime, b_prime)
    P = A.inverse() @ A_prime

    assert in_gamma12(P)
    assert A @ P == A_prime

    return A, A_prime, P
