import numpy as np

from e6lens.cyclotomic import IMAGINARY_UNIT, ONE, SQRT3, W, ZERO, reduce_power
from e6lens.modular import IDENTITY, S, T, UnimodularMatrix
from e6lens.modular.kernel import gamma12_generator_table
from e6lens.modular.test_words import random_word
from e6lens.modular.words import GeneratorWord, decompose_word, eval_word
from e6lens.representation import (
    DIMENSION,
    X,
    RepMatrix,
    corner_entry,
    rho_matrix,
    rho_S,
    rho_T,
    rho_word,
    t_diagonal_power,
)


def test_x():
    assert X == 3 + SQRT3


def test_rho_s_entries():
    s = rho_S()

    assert s.shape == (DIMENSION, DIMENSION)
    assert s[0, 0] == W.inverse()
    assert s[0, 6] == X / W
    assert s[1, 1] == IMAGINARY_UNIT * X / W
    assert s[6, 6] == ZERO


def test_rho_s_is_symmetric():
    assert rho_S().transpose() == rho_S()


def test_rho_s_squared_swaps_the_conjugate_pair():
    swap = [[ZERO] * DIMENSION for _ in range(DIMENSION)]
    for i in range(DIMENSION):
        swap[i][{1: 5, 5: 1}.get(i, i)] = ONE

    s2 = rho_S() @ rho_S()

    assert s2 == RepMatrix.from_rows(swap)
    assert s2 != RepMatrix.identity()
    assert s2[0, 0] == ONE


def test_rho_t():
    t = rho_T()

    assert t[0, 0] == ONE
    assert t[1, 1] == -reduce_power(2)
    assert t[4, 4] == IMAGINARY_UNIT
    assert t[8, 8] == reduce_power(-4)
    assert t[0, 1] == ZERO
    assert t.power(12) == RepMatrix.identity()
    assert t.power(6) != RepMatrix.identity()


def test_t_diagonal_power():
    assert t_diagonal_power(0) == (ONE,) * DIMENSION
    assert t_diagonal_power(13) == t_diagonal_power(1)
    assert t_diagonal_power(-1) == t_diagonal_power(11)
    assert RepMatrix.diagonal(t_diagonal_power(5)) == rho_T().power(5)


def test_rho_word():
    assert rho_word(GeneratorWord()) == RepMatrix.identity()
    assert rho_word(GeneratorWord.parse("S")) == rho_S()
    assert rho_word(GeneratorWord.parse("S4")) == RepMatrix.identity()
    assert rho_word(GeneratorWord.parse("T12")) == RepMatrix.identity()
    assert rho_word(GeneratorWord.parse("ST-3")) == rho_S() @ rho_T().power(9)
    assert rho_word(GeneratorWord.parse("S2T12ST12S")) == RepMatrix.identity()


def test_rho_matrix():
    assert rho_matrix(IDENTITY) == RepMatrix.identity()
    assert rho_matrix(S) == rho_S()
    assert rho_matrix(T) == rho_T()
    assert rho_matrix(-IDENTITY) == rho_S() @ rho_S()


def test_rho_is_a_homomorphism():
    rng = np.random.default_rng(7)
    for _ in range(50):
        u = random_word(rng, max_letters=6)
        v = random_word(rng, max_letters=6)
        assert rho_word(u + v) == rho_word(u) @ rho_word(v)
        assert rho_matrix(eval_word(u + v)) == rho_matrix(eval_word(u)) @ rho_matrix(
            eval_word(v)
        )


def test_rho_does_not_depend_on_the_word():
    rng = np.random.default_rng(11)
    for _ in range(20):
        word = random_word(rng, max_letters=8)
        padded = word + GeneratorWord.parse("S4T12")
        assert rho_word(word) == rho_word(decompose_word(eval_word(word)))
        assert rho_word(padded) == rho_word(word)


def test_generator_words_and_matrices_agree():
    for generator in gamma12_generator_table()[:4]:
        assert rho_word(generator.word) == rho_matrix(generator.matrix)


def test_corner_entry():
    rng = np.random.default_rng(3)
    for _ in range(20):
        word = random_word(rng)
        assert corner_entry(word) == rho_word(word)[0, 0]

    assert corner_entry(GeneratorWord()) == ONE
    assert corner_entry(GeneratorWord.parse("S")) == W.inverse()


def test_first_difference():
    identity = RepMatrix.identity()
    other = RepMatrix.diagonal([ONE] * 3 + [-ONE] + [ONE] * 6)

    assert identity.first_difference(identity) is None
    assert other.first_difference(identity) == (4, 4, ONE, -ONE)
    assert rho_matrix(UnimodularMatrix(1, 12, 0, 1)) == identity
