import numpy as np
import pytest

from e6lens.modular import IDENTITY, S, T, UnimodularMatrix, t_power
from e6lens.modular.words import (
    S_LETTER,
    GeneratorWord,
    WordSyntaxError,
    decompose_word,
    eval_word,
    t_letter,
)


def random_word(rng, max_letters=12) -> GeneratorWord:
    letters = []
    for _ in range(int(rng.integers(0, max_letters + 1))):
        if rng.random() < 0.5:
            letters.append(S_LETTER)
        else:
            k = int(rng.integers(1, 6)) * (1 if rng.random() < 0.5 else -1)
            letters.append(t_letter(k))
    return GeneratorWord(letters)


def test_eval_word():
    assert eval_word(GeneratorWord()) == IDENTITY
    assert eval_word(GeneratorWord.parse("T12")) == UnimodularMatrix(1, 12, 0, 1)
    assert eval_word(GeneratorWord.parse("T9ST-4ST3ST4S")) == UnimodularMatrix(
        -443, 120, -48, 13
    )
    assert eval_word(GeneratorWord.parse("STS")) == S @ T @ S


def test_decompose_generators():
    assert decompose_word(S) == GeneratorWord([S_LETTER])
    assert str(decompose_word(S)) == "S"
    assert str(decompose_word(-IDENTITY)) == "S2"
    assert str(decompose_word(IDENTITY)) == ""
    assert str(decompose_word(t_power(1000))) == "T1000"


def test_decompose_p7():
    p7 = UnimodularMatrix(-299, 108, -36, 13)

    assert eval_word(decompose_word(p7)) == p7
    assert eval_word(GeneratorWord.parse("T^{8}ST^{-3}ST^{4}ST^{3}S")) == p7


def test_decompose_round_trip():
    rng = np.random.default_rng(2024)
    for _ in range(500):
        A = eval_word(random_word(rng))
        assert eval_word(decompose_word(A)) == A


def test_decompose_keeps_words_short():
    rng = np.random.default_rng(5)
    for _ in range(100):
        A = eval_word(random_word(rng, max_letters=40))
        word = decompose_word(A)
        assert len(word) <= 2 * abs(A.a21).bit_length() + 3

    A = UnimodularMatrix(1, 0, 10**30 + 1, 1)
    assert eval_word(decompose_word(A)) == A
    assert len(decompose_word(A)) <= 2 * A.a21.bit_length() + 3


def test_word_formats():
    word = GeneratorWord.parse("S2T12ST12S")

    assert str(word) == "S2T12ST12S"
    assert word.pretty() == "S^2 T^12 S T^12 S"
    assert GeneratorWord.parse(word.pretty()) == word
    assert GeneratorWord.parse("S^2T^{12}ST^{12}S") == word
    assert len(word) == 6


def test_adjacent_t_powers_merge():
    assert GeneratorWord.parse("T3T4") == GeneratorWord.parse("T7")
    assert GeneratorWord.parse("T2T-2") == GeneratorWord()
    assert GeneratorWord.parse("ST2T-2S") == GeneratorWord.parse("S2")
    assert GeneratorWord.parse("T") + GeneratorWord.parse("T-1S") == GeneratorWord.parse("S")


@pytest.mark.parametrize(
    "text, position",
    [("SX", 1), ("S0", 0), ("T2 S-1", 2), ("x", 0)],
)
def test_word_syntax_errors(text, position):
    with pytest.raises(WordSyntaxError) as exc_info:
        GeneratorWord.parse(text)

    assert exc_info.value.position == position
    assert exc_info.value.text == text
