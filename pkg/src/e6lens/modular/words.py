import re
from collections import namedtuple
from typing import Iterable, Iterator, List

from e6lens.modular import IDENTITY, S, UnimodularMatrix, t_power

Letter = namedtuple("Letter", ["generator", "exponent"])

S_LETTER = Letter("S", 1)

_TOKEN = re.compile(r"([ST])(-?\d+)?")


class WordSyntaxError(Exception):
    def __init__(self, text: str, position: int):
        super().__init__(f"cannot parse word {text!r} at position {position}")
        self.text = text
        self.position = position


def t_letter(k: int) -> Letter:
    return Letter("T", k)


class GeneratorWord:
    """
    A product of the letters S and T^k (k != 0), read left to right.

    Adjacent T powers are merged on construction; S letters are kept as they
    are, since S^2 = -I is not trivial in SL(2,Z).
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        merged: List[Letter] = []
        for letter in letters:
            generator, exponent = letter
            if generator == "S":
                merged.append(S_LETTER)
            elif generator == "T":
                if merged and merged[-1].generator == "T":
                    exponent += merged.pop().exponent
                if exponent != 0:
                    merged.append(t_letter(exponent))
            else:
                raise ValueError(f"unknown generator {generator!r}")

        self.letters = tuple(merged)

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        """
        Read `S2T12ST12S`, `S^2 T^12 S T^12 S` or `S^2T^{12}ST^{-4}S`.
        An exponent on S repeats the letter.
        """
        compact = re.sub(r"[\s^{}]", "", text)
        letters: List[Letter] = []
        position = 0
        while position < len(compact):
            match = _TOKEN.match(compact, position)
            if match is None:
                raise WordSyntaxError(text, position)

            generator, exponent = match.groups()
            k = 1 if exponent is None else int(exponent)
            if generator == "S":
                if k <= 0:
                    raise WordSyntaxError(text, position)
                letters.extend([S_LETTER] * k)
            else:
                letters.append(t_letter(k))
            position = match.end()

        return cls(letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.letters + other.letters)

    def __repr__(self) -> str:
        return f"GeneratorWord.parse({str(self)!r})"

    def _syllables(self):
        """Runs of S collapsed to (\"S\", run length); T letters as they are."""
        runs = []
        for letter in self.letters:
            if letter.generator == "S" and runs and runs[-1][0] == "S":
                runs[-1] = ("S", runs[-1][1] + 1)
            else:
                runs.append(tuple(letter))
        return runs

    def __str__(self) -> str:
        return "".join(
            g if k == 1 else f"{g}{k}" for g, k in self._syllables()
        )

    def pretty(self) -> str:
        return " ".join(g if k == 1 else f"{g}^{k}" for g, k in self._syllables())


def eval_word(word: GeneratorWord) -> UnimodularMatrix:
    """Left-to-right product of the letter matrices; the empty word is I."""
    result = IDENTITY
    for generator, exponent in word:
        result = result @ (S if generator == "S" else t_power(exponent))
    return result


def decompose_word(A: UnimodularMatrix) -> GeneratorWord:
    """
    A word evaluating to A exactly.

    Euclidean descent on the bottom row: right multiplication by T^-k and S^-1
    drives a21 to 0, leaving ±(1 n; 0 1), which is T^n or S^2 T^-n. The word is
    that remainder followed by the inverses of the steps in reverse order.
    k is the nearest integer to a22/a21, so |a21| at least halves per step.
    """
    a11, a12, a21, a22 = A.entries
    undo: List[Letter] = []
    while a21 != 0:
        k = (2 * a22 + a21) // (2 * a21)
        if k != 0:
            # times T^-k
            a12 -= k * a11
            a22 -= k * a21
            undo.append(t_letter(k))
        # times S^-1 = (0 1; -1 0)
        a11, a12, a21, a22 = -a12, a11, -a22, a21
        undo.append(S_LETTER)

    if a11 == 1:
        head = [t_letter(a12)]
    else:
        head = [S_LETTER, S_LETTER, t_letter(-a12)]

    return GeneratorWord(head + undo[::-1])
