"""
Elements of Γ(12) whose normal closure is Γ(12), with their words in S and T.

That these elements normally generate Γ(12) is taken as given (it comes from a
coset computation done elsewhere); what is checked here is that each matrix is
in Γ(12) and that each word evaluates to its matrix.

Two of the published words do not evaluate to their matrices: the word of P_4
evaluates to -P_4 (it lacks the central factor S^2), and the word of P_15
starts with T^4 where T^5 is needed. Both are kept as printed next to the
corrected word, and what the printed word evaluates to is recorded and checked.
"""

import logging
from collections import namedtuple
from functools import cache
from typing import List, Optional, Tuple

from e6lens.modular import UnimodularMatrix, in_gamma12
from e6lens.modular.words import GeneratorWord, eval_word

logger = logging.getLogger(__name__)

KernelGenerator = namedtuple(
    "KernelGenerator", ["name", "matrix", "word", "printed_word"]
)

Erratum = namedtuple(
    "Erratum", ["name", "printed_word", "printed_value", "corrected_word"]
)

# name, matrix entries, printed word, (corrected word, value of the printed word)
_GENERATORS: List[Tuple[str, tuple, str, Optional[Tuple[str, tuple]]]] = [
    ("P_{1,+}", (1, 12, 0, 1), "T12", None),
    ("P_{1,-}", (1, -12, 0, 1), "T-12", None),
    ("P_2", (-143, 12, -12, 1), "S2T12ST12S", None),
    ("P_3", (-155, 84, -24, 13), "S2T7ST2ST7ST2S", None),
    (
        "P_4",
        (-191, 156, -60, 49),
        "T3ST-5ST2ST-4STS",
        ("S2T3ST-5ST2ST-4STS", (191, -156, 60, -49)),
    ),
    ("P_5", (-443, 120, -48, 13), "T9ST-4ST3ST4S", None),
    ("P_6", (-467, 360, -48, 37), "T10ST4ST3ST-3STS", None),
    ("P_7", (-299, 108, -36, 13), "T8ST-3ST4ST3S", None),
    ("P_8", (-311, 216, -36, 25), "T9ST3ST4ST-2STS", None),
    ("P_9", (937, -396, 168, -71), "T5ST-2ST-4ST-4ST-3ST2S", None),
    ("P_10", (157, -36, 48, -11), "T3ST-4ST-3ST4S", None),
    ("P_11", (157, -48, 36, -11), "T4ST-3ST-4ST3S", None),
    ("P_12", (205, -84, 144, -59), "TST-2ST3ST4ST-2ST2S", None),
    ("P_13", (157, -72, 24, -11), "T6ST-2ST-6ST2S", None),
    ("P_14", (229, -132, 144, -83), "TST-2ST-3ST4ST4ST2S", None),
    (
        "P_15",
        (169, -108, 36, -23),
        "S2T4ST3ST-3ST2ST2S",
        ("S2T5ST3ST-3ST2ST2S", (133, -85, 36, -23)),
    ),
    ("P_16", (181, -132, 48, -35), "T4ST4ST-3ST-3STS", None),
    ("P_17", (589, -108, 60, -11), "S2T10ST5ST-2ST5S", None),
    ("P_18", (649, -384, 120, -71), "T5ST-2ST2ST-4ST3ST2S", None),
]


class TranscriptionError(Exception):
    """A hard-coded table or matrix failed its construction-time self-check."""

    def __init__(self, name: str, reason: str):
        super().__init__(f"{name}: {reason}")
        self.name = name
        self.reason = reason


@cache
def _table() -> Tuple[tuple, tuple]:
    table = []
    errata = []
    for name, entries, printed_text, correction in _GENERATORS:
        matrix = UnimodularMatrix(*entries)
        printed = GeneratorWord.parse(printed_text)

        if not in_gamma12(matrix):
            raise TranscriptionError(name, f"{matrix} is not congruent to I mod 12")

        word = printed
        if correction is not None:
            corrected_text, printed_entries = correction
            word = GeneratorWord.parse(corrected_text)
            printed_value = UnimodularMatrix(*printed_entries)
            if eval_word(printed) != printed_value:
                raise TranscriptionError(
                    name,
                    f"printed word {printed.pretty()} evaluates to "
                    f"{eval_word(printed)}, not the recorded {printed_value}",
                )
            errata.append(Erratum(name, printed, printed_value, word))

        if eval_word(word) != matrix:
            raise TranscriptionError(
                name,
                f"word {word.pretty()} evaluates to {eval_word(word)}, not {matrix}",
            )
        logger.debug("Generator %s = %s checked", name, word.pretty())

        table.append(KernelGenerator(name, matrix, word, printed))
    return tuple(table), tuple(errata)


def gamma12_generator_table() -> List[KernelGenerator]:
    return list(_table()[0])


def printed_word_errata() -> List[Erratum]:
    return list(_table()[1])
