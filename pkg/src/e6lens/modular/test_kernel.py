import numpy as np

from e6lens.modular import UnimodularMatrix, in_gamma12
from e6lens.modular.kernel import gamma12_generator_table, printed_word_errata
from e6lens.modular.test_words import random_word
from e6lens.modular.words import eval_word


def by_name():
    return {g.name: g for g in gamma12_generator_table()}


def test_table_has_nineteen_generators():
    table = gamma12_generator_table()

    assert len(table) == 19
    assert [g.name for g in table[:3]] == ["P_{1,+}", "P_{1,-}", "P_2"]
    assert table[-1].name == "P_18"


def test_published_entries():
    generators = by_name()

    assert generators["P_{1,+}"].matrix == UnimodularMatrix(1, 12, 0, 1)
    assert str(generators["P_{1,-}"].word) == "T-12"
    assert generators["P_2"].matrix == UnimodularMatrix(-143, 12, -12, 1)
    assert str(generators["P_2"].word) == "S2T12ST12S"
    assert generators["P_9"].matrix == UnimodularMatrix(937, -396, 168, -71)
    assert str(generators["P_9"].word) == "T5ST-2ST-4ST-4ST-3ST2S"
    assert generators["P_18"].matrix == UnimodularMatrix(649, -384, 120, -71)
    assert str(generators["P_18"].word) == "T5ST-2ST2ST-4ST3ST2S"


def test_every_entry_is_in_gamma12_and_matches_its_word():
    for generator in gamma12_generator_table():
        assert in_gamma12(generator.matrix)
        assert eval_word(generator.word) == generator.matrix


def test_printed_words_match_except_errata():
    errata = {e.name: e for e in printed_word_errata()}
    assert sorted(errata) == ["P_15", "P_4"]

    for generator in gamma12_generator_table():
        if generator.name in errata:
            assert eval_word(generator.printed_word) != generator.matrix
        else:
            assert generator.printed_word == generator.word


def test_errata_values():
    errata = {e.name: e for e in printed_word_errata()}
    generators = by_name()

    assert errata["P_4"].printed_value == -generators["P_4"].matrix
    assert str(errata["P_4"].corrected_word) == "S2T3ST-5ST2ST-4STS"
    assert errata["P_15"].printed_value == UnimodularMatrix(133, -85, 36, -23)
    assert not in_gamma12(errata["P_15"].printed_value)
    assert str(errata["P_15"].corrected_word) == "S2T5ST3ST-3ST2ST2S"


def test_conjugates_stay_in_gamma12():
    rng = np.random.default_rng(19)
    table = gamma12_generator_table()
    for _ in range(50):
        generator = table[int(rng.integers(0, len(table)))]
        u = eval_word(random_word(rng, max_letters=6))
        assert in_gamma12(u @ generator.matrix @ u.inverse())
