import logging

from e6lens.cyclotomic import W
from e6lens.cyclotomic.serialization import to_text
from e6lens.modular.kernel import gamma12_generator_table, printed_word_errata
from e6lens.modular.words import decompose_word
from e6lens.report import Report
from e6lens.representation import (
    RepMatrix,
    _rho_s_unchecked,
    presentation_relations,
    rho_T,
    rho_word,
    row_norms,
    w_rho_s_rows,
)

logger = logging.getLogger(__name__)


def add_matrix_check(report: Report, name: str, actual: RepMatrix, expected: RepMatrix):
    """Exact equality check; the witness is the first differing entry."""
    difference = actual.first_difference(expected)
    if difference is None:
        report.add(name, True)
        return

    row, col, expected_entry, actual_entry = difference
    report.add(
        name,
        False,
        {
            "row": row,
            "col": col,
            "expected": to_text(expected_entry),
            "actual": to_text(actual_entry),
        },
    )


def verify_relations() -> Report:
    report = Report("relations")
    for name, lhs, rhs in presentation_relations(_rho_s_unchecked(), rho_T()):
        add_matrix_check(report, name, lhs, rhs)
    return report


def verify_unitarity() -> Report:
    report = Report("unitarity")
    w_squared = W * W
    for i, norm in enumerate(row_norms(w_rho_s_rows())):
        report.add(
            f"row {i + 1} of w rho(S) has squared norm w^2",
            norm == w_squared,
            {"row": i + 1, "expected": to_text(w_squared), "actual": to_text(norm)},
        )

    identity = RepMatrix.identity()
    s, t = _rho_s_unchecked(), rho_T()
    add_matrix_check(report, "rho(S) rho(S)* = I", s @ s.conjugate_transpose(), identity)
    add_matrix_check(report, "rho(T) rho(T)* = I", t @ t.conjugate_transpose(), identity)
    return report


def verify_symmetry() -> Report:
    report = Report("symmetry")
    s = _rho_s_unchecked()
    add_matrix_check(report, "rho(S) is symmetric", s.transpose(), s)
    return report


def verify_kernel_generators() -> Report:
    """ρ(P) = I for each listed generator P of Γ(12), via its word and via the
    decomposition of its matrix."""
    report = Report("kernel")
    report.notes.append(
        "Normal generation of Gamma(12) by these 19 elements is an assumed input."
    )
    for erratum in printed_word_errata():
        report.notes.append(
            f"{erratum.name}: printed word {erratum.printed_word.pretty()} evaluates "
            f"to {erratum.printed_value}; using {erratum.corrected_word.pretty()}"
        )

    identity = RepMatrix.identity()
    for generator in gamma12_generator_table():
        logger.debug("Checking rho(%s)", generator.name)
        add_matrix_check(
            report, f"{generator.name} word", rho_word(generator.word), identity
        )
        add_matrix_check(
            report,
            f"{generator.name} decomposition",
            rho_word(decompose_word(generator.matrix)),
            identity,
        )
    return report
