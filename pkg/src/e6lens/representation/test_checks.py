from unittest.mock import patch

from e6lens.cyclotomic import ONE, ZERO
from e6lens.report import Report
from e6lens.representation import DIMENSION, RepMatrix
from e6lens.representation.checks import (
    add_matrix_check,
    verify_kernel_generators,
    verify_relations,
    verify_symmetry,
    verify_unitarity,
)


def test_relations_hold():
    report = verify_relations()

    assert report.passed
    assert [c.check_name for c in report.checks] == [
        "S^4 = I",
        "(ST)^3 = S^2",
        "T^12 = I",
    ]


def test_unitarity_and_symmetry():
    unitarity = verify_unitarity()
    symmetry = verify_symmetry()

    assert unitarity.passed
    assert len(unitarity.checks) == DIMENSION + 2
    assert symmetry.passed


def test_kernel_generators_act_trivially():
    report = verify_kernel_generators()

    assert report.passed
    assert len(report.checks) == 2 * 19
    assert report.checks[0].check_name == "P_{1,+} word"
    assert any("Normal generation" in note for note in report.notes)
    assert any(note.startswith("P_4:") for note in report.notes)
    assert any(note.startswith("P_15:") for note in report.notes)


def test_failed_matrix_check_has_a_witness():
    report = Report("example")
    broken = RepMatrix.diagonal([ONE] * (DIMENSION - 1) + [ZERO])

    with patch("e6lens.report.logger") as logger:
        add_matrix_check(report, "broken = I", broken, RepMatrix.identity())
        logger.warning.assert_called_once()

    assert not report.passed
    assert report.failures()[0].witness == {
        "row": DIMENSION,
        "col": DIMENSION,
        "expected": "1/1 + 0/1*z + 0/1*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7",
        "actual": "0/1 + 0/1*z + 0/1*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7",
    }
