import argparse
import dataclasses
import json
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Callable, Dict, List, Optional, TextIO

from e6lens.config import Settings, SettingsError, load_settings
from e6lens.cyclotomic.serialization import to_surd, to_text
from e6lens.invariant import LensSpace, closed_form, homotopy_witness, state_sum
from e6lens.invariant.table import format_float, table, to_csv, to_json, to_plain_text
from e6lens.invariant.verification import (
    verify_closed_form,
    verify_congruent_lift,
    verify_corollary,
    verify_mod12_determinism,
    verify_periodicity,
    verify_well_defined,
)
from e6lens.modular import (
    DeterminantError,
    NotCoprimeError,
    UnimodularMatrix,
    in_gamma12,
)
from e6lens.modular.words import GeneratorWord, WordSyntaxError, decompose_word, eval_word
from e6lens.report import Report
from e6lens.representation.checks import (
    verify_kernel_generators,
    verify_relations,
    verify_symmetry,
    verify_unitarity,
)

logger = logging.getLogger(__name__)

MIN_PRECISION = 64

TARGETS = [
    "relations",
    "unitarity",
    "kernel",
    "wellDefined",
    "periodicity",
    "closedform",
    "corollary",
    "lift",
    "determinism",
]


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="e6lens",
        description="Exact E6 state sum invariants of lens spaces",
    )
    parser.add_argument("-d", "--debug", action="store_true")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--env", default=".env", help="dotenv file with E6LENS_* settings")
    parser.add_argument("--precision", type=int, help="bits for float evaluation")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="Z(L(p,q)) by both formulas")
    compute.add_argument("p", type=int)
    compute.add_argument("q", type=int)
    compute.add_argument("--format", choices=["text", "json"], default="text")

    table_parser = commands.add_parser("table", help="Z for every L(p,q), p <= pmax")
    table_parser.add_argument("--pmax", type=int)
    table_parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    table_parser.add_argument("--workers", type=int)

    verify = commands.add_parser("verify", help="run verification reports")
    verify.add_argument("target", choices=TARGETS + ["all"])
    verify.add_argument("--pmax", type=int)
    verify.add_argument("--corollary-pmax", type=int, help="bound for the homotopy check")
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.add_argument("--workers", type=int)

    homotopy = commands.add_parser("homotopy", help="homotopy equivalence of two lens spaces")
    for name in ("p", "q", "p_prime", "q_prime"):
        homotopy.add_argument(name, type=int)

    word = commands.add_parser("word", help="evaluate or decompose a word in S and T")
    word.add_argument("text", nargs="?")
    word.add_argument("--matrix", type=int, nargs=4, metavar=("A11", "A12", "A21", "A22"))

    return parser


def configure_logging(args, err: TextIO):
    level = logging.WARNING
    if args.verbose:
        level = logging.INFO
    if args.debug:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=err, format="%(levelname)s %(name)s: %(message)s", force=True
    )


def float_text(re, im, digits: int) -> str:
    return f"{format_float(re, digits)} + {format_float(im, digits)}i"


def run_compute(args, settings: Settings, out: TextIO) -> int:
    lens = LensSpace(args.p, args.q)
    summed, closed = state_sum(lens), closed_form(lens)
    re, im = summed.to_float(settings.precision)

    result = {
        "p": lens.p,
        "q": lens.q,
        "exact": to_text(summed.value),
        "surd": to_surd(summed.value),
        "float": float_text(re, im, settings.float_digits),
        "closed_form_agrees": summed == closed,
    }
    if lens.reduced_q != lens.q:
        result["q_mod_p"] = lens.reduced_q

    if args.format == "json":
        out.write(json.dumps(result, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(f"{lens}\n")
        if "q_mod_p" in result:
            out.write(f"  q mod {abs(lens.p)}: {lens.reduced_q}\n")
        out.write(f"  exact: {result['exact']}\n")
        if result["surd"] is not None:
            out.write(f"  surd: {result['surd']}\n")
        out.write(f"  float: {result['float']}\n")
        out.write(f"  closed form: {'agrees' if summed == closed else 'DIFFERS'}\n")
    return 0 if summed == closed else 1


def run_table(args, settings: Settings, out: TextIO) -> int:
    rows = table(settings.pmax, settings.precision, settings.workers, settings.float_digits)
    writers = {"text": to_plain_text, "json": to_json, "csv": to_csv}
    text = writers[args.format](rows)
    out.write(text if text.endswith("\n") else text + "\n")
    return 0 if all(row.agrees for row in rows) else 1


def verification_suite(settings: Settings) -> Dict[str, Callable[[], Report]]:
    return {
        "relations": verify_relations,
        "unitarity": lambda: Report.merge("unitarity", [verify_unitarity(), verify_symmetry()]),
        "kernel": verify_kernel_generators,
        "wellDefined": lambda: verify_well_defined(settings.pmax),
        "periodicity": lambda: verify_periodicity(settings.pmax),
        "closedform": lambda: verify_closed_form(
            settings.pmax, settings.precision, settings.workers
        ),
        "corollary": lambda: verify_corollary(settings.corollary_pmax),
        "lift": verify_congruent_lift,
        "determinism": lambda: verify_mod12_determinism(settings.pmax),
    }


def write_report_text(report: Report, out: TextIO):
    status = "PASS" if report.passed else "FAIL"
    out.write(f"{status} {report.name} ({len(report.checks)} checks)\n")
    for note in report.notes:
        out.write(f"  note: {note}\n")
    for check in report.failures():
        out.write(f"  failed: {check.check_name} {json.dumps(check.witness, ensure_ascii=False)}\n")


def run_verify(args, settings: Settings, out: TextIO) -> int:
    if settings.pmax <= 12 and args.target in ("periodicity", "all"):
        raise UsageError(f"periodicity needs --pmax >= 13, got {settings.pmax}")

    suite = verification_suite(settings)
    names = TARGETS if args.target == "all" else [args.target]
    reports = []
    for name in names:
        logger.info("Running %s", name)
        reports.append(suite[name]())

    if args.format == "json":
        value = [
            {
                "name": report.name,
                "passed": report.passed,
                "notes": report.notes,
                "checks": report.to_json_value(),
            }
            for report in reports
        ]
        out.write(json.dumps(value, indent=2, ensure_ascii=False) + "\n")
    else:
        for report in reports:
            write_report_text(report, out)

    return 0 if all(report.passed for report in reports) else 1


def run_homotopy(args, out: TextIO) -> int:
    lens, other = LensSpace(args.p, args.q), LensSpace(args.p_prime, args.q_prime)
    n = homotopy_witness(lens, other)
    if n is None:
        out.write(f"{lens} and {other} are not homotopy equivalent\n")
    else:
        out.write(f"{lens} and {other} are homotopy equivalent (n={n})\n")
    return 0


def run_word(args, out: TextIO) -> int:
    if (args.text is None) == (args.matrix is None):
        raise UsageError("give either a word or --matrix A11 A12 A21 A22")

    if args.matrix is not None:
        matrix = UnimodularMatrix(*args.matrix)
    else:
        word = GeneratorWord.parse(args.text)
        matrix = eval_word(word)
        out.write(f"word: {word.pretty() or 'I'}\n")

    out.write(f"matrix: {matrix}\n")
    out.write(f"decomposition: {decompose_word(matrix).pretty() or 'I'}\n")
    out.write(f"in Gamma(12): {'yes' if in_gamma12(matrix) else 'no'}\n")
    return 0


def run(
    argv: Optional[List[str]] = None,
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr,
) -> int:
    """Exit code 0 on success, 1 on a failed verification, 2 on a usage error."""
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2

    configure_logging(args, err)

    try:
        settings = load_settings(args.env)
        overrides = {
            "precision": args.precision,
            "pmax": getattr(args, "pmax", None),
            "workers": getattr(args, "workers", None),
            "corollary_pmax": getattr(args, "corollary_pmax", None),
        }
        settings = dataclasses.replace(
            settings, **{k: v for k, v in overrides.items() if v is not None}
        )
        if settings.precision < MIN_PRECISION:
            raise UsageError(f"--precision must be at least {MIN_PRECISION} bits")
        if min(settings.pmax, settings.corollary_pmax, settings.workers) < 1:
            raise UsageError("--pmax, --corollary-pmax and --workers must be positive")

        if args.command == "compute":
            return run_compute(args, settings, out)
        if args.command == "table":
            return run_table(args, settings, out)
        if args.command == "verify":
            return run_verify(args, settings, out)
        if args.command == "homotopy":
            return run_homotopy(args, out)
        return run_word(args, out)
    except (
        UsageError,
        NotCoprimeError,
        DeterminantError,
        WordSyntaxError,
        SettingsError,
    ) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())
