import logging
from collections import defaultdict
from math import gcd
from multiprocessing import Pool
from typing import Dict, Iterable, List, Tuple

import mpmath
import numpy as np

from e6lens.cyclotomic.serialization import to_text
from e6lens.invariant import (
    CLOSED_FORM_SIGN_ERRATUM,
    InvariantValue,
    LensSpace,
    closed_form,
    homotopy_equivalent,
    state_sum,
)
from e6lens.modular import (
    LEVEL,
    CongruenceError,
    NotCoprimeError,
    congruent_lift,
    in_gamma12,
    periodicity_witness,
)
from e6lens.report import Report
from e6lens.representation import RepMatrix, rho_matrix

logger = logging.getLogger(__name__)

FLOAT_TOLERANCE = mpmath.mpf("1e-9")
WELL_DEFINED_SHIFTS = range(-3, 4)


def coprime_pairs(p_max: int, p_min: int = 1) -> List[Tuple[int, int]]:
    """Coprime (p, q) with p_min <= p <= p_max and 0 <= q < max(p, 1), in order."""
    return [
        (p, q)
        for p in range(p_min, p_max + 1)
        for q in range(max(p, 1))
        if gcd(p, q) == 1
    ]


def evaluate_both(pair: Tuple[int, int]) -> Tuple[InvariantValue, InvariantValue]:
    lens = LensSpace(*pair)
    return state_sum(lens), closed_form(lens)


def evaluate_pairs(
    pairs: List[Tuple[int, int]], workers: int = 1
) -> List[Tuple[InvariantValue, InvariantValue]]:
    """(state sum, closed form) per pair, in the order of pairs."""
    logger.info("Sweeping %d lens spaces with %d worker(s)", len(pairs), workers)
    if workers <= 1:
        return [evaluate_both(pair) for pair in pairs]
    with Pool(workers) as pool:
        return pool.map(evaluate_both, pairs)


def float_distance(x: InvariantValue, y: InvariantValue, precision_bits: int = 128):
    x_re, x_im = x.to_float(precision_bits)
    y_re, y_im = y.to_float(precision_bits)
    with mpmath.workprec(precision_bits):
        return mpmath.hypot(x_re - y_re, x_im - y_im)


def check_well_defined(lens: LensSpace, shifts: Iterable[int]) -> Report:
    """The state sum is unchanged when (a, b) is replaced by (a + kp, b + kq)."""
    report = Report("wellDefined")
    expected = state_sum(lens)
    a, b = lens.cofactor()
    for k in shifts:
        cofactor = (a + k * lens.p, b + k * lens.q)
        actual = state_sum(lens, cofactor)
        report.add(
            f"{lens} k={k}",
            actual == expected,
            {
                "p": lens.p,
                "q": lens.q,
                "a": cofactor[0],
                "b": cofactor[1],
                "expected": to_text(expected.value),
                "actual": to_text(actual.value),
            },
        )
    return report


def verify_well_defined(
    p_max: int, samples: int = 100, seed: int = 0, shifts=WELL_DEFINED_SHIFTS
) -> Report:
    pairs = coprime_pairs(p_max)
    rng = np.random.default_rng(seed)
    chosen = sorted(rng.choice(len(pairs), size=min(samples, len(pairs)), replace=False))
    logger.info("Checking cofactor independence on %d lens spaces", len(chosen))

    report = Report("wellDefined")
    for index in chosen:
        sub_report = check_well_defined(LensSpace(*pairs[int(index)]), shifts)
        report.checks.extend(sub_report.checks)
    return report


def verify_periodicity(p_max: int, check_kernel: bool = False) -> Report:
    """
    Z(L(p,q)) = Z(L(p+12s, q+12t)) for (s, t) in {(1,0), (0,1), (1,1)}, for
    every coprime (p, q) with 1 <= p <= p_max - 12 whose shift stays coprime.
    With check_kernel, also ρ(P) = I for the Γ(12) element P relating the
    two lens matrices.
    """
    report = Report("periodicity")
    values: Dict[Tuple[int, int], InvariantValue] = {}

    def value(pair):
        if pair not in values:
            values[pair] = state_sum(LensSpace(*pair))
        return values[pair]

    identity = RepMatrix.identity()
    pairs = coprime_pairs(p_max - LEVEL)
    logger.info("Checking periodicity on %d lens spaces", len(pairs))
    for p, q in pairs:
        for s, t in ((1, 0), (0, 1), (1, 1)):
            shifted = (p + LEVEL * s, q + LEVEL * t)
            if gcd(*shifted) != 1:
                continue

            expected, actual = value((p, q)), value(shifted)
            report.add(
                f"L({p},{q}) ~ L({shifted[0]},{shifted[1]})",
                actual == expected,
                {
                    "pair": [p, q],
                    "shifted": list(shifted),
                    "expected": to_text(expected.value),
                    "actual": to_text(actual.value),
                },
            )
            if check_kernel:
                _, _, P = periodicity_witness(p, q, *shifted)
                report.add(
                    f"rho(P) = I for L({p},{q}) ~ L({shifted[0]},{shifted[1]})",
                    rho_matrix(P) == identity,
                    {"P": str(P)},
                )
    return report


def verify_closed_form(
    p_max: int, precision_bits: int = 128, workers: int = 1
) -> Report:
    """State sum against closed form, exactly and under the float embedding."""
    report = Report("closedform")
    report.notes.append(CLOSED_FORM_SIGN_ERRATUM)
    pairs = coprime_pairs(p_max)
    for (p, q), (summed, closed) in zip(pairs, evaluate_pairs(pairs, workers)):
        distance = float_distance(summed, closed, precision_bits)
        report.add(
            f"L({p},{q})",
            summed == closed and distance < FLOAT_TOLERANCE,
            {
                "p": p,
                "q": q,
                "state_sum": to_text(summed.value),
                "closed_form": to_text(closed.value),
                "float_distance": mpmath.nstr(distance, 5),
            },
        )
    return report


def verify_corollary(p_max: int) -> Report:
    """Homotopy-equivalent L(p,q), L(p,q') have equal closed forms, one check per p."""
    report = Report("corollary")
    logger.info("Checking homotopy invariance for p <= %d", p_max)
    for p in range(1, p_max + 1):
        lenses = [LensSpace(p, q) for q in range(p) if gcd(p, q) == 1]
        values = {lens.q: closed_form(lens) for lens in lenses}

        count, witness = 0, None
        for lens in lenses:
            for other in lenses:
                if not homotopy_equivalent(lens, other):
                    continue
                count += 1
                if witness is None and values[lens.q] != values[other.q]:
                    witness = {
                        "p": p,
                        "q": lens.q,
                        "q_prime": other.q,
                        "value": to_text(values[lens.q].value),
                        "value_prime": to_text(values[other.q].value),
                    }
        logger.debug("p=%d: %d homotopy-equivalent pairs", p, count)
        report.add(f"p={p}", witness is None, witness)
    return report


def verify_mod12_determinism(p_max: int) -> Report:
    """The closed form depends only on p mod 12 and q mod gcd(p,12)."""
    report = Report("determinism")
    classes = defaultdict(list)
    for p, q in coprime_pairs(p_max):
        g = gcd(p, LEVEL)
        classes[(p % LEVEL, q % g)].append((p, q, closed_form(LensSpace(p, q))))

    for key in sorted(classes):
        members = classes[key]
        p0, q0, first = members[0]
        different = next((m for m in members[1:] if m[2] != first), None)
        report.add(
            f"p={key[0]} mod 12, q={key[1]} mod {gcd(key[0], LEVEL)}",
            different is None,
            None
            if different is None
            else {
                "pair": [p0, q0],
                "other": [different[0], different[1]],
                "value": to_text(first.value),
                "other_value": to_text(different[2].value),
            },
        )
    return report


def verify_congruent_lift(bound: int = 30) -> Report:
    """
    congruent_lift on all coprime |p|, |q| <= bound shifted by 12 and 24 in
    each coordinate: both cofactor equations hold, a = a' and b = b' mod 12,
    and the periodicity witness lies in Γ(12). One check per shift.
    """
    report = Report("lift")
    shifts = [(dp, dq) for dp in (0, 12, 24) for dq in (0, 12, 24) if dp or dq]
    for dp, dq in shifts:
        count, witness = 0, None
        for p in range(-bound, bound + 1):
            for q in range(-bound, bound + 1):
                p_prime, q_prime = p + dp, q + dq
                if gcd(p, q) != 1 or gcd(p_prime, q_prime) != 1:
                    continue
                count += 1
                error = None
                try:
                    a, b, a_prime, b_prime = congruent_lift(p, q, p_prime, q_prime)
                    _, _, P = periodicity_witness(p, q, p_prime, q_prime)
                    ok = (
                        a * q - b * p == 1
                        and a_prime * q_prime - b_prime * p_prime == 1
                        and (a - a_prime) % LEVEL == 0
                        and (b - b_prime) % LEVEL == 0
                        and in_gamma12(P)
                    )
                except (AssertionError, CongruenceError, NotCoprimeError) as exc:
                    ok, error = False, repr(exc)
                if not ok and witness is None:
                    witness = {
                        "p": p,
                        "q": q,
                        "p_prime": p_prime,
                        "q_prime": q_prime,
                        "error": error,
                    }
        logger.debug("shift (%d,%d): %d pairs", dp, dq, count)
        report.add(f"shift ({dp},{dq})", witness is None, witness)
    return report
