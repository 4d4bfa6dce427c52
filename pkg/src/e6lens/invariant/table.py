import csv
import io
import json
import logging
from dataclasses import dataclass
from typing import List

import mpmath

from e6lens.cyclotomic import CyclotomicNumber
from e6lens.cyclotomic.serialization import to_surd, to_text
from e6lens.invariant.verification import coprime_pairs, evaluate_pairs

logger = logging.getLogger(__name__)

CSV_HEADER = ["p", "q", "exact", "float_re", "float_im", "agrees"]


@dataclass(frozen=True)
class TableRow:
    p: int
    q: int
    exact: CyclotomicNumber
    float_re: str
    float_im: str
    agrees: bool

    def to_json_value(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "exact": to_text(self.exact),
            "surd": to_surd(self.exact),
            "float_re": self.float_re,
            "float_im": self.float_im,
            "agrees": self.agrees,
        }


def format_float(x: mpmath.mpf, digits: int = 10) -> str:
    return mpmath.nstr(mpmath.chop(x, mpmath.mpf(10) ** -(2 * digits)), digits)


def table(
    p_max: int, precision_bits: int = 128, workers: int = 1, float_digits: int = 10
) -> List[TableRow]:
    """
    One row per coprime 1 <= p <= p_max, 0 <= q < max(p,1): the state sum,
    its float embedding and whether it agrees with the closed form.
    """
    if p_max < 1:
        raise ValueError(f"p_max must be at least 1, got {p_max}")

    pairs = coprime_pairs(p_max)
    rows = []
    for (p, q), (summed, closed) in zip(pairs, evaluate_pairs(pairs, workers)):
        re, im = summed.to_float(precision_bits)
        rows.append(
            TableRow(
                p,
                q,
                summed.value,
                format_float(re, float_digits),
                format_float(im, float_digits),
                summed == closed,
            )
        )
    return rows


def to_csv(rows: List[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [row.p, row.q, to_text(row.exact), row.float_re, row.float_im, row.agrees]
        )
    return buffer.getvalue()


def to_json(rows: List[TableRow]) -> str:
    return json.dumps([row.to_json_value() for row in rows], indent=2, ensure_ascii=False)


def to_plain_text(rows: List[TableRow]) -> str:
    lines = []
    for row in rows:
        label = f"L({row.p},{row.q})"
        value = to_surd(row.exact) or to_text(row.exact)
        mark = "" if row.agrees else "  MISMATCH"
        lines.append(f"{label:<10} {value:<32} {row.float_re} + {row.float_im}i{mark}")
    return "\n".join(lines) + "\n"
