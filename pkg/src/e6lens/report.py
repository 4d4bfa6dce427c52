import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    check_name: str
    passed: bool
    witness: Optional[dict] = None

    def to_json_value(self) -> dict:
        return {"check_name": self.check_name, "pass": self.passed, "witness": self.witness}


@dataclass
class Report:
    """Outcome of a verification: one CheckResult per check, in a stable order."""

    name: str
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def add(self, check_name: str, passed: bool, witness: Optional[dict] = None):
        if not passed:
            logger.warning("%s: check %s failed, witness %s", self.name, check_name, witness)
        self.checks.append(CheckResult(check_name, passed, None if passed else witness))

    def to_json_value(self) -> list:
        return [check.to_json_value() for check in self.checks]

    def to_json(self) -> str:
        return json.dumps(self.to_json_value(), indent=2, ensure_ascii=False)

    @classmethod
    def merge(cls, name: str, reports: Iterable["Report"]) -> "Report":
        merged = cls(name)
        for report in reports:
            merged.checks.extend(
                CheckResult(f"{report.name}/{c.check_name}", c.passed, c.witness)
                for c in report.checks
            )
            merged.notes.extend(f"{report.name}: {note}" for note in report.notes)
        return merged
