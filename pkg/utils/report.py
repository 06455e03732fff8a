import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

from exactla import Matrix, first_difference
from utils.errors import ShapeMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReportEntry:
    """One named check with its outcome"""
    name: str
    passed: bool
    witness: Optional[tuple[int, int, str, str]] = None
    note: str = ""

    def to_dict(self) -> dict:
        data = {"check": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            row, col, lhs, rhs = self.witness
            data["witness"] = {"row": row, "col": col, "lhs": lhs, "rhs": rhs}
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class VerificationReport:
    entries: list[ReportEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[ReportEntry]:
        return [e for e in self.entries if not e.passed]

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def entry(self, name: str) -> ReportEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def passed(self, name: str) -> bool:
        return self.entry(name).passed

    def compare(self, name: str, lhs: Matrix, rhs: Matrix) -> bool:
        """Record lhs == rhs as an entry; shape disagreement is an input error"""
        if lhs.shape != rhs.shape:
            raise ShapeMismatch(f"{name}: comparing {lhs.shape} with {rhs.shape}")
        witness = first_difference(lhs, rhs)
        self.entries.append(ReportEntry(name, witness is None, witness))
        if witness is not None:
            logger.warning(f"check {name} failed at {witness}")
        return witness is None

    def record(self, name: str, passed: bool, note: str = "",
               witness: Optional[tuple[int, int, str, str]] = None) -> bool:
        self.entries.append(ReportEntry(name, passed, witness, note))
        if not passed:
            logger.warning(f"check {name} failed: {note}")
        return passed

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for e in other.entries:
            self.entries.append(ReportEntry(prefix + e.name, e.passed, e.witness, e.note))
        return self

    def to_list(self) -> list[dict]:
        return [e.to_dict() for e in self.entries]

    def summary_lines(self) -> Iterable[str]:
        for e in self.entries:
            status = "ok  " if e.passed else "FAIL"
            line = f"[{status}] {e.name}"
            if e.witness is not None:
                row, col, lhs, rhs = e.witness
                line += f"  at [{row}, {col}]: {lhs} != {rhs}"
            if e.note:
                line += f"  ({e.note})"
            yield line
