"""Exception types and the check record shared by every module."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class ZdgError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ZdgError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AxiomError(ZdgError):
    """Input is not a semigroup / not inverse / lacks a required zero."""


class TheoremViolation(ZdgError):
    """A computed value disagrees with a structural prediction."""

    def __init__(self, check: str, message: str, witness: Any = None):
        self.check = check
        self.witness = witness
        super().__init__(f"{check}: {message}")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None
    skipped: bool = False
    note: str | None = None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.skipped:
            out["skipped"] = True
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out
