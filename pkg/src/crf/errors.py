"""Shared exception types and structured validation issues."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ValidationIssue:
    """One violated rule, attributed to the offending entity."""

    entity_id: str
    rule: str
    message: str

    def to_dict(self) -> dict:
        return {"entity_id": self.entity_id, "rule": self.rule, "message": self.message}


class CrfError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CrfError):
    """Input violates an invariant. Carries the structured issue list."""

    def __init__(self, issues: list[ValidationIssue] | str):
        if isinstance(issues, str):
            issues = [ValidationIssue(entity_id="", rule="invalid", message=issues)]
        self.issues = issues
        super().__init__("; ".join(i.message for i in issues))


class NotFoundError(CrfError):
    """Lookup by id failed."""


class LockError(CrfError):
    """Project directory is locked by another writer."""


class StorageError(CrfError):
    """Underlying file I/O failed or storage state is inconsistent."""
