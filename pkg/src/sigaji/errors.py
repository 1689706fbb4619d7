"""Error taxonomy shared by the store, engine, API and CLI.

Every failure the system reports to a caller is one of these four kinds;
the HTTP layer and the CLI map them onto status codes / exit codes.
"""

from __future__ import annotations


class PayrollError(Exception):
    """Base class for all domain errors."""

    code = "internal"

    def __init__(self, message: str, details: list[str] | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or []


class ValidationError(PayrollError):
    """Malformed or out-of-range input (bad money text, width overflow, ...)."""

    code = "validation"


class NotFoundError(PayrollError):
    """A row addressed by key does not exist."""

    code = "not_found"


class ConflictError(PayrollError):
    """A uniqueness rule would be violated (duplicate name, duplicate period)."""

    code = "conflict"


class ReferentialConflictError(PayrollError):
    """A delete or reference would break foreign-key integrity.

    ``details`` lists the blocking keys (e.g. the NIIs still pointing at a
    master row).
    """

    code = "referential_conflict"
