"""Shared exception types."""


class InvariantViolation(Exception):
    """A quantity that is a theorem of the underlying combinatorics failed.

    Raised when an eagerly checked identity does not hold; this always
    indicates a bug or corrupted input, never a legitimate runtime state.
    """


class AuditBudgetError(ValueError):
    """An audit scope was rejected because its estimated work exceeds the budget."""
