"""Exception types that callers (and the CLI exit-code map) tell apart."""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """An exhaustive search or state space would exceed its configured budget."""


class RecordError(Exception):
    """A serialized record is unparseable or has the wrong format version."""
