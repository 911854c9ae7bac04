from __future__ import annotations

"""Exception hierarchy for chaintutte.

Every error carries a short machine-readable ``code`` which the CLI prints as
part of the error JSON on stderr.  Each class also derives from the builtin
that plain callers would expect (``ValueError`` for bad input,
``RuntimeError`` for exhausted budgets and broken identities) so existing
``except ValueError`` blocks keep working.
"""

from typing import Any, Dict, Optional

__all__ = [
    "ChainTutteError",
    "InvalidParametersError",
    "NotAMatroidError",
    "NotAPolymatroidError",
    "OutOfRangeError",
    "UnsupportedError",
    "DomainError",
    "UnknownInvariantError",
    "NerveError",
    "BudgetExceededError",
    "InternalError",
]


class ChainTutteError(Exception):
    """Base class for all errors raised by the library."""

    code = "error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": self.message, "details": self.details}


class InvalidParametersError(ChainTutteError, ValueError):
    code = "invalid-parameters"


class NotAMatroidError(ChainTutteError, ValueError):
    code = "not-a-matroid"


class NotAPolymatroidError(ChainTutteError, ValueError):
    code = "not-a-polymatroid"


class OutOfRangeError(ChainTutteError, ValueError):
    code = "out-of-range"


class UnsupportedError(ChainTutteError, ValueError):
    code = "unsupported"


class DomainError(ChainTutteError, ValueError):
    code = "domain-error"


class UnknownInvariantError(ChainTutteError, ValueError):
    code = "unknown-invariant"


class NerveError(ChainTutteError, ValueError):
    code = "nerve-inconsistent"


class BudgetExceededError(ChainTutteError, RuntimeError):
    code = "budget-exceeded"


class InternalError(ChainTutteError, RuntimeError):
    code = "internal-error"
