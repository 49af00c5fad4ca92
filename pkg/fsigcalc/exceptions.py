# fsigcalc/exceptions.py
from typing import Any, Dict, Optional


class FsigError(Exception):
    """Base class for every error raised by fsigcalc."""


class DomainError(FsigError, ValueError):
    """A parameter lies outside the domain of the requested operation."""


class HypothesisViolation(FsigError):
    """A closed formula was requested outside the inequalities it is proved under."""

    def __init__(self, inequality: str, values: Optional[Dict[str, Any]] = None):
        self.inequality = inequality
        self.values = dict(values or {})
        shown = ", ".join(f"{k}={v}" for k, v in self.values.items())
        message = f"hypothesis failed: {inequality}"
        if shown:
            message += f" ({shown})"
        super().__init__(message)


class FieldMismatch(FsigError, TypeError):
    """Operands live over different coefficient fields."""


class ZeroPolynomial(FsigError, ValueError):
    """The zero polynomial has no leading term."""


class DivisionByZero(FsigError, ZeroDivisionError):
    """A field element with no inverse was used as a divisor."""


class ConfigError(FsigError, ValueError):
    """Invalid environment configuration."""


class VerificationFailure(FsigError):
    """Two independent routes disagree; carries the first counterexample."""

    def __init__(self, check: str, params: Dict[str, Any], expected: Any, got: Any):
        self.check = check
        self.params = dict(params)
        self.expected = expected
        self.got = got
        shown = ", ".join(f"{k}={v}" for k, v in self.params.items())
        super().__init__(f"{check}: expected {expected}, got {got} [{shown}]")
