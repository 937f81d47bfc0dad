"""
:module Exceptions: Domain errors raised on bad user input.

Everything a caller can trigger with malformed or out-of-range input derives
from :class:`CantorDomainError`, which is a ``ValueError``. Internal identity
violations are not domain errors; they surface as ``AssertionError``.
"""

from typing import Optional


class CantorDomainError(ValueError):
    """Base class of all input errors of cantorkit."""


class BaseSpecSyntaxError(CantorDomainError):
    """A Q-spec text that does not conform to the mini-language."""

    def __init__(self, message: str, position: int, text: Optional[str] = None):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class RationalSyntaxError(CantorDomainError):
    """A rational literal that is neither ``a/b`` nor a plain integer."""


class DigitStringError(CantorDomainError):
    """A digit string that is malformed or violates its digit bounds."""


class OutOfDomainError(CantorDomainError):
    """A number outside the half-open unit interval [0,1)."""


class DualFormError(CantorDomainError):
    """A representation that has no dual form, or is a dual form where a canonical one is required."""
