"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class CrystalError(Exception):
    """Base class for every error raised by this package."""


class PreconditionViolation(CrystalError):
    """An operation was called outside its documented domain."""


class IndexZeroError(CrystalError):
    """Coordinate slot 0 is the weight marker and carries no entry."""


class ScanOverflowError(CrystalError):
    """A ladder scan exceeded its iteration bound (internal error)."""


class StepLimitExceeded(CrystalError):
    """Raising/lowering did not reach a fixed point within the step budget."""

    def __init__(self, steps: int, vector=None):
        super().__init__(f"no extremal vector within {steps} steps")
        self.steps = steps
        self.vector = vector


class NodeBudgetExceeded(CrystalError):
    """Graph search discovered more vectors than the node budget allows."""


class FormBudgetExceeded(CrystalError):
    """Closure generation produced more linear forms than the budget allows."""


class EnumerationBudgetExceeded(CrystalError):
    """Box enumeration exceeded its candidate budget or is unbounded."""


class WindowViolation(CrystalError):
    """A vector's support extends beyond the truncation window of a family."""


class RegimeMismatch(CrystalError):
    """The requested inequality family does not match the weight's regime."""


class UnsupportedCartan(CrystalError):
    """Cartan data outside the supported finite-type list."""
