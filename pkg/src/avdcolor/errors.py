"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed graph input (bad header, bad index, duplicate edge, ...)."""


class NotNormalError(ValueError):
    """Operation requires a normal graph (no isolated vertices or edges)."""


class GenerationError(RuntimeError):
    """Random generator exhausted its rejection-sampling retry budget."""


class StaleMoveError(RuntimeError):
    """A move was applied to a selection that changed since it was found."""


class InvalidGroupingError(RuntimeError):
    """A color-class grouping produced a non-normal or empty part."""


class CapExceededError(RuntimeError):
    """An exact oracle hit its configured cap before finishing."""


class SearchCapExceededError(RuntimeError):
    """A budgeted coloring search hit its node cap before finishing."""


class InternalBoundViolationError(RuntimeError):
    """A search refuted a budget that cited theory guarantees to be feasible.

    This is reported loudly: it means either an implementation bug or a
    counterexample to a published bound.
    """

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


class CounterexampleFound(RuntimeError):
    """The partition engine ran out of moves while its potential was positive.

    The counting argument behind the engine rules this out, so an instance is
    either an engine bug or research-grade.  The payload carries the full
    state dump needed to reproduce and inspect the configuration.
    """

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}
