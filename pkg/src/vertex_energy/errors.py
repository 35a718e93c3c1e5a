"""Exception hierarchy.

Input problems derive from :class:`InputError` (CLI exit code 2), numerical
breakdowns from :class:`NumericalError` (CLI exit code 3).
"""

from __future__ import annotations


class VertexEnergyError(Exception):
    """Base class for all package errors."""


class InputError(VertexEnergyError, ValueError):
    pass


class OutOfRange(InputError, IndexError):
    pass


class SelfLoop(InputError):
    pass


class Graph6Error(InputError):
    pass


class BadHeader(Graph6Error):
    pass


class TrailingData(Graph6Error):
    pass


class UnsupportedOrder(Graph6Error):
    pass


class InvalidLCF(InputError):
    pass


class BadParameters(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotPlausiblyTransitive(InputError):
    """Raised when a graph fails the cheap regularity test for vertex-transitivity."""


class NumericalError(VertexEnergyError, ArithmeticError):
    pass


class ConvergenceFailure(NumericalError):
    pass


class IllConditioned(NumericalError):
    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class AmbiguousClustering(NumericalError):
    pass


class Overflow(NumericalError, OverflowError):
    def __init__(self, k: int, vertex: int):
        super().__init__(
            f"closed-walk count for length {k} at vertex v{vertex + 1} exceeds int64"
        )
        self.k = k
        self.vertex = vertex
