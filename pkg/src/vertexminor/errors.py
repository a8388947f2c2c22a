"""Exception types raised across the package."""

from __future__ import annotations


class VertexMinorError(Exception):
    """Base class for all errors raised by this package."""


class UnknownVertex(VertexMinorError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class NotAnEdge(VertexMinorError):
    pass


class InvalidPartner(VertexMinorError):
    pass


class InvalidMove(VertexMinorError):
    """A plan move could not be applied; ``index`` is its position in the plan."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"move {index}: {reason}")
        self.index = index
        self.reason = reason


class SizeCapExceeded(VertexMinorError):
    pass


class BudgetExceeded(VertexMinorError):
    pass


class NotConnected(VertexMinorError):
    pass


class Disconnected(VertexMinorError):
    pass


class MalformedWord(VertexMinorError):
    pass


class UnknownLetter(VertexMinorError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class NotEulerian(VertexMinorError):
    pass


class NotCubic(VertexMinorError):
    pass


class NotHamiltonianCycle(VertexMinorError):
    pass


class MalformedWitness(VertexMinorError):
    pass


class NotATriangularExpansion(VertexMinorError):
    pass


class NotFourRegular(VertexMinorError):
    pass


class InvalidTarget(VertexMinorError):
    pass


class CapExceeded(VertexMinorError):
    pass


class InvalidOutcomeRequest(VertexMinorError):
    pass


class FormatError(VertexMinorError, ValueError):
    """Input text or JSON does not follow the documented format."""
