# src/errors.py


class StackEnumerationError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(StackEnumerationError, ValueError):
    """An operation was called outside its documented domain."""


class DegreeExceededError(PreconditionError):
    def __init__(self, vertex: int, degree: int, d: int):
        super().__init__(f"degree exceeds d: vertex {vertex} has degree {degree} > {d}")
        self.vertex = vertex
        self.degree = degree
        self.d = d


class UnmatchedStepsError(StackEnumerationError):
    """A step string is not balanced, or dips below its start height."""


class NonMatchablePathError(StackEnumerationError):
    """eta_inv found an up-vertex with no down-vertex to its right."""


class MultipleArcError(StackEnumerationError):
    """eta_inv produced the same arc twice: the input path contains a Lambda pattern."""

    def __init__(self, arc: tuple):
        super().__init__(f"multiple arc {arc}: path contains a Lambda pattern")
        self.arc = arc


class ConvergenceError(StackEnumerationError, ArithmeticError):
    """The generating-function system did not stabilize within the sweep cap."""


class FamilyRangeError(StackEnumerationError, ValueError):
    """A parametrized coefficient family was instantiated outside its valid range."""
