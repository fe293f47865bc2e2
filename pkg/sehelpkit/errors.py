from typing import *

__all__ = [
    "StructureEntropyError",
    "GraphParseError",
    "NonPositiveWeightError",
    "EmptyGraphError",
    "DegenerateMeasureError",
    "EdgelessGraphError",
    "DegenerateDistributionError",
    "DegenerateGraphError",
    "UnknownVertexError",
    "InvalidDistributionError",
    "InvalidPartitionError",
    "SizeLimitError",
    "PathCountOverflowError",
    "GraphTooSmallError",
    "MissingKindError",
    "UnknownDatasetError",
]


class StructureEntropyError(Exception):
    """Base class of every error raised by sehelpkit.

    `exit_code` is the process exit status the CLI uses for this error.
    """

    exit_code = 1

    def __str__(self) -> str:
        # KeyError subclasses would otherwise repr() their message
        return str(self.args[0]) if self.args else self.__class__.__name__


class GraphParseError(StructureEntropyError, ValueError):
    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NonPositiveWeightError(GraphParseError):
    pass


class EmptyGraphError(GraphParseError):
    pass


class DegenerateMeasureError(StructureEntropyError, ValueError):
    """The requested measure is undefined on this graph."""

    exit_code = 3


class EdgelessGraphError(DegenerateMeasureError):
    pass


class DegenerateDistributionError(DegenerateMeasureError):
    pass


class DegenerateGraphError(DegenerateMeasureError):
    pass


class UnknownVertexError(StructureEntropyError, KeyError):
    exit_code = 4

    def __init__(self, vertex: Any) -> None:
        super().__init__(f"unknown vertex: {vertex!r}")
        self.vertex = vertex


class InvalidDistributionError(StructureEntropyError, ValueError):
    pass


class InvalidPartitionError(StructureEntropyError, ValueError):
    pass


class SizeLimitError(StructureEntropyError, ValueError):
    pass


class PathCountOverflowError(StructureEntropyError, OverflowError):
    pass


class GraphTooSmallError(StructureEntropyError, ValueError):
    pass


class MissingKindError(StructureEntropyError, KeyError):
    pass


class UnknownDatasetError(StructureEntropyError, KeyError):
    pass
