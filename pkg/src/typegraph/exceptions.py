"""Custom exceptions for typegraph."""
from __future__ import annotations

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_VIOLATIONS = 3
EXIT_BUDGET = 4


class TypeGraphError(Exception):
    """Base class for every error raised by the library."""

    exit_code: int = EXIT_VALIDATION
    default_detail: str = "typegraph error"

    def __init__(self, detail: str | None = None) -> None:
        self.detail = detail or self.default_detail
        super().__init__(self.detail)


class InvalidDigit(TypeGraphError):
    """A mark outside {1,2,3} was supplied."""

    default_detail = "Marks must be digits 1, 2 or 3"


class NotAType(TypeGraphError):
    """A sequence with unequal numbers of ones and twos was used as a type."""

    default_detail = "Sequence is not a type (1-count differs from 2-count)"


class NotIrreducible(TypeGraphError):
    default_detail = "Type is not irreducible"


class Reducible(NotIrreducible):
    default_detail = "Operation requires an irreducible type"


class BadWidth(TypeGraphError):
    default_detail = "Width out of range"


class SizeMismatch(TypeGraphError):
    default_detail = "Set size does not match the block"


class WidthMismatch(TypeGraphError):
    default_detail = "Set size does not match the width of the type"


class TooSmall(TypeGraphError):
    default_detail = "Ground set is smaller than the width"


class TrivialType(TypeGraphError):
    default_detail = "Trivial types have no type-graph"


class DimensionMismatch(TypeGraphError):
    default_detail = "Vertices have different dimensions"


class BadRange(TypeGraphError):
    default_detail = "Argument out of range"


class IndexOut(TypeGraphError):
    default_detail = "Factor index out of range"


class CoverageGap(TypeGraphError):
    default_detail = "Colouring does not cover every vertex"


class ImageNotVertex(TypeGraphError):
    default_detail = "Image payload is not a vertex of the target"


class ClassificationError(TypeGraphError):
    """Raised when a vertex falls into no part, or into two parts, of a partition."""

    default_detail = "Vertex classification is not exhaustive and exclusive"


class GraphTooLarge(TypeGraphError):
    exit_code = EXIT_BUDGET
    default_detail = "Graph exceeds the configured size budget"


class BudgetExceeded(TypeGraphError):
    """Exact search ran out of nodes or time; carries the bracketing bounds."""

    exit_code = EXIT_BUDGET
    default_detail = "Search budget exceeded"

    def __init__(
        self,
        lower: int,
        upper: int,
        nodes_explored: int,
        detail: str | None = None,
    ) -> None:
        self.lower = lower
        self.upper = upper
        self.nodes_explored = nodes_explored
        super().__init__(
            detail
            or f"Search budget exceeded after {nodes_explored} nodes; "
            f"{lower} <= chi <= {upper}"
        )
