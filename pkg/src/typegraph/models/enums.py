"""Enums for typegraph models."""
from enum import Enum


class Polarity(str, Enum):
    """Polarity of an irreducible type."""

    PRIMARY = "primary"      # starts with 1
    SECONDARY = "secondary"  # starts with 2
    TRIVIAL = "trivial"      # the type 3


class GraphKind(str, Enum):
    TYPEGRAPH = "typegraph"
    AUXILIARY = "auxiliary"
    GENERIC = "generic"  # fixtures and DIMACS imports


class ColorPart(str, Enum):
    """Parts of the vertex partition of G_b(2^n)."""

    A = "A"
    B = "B"
    C = "C"


class HomKind(str, Enum):
    LOWER = "lower"
    UPPER = "upper"
    PROJECT = "project"
    REDUCIBLE = "reducible"


class OutputFormat(str, Enum):
    DIMACS = "dimacs"
    JSON = "json"
