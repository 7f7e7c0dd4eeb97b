"""Shared enums and report schemas."""
from typegraph.models.enums import ColorPart, GraphKind, HomKind, OutputFormat, Polarity
from typegraph.models.schemas import (
    ChromaticReport,
    ColoringReport,
    DecompositionReport,
    GraphDump,
    HomomorphismReport,
    ProperReport,
)

__all__ = [
    "ChromaticReport",
    "ColorPart",
    "ColoringReport",
    "DecompositionReport",
    "GraphDump",
    "GraphKind",
    "HomKind",
    "HomomorphismReport",
    "OutputFormat",
    "Polarity",
    "ProperReport",
]
