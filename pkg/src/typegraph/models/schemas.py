"""Report and dump schemas shared by the library and the CLI."""
from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field

from typegraph.models.enums import GraphKind, HomKind


class GraphDump(BaseModel):
    """JSON dump of a materialised graph."""

    kind: GraphKind = Field(description="typegraph or auxiliary")
    params: dict[str, Any] = Field(description="Construction parameters")
    vertices: list[list[int]] = Field(description="Vertex payloads in index order")
    edges: list[tuple[int, int]] = Field(description="Sorted 0-based index pairs")


class ProperReport(BaseModel):
    """Outcome of a properness check."""

    proper: bool
    violations: list[tuple[int, int]] = Field(default=[], description="Monochromatic edges")
    colour_count: int
    edges_checked: int


class ColoringReport(BaseModel):
    """Coloring JSON: parameters, flattened colours and the token legend."""

    params: dict[str, Any]
    colors: list[int]
    palette_size: int
    token_legend: dict[int, str]
    proper: bool | None = None
    violations: list[tuple[int, int]] = Field(default=[])


class HomomorphismReport(BaseModel):
    """Edge-preservation report for a vertex map."""

    kind: HomKind | None = None
    params: dict[str, Any] = Field(default_factory=dict)
    violations: list[tuple[int, int]] = Field(default=[], description="Source edges not preserved")
    collisions: int = Field(default=0, description="Source vertices sharing an image")
    edges_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


class ChromaticReport(BaseModel):
    """Result JSON of the exact oracle."""

    chi: int | None
    lower: int
    upper: int
    colors: list[int]
    nodes_explored: int
    elapsed_ms: float


class DecompositionReport(BaseModel):
    type: str
    factors: list[str]
    blocks: list[list[str]]
    block_counts: list[int]
    prefix_sums: list[list[int]]
    b_star: int
    growth_order: int | None
