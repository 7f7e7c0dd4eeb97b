"""Explicit proper colourings of G_1, G_2, G_b(2^n) and of type-graphs.

Colours are structured tokens; a :class:`Coloring` flattens them to dense
integers in order of first appearance over the vertex enumeration.
"""
from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from loguru import logger

from typegraph.dyadic import ceil_log2, dyadic_split, eta, f_value, iterated_log, max_bits
from typegraph.exceptions import BadRange, ClassificationError, CoverageGap, TrivialType
from typegraph.graphs import Graph, build_Gb, build_typegraph, enumerate_V, in_V
from typegraph.homomorphisms import factor_window, upper_image
from typegraph.models.enums import ColorPart
from typegraph.models.schemas import ColoringReport, ProperReport
from typegraph.order_types import OrderType, b_star, block_decompose, factorize, sigma
from typegraph.utils.logging import timed

Payload = tuple[int, ...]


@dataclass(frozen=True)
class PlainColor:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class CliqueColor:
    value: int

    def __str__(self) -> str:
        return f"clique({self.value})"


@dataclass(frozen=True)
class ShiftColor:
    f: int

    def __str__(self) -> str:
        return f"f={self.f}"


@dataclass(frozen=True)
class G2Color:
    """One colour of the halving scheme on V_2(2^k).

    ``cls`` is ``"B"`` or ``"C"`` for the fresh colours of a level, or
    ``"base"`` for the single colour left at range size 2.
    """

    level: int
    cls: str

    def __str__(self) -> str:
        return f"G2[{self.level}:{self.cls}]"


@dataclass(frozen=True)
class GbColor:
    part: ColorPart
    index: int | None = None
    signature: tuple[int, ...] = ()
    sub: ColorToken | None = None

    def __str__(self) -> str:
        if self.part is ColorPart.B:
            return f"B{self.index}"
        if self.part is ColorPart.C:
            return f"C<{self.sub}>"
        bits = "".join(map(str, self.signature))
        return f"A[{bits}]<{self.sub}>"


@dataclass(frozen=True)
class PipelineColor:
    factor: int
    sub: ColorToken

    def __str__(self) -> str:
        return f"rho{self.factor}:{self.sub}"


ColorToken = PlainColor | CliqueColor | ShiftColor | G2Color | GbColor | PipelineColor


@dataclass(frozen=True, eq=False)
class Coloring:
    """Per-vertex tokens over a built graph."""

    graph: Graph
    tokens: tuple[ColorToken, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.tokens) != self.graph.order:
            raise CoverageGap(f"{len(self.tokens)} tokens for {self.graph.order} vertices")

    @classmethod
    def from_colors(cls, graph: Graph, colors: Sequence[int]) -> Coloring:
        return cls(graph, tuple(PlainColor(c) for c in colors))

    @cached_property
    def palette(self) -> dict[ColorToken, int]:
        palette: dict[ColorToken, int] = {}
        for token in self.tokens:
            palette.setdefault(token, len(palette))
        return palette

    @cached_property
    def colors(self) -> tuple[int, ...]:
        return tuple(self.palette[token] for token in self.tokens)

    @property
    def palette_size(self) -> int:
        return len(self.palette)

    def legend(self) -> dict[int, str]:
        return {index: str(token) for token, index in self.palette.items()}

    def to_report(self, check: ProperReport | None = None) -> ColoringReport:
        return ColoringReport(
            params=self.graph.params,
            colors=list(self.colors),
            palette_size=self.palette_size,
            token_legend=self.legend(),
            proper=None if check is None else check.proper,
            violations=[] if check is None else check.violations,
        )


def verify_proper(graph: Graph, coloring: Coloring | Sequence[int]) -> ProperReport:
    """List monochromatic edges.

    Raises:
        CoverageGap: if the colouring does not cover every vertex
    """
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colors) != graph.order:
        raise CoverageGap(f"{len(colors)} colours for {graph.order} vertices")
    with timed(f"verify_proper({graph.describe()})"):
        violations = [(u, v) for u, v in graph.edges if colors[u] == colors[v]]
    if violations:
        logger.warning(f"{len(violations)} monochromatic edges in {graph.describe()}")
    return ProperReport(
        proper=not violations,
        violations=violations,
        colour_count=len(set(colors)),
        edges_checked=graph.size,
    )


# ---------------------------------------------------------------------------
# G_1 and G_2
# ---------------------------------------------------------------------------


def color_G1(x: Sequence[int]) -> ColorToken:
    return CliqueColor(x[0])


def color_G2(x: Sequence[int], k: int) -> ColorToken:
    """Halve the range until the triple straddles the midpoint.

    Triples below the midpoint (z ≤ m) and above it (x > m, shifted down by m)
    share the palette of the next level. Triples with y ≤ m < z and with
    x ≤ m < y take the level's B and C colours.

    Raises:
        BadRange: if x is not a vertex of G_2(2^k)
    """
    if not 1 <= k <= max_bits() or not in_V(2, 1 << k, x):
        raise BadRange(f"{tuple(x)} is not a vertex of G_2(2^{k})")
    a, b, c = x
    size = 1 << k
    level = 1
    while size > 2:
        half = size >> 1
        if c <= half:
            pass
        elif a > half:
            a, b, c = a - half, b - half, c - half
        elif b <= half:
            return G2Color(level, "B")
        else:
            return G2Color(level, "C")
        level += 1
        size = half
    return G2Color(level, "base")


# ---------------------------------------------------------------------------
# G_b(2^n), b >= 3
# ---------------------------------------------------------------------------


def partition_Gb(b: int, n: int, x: Sequence[int]) -> tuple[ColorPart, int | None]:
    """Part of x in V_b(2^n): A, (B, i) for i ∈ [3, 2b−4], or C.

    Raises:
        ClassificationError: if x lands in no part or in more than one
    """
    t = dyadic_split(x[0], x[2 * b - 2]).t
    hits: list[tuple[ColorPart, int | None]] = []
    # 1-based x_i is x[i - 1]
    if x[2 * b - 4] <= t:
        hits.append((ColorPart.A, None))
    for i in range(3, 2 * b - 3):
        if x[i - 1] <= t < x[i]:
            hits.append((ColorPart.B, i))
    if t < x[2]:
        hits.append((ColorPart.C, None))
    if len(hits) != 1:
        raise ClassificationError(f"{tuple(x)} classified as {hits} (n={n}, T={t})")
    return hits[0]


def class_signature(b: int, x: Sequence[int]) -> tuple[int, ...]:
    """Bit i−3 is 1 iff f(x_1, x_i) = f(x_1, x_{i+1}), for i ∈ [3, 2b−2]."""
    head = x[0]
    return tuple(
        int(f_value(head, x[i - 1]) == f_value(head, x[i])) for i in range(3, 2 * b - 1)
    )


def phi_A(b: int, x: Sequence[int]) -> Payload:
    """(f(x_1, x_3), f(x_1, x_4), …, f(x_1, x_{2b−1}))."""
    head = x[0]
    return tuple(f_value(head, x[i]) for i in range(2, 2 * b - 1))


def first_vertex(b: int) -> Payload:
    """Lexicographically first element of V_b(n): (1, 1, 2, 2, …, b−1, b−1, b)."""
    coords: list[int] = []
    for value in range(1, b):
        coords.extend((value, value))
    coords.append(b)
    return tuple(coords)


def _color_A(b: int, n: int, x: Payload) -> GbColor:
    image = phi_A(b, x)
    if not in_V(b - 1, n, image):
        # such vertices have no neighbour in their own class
        image = first_vertex(b - 1)
    return GbColor(ColorPart.A, signature=class_signature(b, x), sub=color_auxiliary(b - 1, n, image))


def color_Gb(b: int, n: int, x: Sequence[int]) -> ColorToken:
    """Colour a vertex of G_b(2^n) by the A / B_i / C partition.

    Raises:
        BadRange: if b < 3, n < b or x is not a vertex of G_b(2^n)
    """
    limit = max_bits()
    if b < 3 or not b <= n <= limit:
        raise BadRange(f"color_Gb needs b >= 3 and b <= n <= {limit}, got b={b}, n={n}")
    x = tuple(x)
    if not in_V(b, 1 << n, x):
        raise BadRange(f"{x} is not a vertex of G_{b}(2^{n})")

    part, index = partition_Gb(b, n, x)
    if part is ColorPart.B:
        return GbColor(ColorPart.B, index=index)
    if part is ColorPart.C:
        mirror = eta(b, n, x)
        if partition_Gb(b, n, mirror)[0] is not ColorPart.A:
            raise ClassificationError(f"reflection of C-vertex {x} is not in A")
        return GbColor(ColorPart.C, sub=_color_A(b, n, mirror))
    return _color_A(b, n, x)


@lru_cache(maxsize=1 << 16)
def color_auxiliary(b: int, n: int, x: Payload) -> ColorToken:
    """Colour a vertex of G_b(n) for any n, padding up to a power of two.

    b = 1 uses the clique colouring, b = 2 the halving scheme on 2^⌈log n⌉, and
    b ≥ 3 the partition recursion on 2^m with m = max(⌈log n⌉, b).
    """
    if b == 1:
        return color_G1(x)
    if b == 2:
        return color_G2(x, max(1, ceil_log2(n)))
    return color_Gb(b, max(ceil_log2(n), b), x)


def palette_bound_Gb(b: int, sub_palette: int) -> int:
    """(2b − 6) + 2^(2b−3) · sub_palette."""
    return (2 * b - 6) + (1 << (2 * b - 3)) * sub_palette


# ---------------------------------------------------------------------------
# Type-graphs
# ---------------------------------------------------------------------------


def typegraph_painter(n: int, tau: OrderType) -> Callable[[Payload], ColorToken]:
    """Per-vertex colour function for G(n, τ).

    The factor with the most blocks is projected out (the first one on ties),
    dualised to primary if needed, and sent to G_{b−1}(n) by the upper map.
    """
    if tau.is_trivial:
        raise TrivialType(f"{tau} is trivial")
    factors = factorize(tau)
    counts = [block_decompose(factor).b for factor in factors]
    chosen = counts.index(max(counts)) + 1
    _, r, s = factor_window(tau, chosen)
    dec = block_decompose(factors[chosen - 1]).primary()
    b, k = dec.b, factors[chosen - 1].width
    logger.debug(f"Colouring G({n},{tau}) through factor {chosen} = {dec.source} (b={b})")

    def paint(xs: Payload) -> ColorToken:
        image = upper_image(dec.s, k, tuple(sorted(xs))[r:s])
        return PipelineColor(chosen, color_auxiliary(b - 1, n, image))

    return paint


def color_typegraph(n: int, tau: OrderType) -> Coloring:
    """Colour G(n, τ) through the upper homomorphism and the G_b palettes.

    Raises:
        TrivialType: for trivial τ
    """
    paint = typegraph_painter(n, tau)
    graph = build_typegraph(n, tau)
    with timed(f"color_typegraph(n={n}, tau={tau})"):
        coloring = Coloring(graph, tuple(paint(xs) for xs in graph.vertices))
    logger.info(f"Coloured {graph.describe()} with {coloring.palette_size} colours")
    return coloring


def color_shift_graph(n: int) -> Coloring:
    """c({i, j}) = f(i, j) on G(n, 132): ⌈log n⌉ colours."""
    graph = build_typegraph(n, sigma(2))
    return Coloring(graph, tuple(ShiftColor(f_value(i, j)) for i, j in graph.vertices))


def color_G1_graph(n: int) -> Coloring:
    graph = build_Gb(1, n)
    return Coloring(graph, tuple(color_G1(x) for x in graph.vertices))


def color_G2_graph(k: int) -> Coloring:
    graph = build_Gb(2, 1 << k)
    return Coloring(graph, tuple(color_G2(x, k) for x in graph.vertices))


def color_Gb_graph(b: int, n: int) -> Coloring:
    """The partition colouring on the whole of G_b(2^n)."""
    graph = build_Gb(b, 1 << n)
    with timed(f"color_Gb_graph(b={b}, n={n})"):
        return Coloring(graph, tuple(color_Gb(b, n, x) for x in graph.vertices))


def color_auxiliary_graph(b: int, n: int) -> Coloring:
    graph = build_Gb(b, n)
    return Coloring(graph, tuple(color_auxiliary(b, n, x) for x in graph.vertices))


def auxiliary_palette_size(b: int, n: int) -> int:
    """Distinct tokens ``color_auxiliary`` uses on V_b(n), without building edges."""
    return len({color_auxiliary(b, n, x) for x in enumerate_V(b, n)})


def paper_upper_bound(tau: OrderType, n: int) -> float | None:
    """2^((b*−2)^2) · log_(b*−2)(n); None where the iterated log is undefined.

    For b* = 2 this is n itself.
    """
    if tau.is_trivial:
        raise TrivialType(f"{tau} is trivial")
    beta = b_star(tau) - 2
    value = iterated_log(beta, n)
    return None if value is None else (1 << (beta * beta)) * value

