"""Explicit graph homomorphisms between type-graphs and auxiliary graphs.

* ``hom_lower``: G(n, σ_{b−1}) → G(kn, τ) built from the R*-sets of the blocks.
* ``hom_upper``: G(n, τ) → G_{b−1}(n), remembering where blocks start and end.
* ``hom_project``: G(n, τ) → G(n, ρ_i), slicing out one irreducible factor.
* ``hom_reducible``: G(n, σ_{b*−1}) → G(kn, τ), stitching the factor maps side by side.

Maps are materialised as tables over the enumerated source vertices so that
reports can point at concrete vertex indices.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from loguru import logger

from typegraph.exceptions import (
    BadWidth,
    ImageNotVertex,
    IndexOut,
    Reducible,
    SizeMismatch,
    TooSmall,
    TrivialType,
    WidthMismatch,
)
from typegraph.graphs import AdjacencyView, Graph, ImplicitGbGraph, ImplicitTypeGraph, Payload
from typegraph.models.enums import HomKind, Polarity
from typegraph.models.schemas import HomomorphismReport
from typegraph.order_types import (
    BlockDecomposition,
    OrderType,
    block_decompose,
    factorize,
    is_irreducible,
    marks_count,
    parse_type,
    sigma,
)
from typegraph.realizations import RationalSet, extend_left, order_type_of, rank_normalize
from typegraph.utils.logging import timed

CLIQUE_TYPE = parse_type("12")


@dataclass(frozen=True, eq=False)
class VertexMap:
    """A total map between vertex payloads, stored as an explicit table."""

    kind: HomKind
    source: dict[str, Any]
    target: dict[str, Any]
    table: dict[Payload, Payload] = field(repr=False)

    def __call__(self, payload: Iterable[int]) -> Payload:
        return self.table[tuple(payload)]

    def __len__(self) -> int:
        return len(self.table)


def source_type_for(b: int) -> OrderType:
    """Type of the shift-like source graph for a type with b blocks.

    σ_{b−1} for b ≥ 3. For b = 2 the source is the clique on singletons, which
    is G(n, 12).
    """
    if b < 2:
        raise BadWidth(f"no source graph for b={b}")
    return CLIQUE_TYPE if b == 2 else sigma(b - 1)


def _primary_decomposition(tau: OrderType) -> BlockDecomposition:
    if tau.is_trivial:
        raise TrivialType(f"{tau} is trivial")
    if not is_irreducible(tau):
        raise Reducible(f"{tau} is reducible; use the factor maps instead")
    return block_decompose(tau).primary()


def build_R_sets(dec: BlockDecomposition) -> list[frozenset[int]]:
    """R*_0 … R*_b: sets in [k] with τ(R*_i, R*_{i−1}) = B_i.

    Raises:
        SizeMismatch: if a block does not fit its predecessor (block algorithm bug)
    """
    dec = dec.primary()
    if dec.polarity is not Polarity.PRIMARY:
        raise TrivialType(f"{dec.source} has no R-sets")

    chain = [RationalSet(())]
    for block in dec.blocks:
        chain.append(extend_left(block, chain[-1]))
    if len(chain[-1]):
        raise SizeMismatch(f"R_b is not empty for {dec.source}: {chain[-1]}")

    normalised = rank_normalize(chain[:-1])
    r_sets: list[frozenset[int]] = [*normalised, frozenset()]
    total = sum(len(r) for r in r_sets)
    if total != dec.source.width:
        raise SizeMismatch(f"R-set sizes add up to {total}, expected {dec.source.width}")
    for i, block in enumerate(dec.blocks, start=1):
        if order_type_of(r_sets[i], r_sets[i - 1]) != block:
            raise SizeMismatch(f"R*_{i} does not realise block {block} of {dec.source}")
    logger.debug(f"R*-sets for {dec.source}: {[sorted(r) for r in r_sets]}")
    return r_sets


def hom_lower(tau: OrderType, n: int) -> VertexMap:
    """φ({h_1 … h_{b−1}}) = ⋃_i {(h_i − 1)k + j : j ∈ R*_i}.

    Raises:
        TrivialType, Reducible: for unsuitable τ
        TooSmall: when n < b
    """
    dec = _primary_decomposition(tau)
    b, k = dec.b, tau.width
    if n < b:
        raise TooSmall(f"hom_lower needs n >= b = {b}, got {n}")
    r_sets = build_R_sets(dec)
    source = source_type_for(b)

    table: dict[Payload, Payload] = {}
    for hs in combinations(range(1, n + 1), b - 1):
        image: set[int] = set()
        for i, h in enumerate(hs, start=1):
            image.update((h - 1) * k + j for j in r_sets[i])
        table[hs] = tuple(sorted(image))
    return VertexMap(
        kind=HomKind.LOWER,
        source={"n": n, "type": str(source)},
        target={"n": k * n, "type": str(tau)},
        table=table,
    )


def hom_upper(tau: OrderType, x_set: Iterable[int]) -> Payload:
    """(x_{s(1)+1}, x_{s(2)}, x_{s(2)+1}, …, x_{s(b−1)}, x_{s(b−1)+1}).

    Raises:
        WidthMismatch: if |X| != width(τ)
    """
    dec = _primary_decomposition(tau)
    return upper_image(dec.s, tau.width, tuple(sorted(x_set)))


def upper_image(s: Sequence[int], k: int, xs: Payload) -> Payload:
    if len(xs) != k:
        raise WidthMismatch(f"|X|={len(xs)} but width is {k}")
    coords = [xs[s[0]]]
    for s_i in s[1:-1]:
        # 1-based x_{s_i} and x_{s_i + 1}
        coords.append(xs[s_i - 1])
        coords.append(xs[s_i])
    return tuple(coords)


def hom_upper_map(tau: OrderType, n: int) -> VertexMap:
    dec = _primary_decomposition(tau)
    k = tau.width
    table = {xs: upper_image(dec.s, k, xs) for xs in combinations(range(1, n + 1), k)}
    return VertexMap(
        kind=HomKind.UPPER,
        source={"n": n, "type": str(tau)},
        target={"b": dec.b - 1, "n": n},
        table=table,
    )


def factor_window(tau: OrderType, i: int) -> tuple[list[OrderType], int, int]:
    if tau.is_trivial:
        raise TrivialType(f"{tau} is trivial")
    factors = factorize(tau)
    if not 1 <= i <= len(factors):
        raise IndexOut(f"factor index {i} outside [1, {len(factors)}]")
    prefix = OrderType(sum((f.digits for f in factors[: i - 1]), ()))
    r = marks_count(prefix.digits)[0]
    s = r + factors[i - 1].width
    return factors, r, s


def hom_project(tau: OrderType, i: int, x_set: Iterable[int]) -> Payload:
    """{x_{r+1}, …, x_s} with r = 𝟏(ρ_1⋯ρ_{i−1}) and s = 𝟏(ρ_1⋯ρ_i)."""
    _, r, s = factor_window(tau, i)
    xs = tuple(sorted(x_set))
    if len(xs) != tau.width:
        raise WidthMismatch(f"|X|={len(xs)} but width({tau})={tau.width}")
    return xs[r:s]


def hom_project_map(tau: OrderType, i: int, n: int) -> VertexMap:
    factors, r, s = factor_window(tau, i)
    table = {xs: xs[r:s] for xs in combinations(range(1, n + 1), tau.width)}
    return VertexMap(
        kind=HomKind.PROJECT,
        source={"n": n, "type": str(tau)},
        target={"n": n, "type": str(factors[i - 1])},
        table=table,
    )


def hom_reducible(tau: OrderType, n: int) -> VertexMap:
    """ψ(X) = ⋃_i ψ̂_i(X), each factor living in its own window [c_{i−1}n+1, c_i n].

    Raises:
        TrivialType: when τ is trivial
        TooSmall: when n < b*
    """
    if tau.is_trivial:
        raise TrivialType(f"{tau} is trivial")
    factors = factorize(tau)
    counts = [block_decompose(factor).b for factor in factors]
    b_star = max(counts)
    if n < b_star:
        raise TooSmall(f"hom_reducible needs n >= b* = {b_star}, got {n}")

    offsets = [0]
    for factor in factors:
        offsets.append(offsets[-1] + factor.width)

    pieces: list[Callable[[Payload], set[int]]] = []
    for i, (factor, b_i) in enumerate(zip(factors, counts, strict=True), start=1):
        if factor.is_trivial:
            point = offsets[i] * n
            pieces.append(lambda _hs, point=point: {point})
            continue
        inner = hom_lower(factor, n)
        shift = offsets[i - 1] * n
        pieces.append(
            lambda hs, inner=inner, shift=shift, size=b_i - 1: {shift + v for v in inner(hs[:size])}
        )

    table: dict[Payload, Payload] = {}
    for hs in combinations(range(1, n + 1), b_star - 1):
        image: set[int] = set()
        for piece in pieces:
            image |= piece(hs)
        table[hs] = tuple(sorted(image))
    return VertexMap(
        kind=HomKind.REDUCIBLE,
        source={"n": n, "type": str(source_type_for(b_star))},
        target={"n": tau.width * n, "type": str(tau)},
        table=table,
    )


def target_view(m: VertexMap) -> AdjacencyView:
    """Predicate view of a map's target graph."""
    if "b" in m.target:
        return ImplicitGbGraph(b=m.target["b"], n=m.target["n"])
    return ImplicitTypeGraph(n=m.target["n"], tau=parse_type(m.target["type"]))


def verify_homomorphism(
    src: Graph,
    dst: AdjacencyView,
    m: VertexMap | Mapping[Payload, Payload] | Callable[[Payload], Payload],
) -> HomomorphismReport:
    """Check that every source edge lands on a target edge.

    Raises:
        ImageNotVertex: if some image is not a vertex of the target
    """
    apply = m.__getitem__ if isinstance(m, Mapping) else m
    with timed(f"verify_homomorphism({src.describe()})"):
        images: list[Payload] = []
        for payload in src.vertices:
            image = tuple(apply(payload))
            if not dst.has_vertex(image):
                raise ImageNotVertex(f"{payload} -> {image} is not a vertex of {dst.params}")
            images.append(image)

        violations = [
            (u, v) for u, v in src.edges if not dst.is_adjacent(images[u], images[v])
        ]
    report = HomomorphismReport(
        kind=m.kind if isinstance(m, VertexMap) else None,
        params={"source": src.params, "target": dst.params},
        violations=violations,
        collisions=len(images) - len(set(images)),
        edges_checked=src.size,
    )
    if violations:
        logger.warning(f"{len(violations)} edges of {src.describe()} not preserved")
    return report


def chromatic_transfer_ok(src_chi: int, dst_chi: int) -> bool:
    """A homomorphism src → dst forces χ(src) ≤ χ(dst)."""
    return src_chi <= dst_chi
