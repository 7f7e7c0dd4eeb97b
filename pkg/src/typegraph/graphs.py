"""Type-graphs G(n, τ), auxiliary graphs G_b(n) and their exports."""
from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Any, Protocol, TextIO

import networkx as nx
from loguru import logger

from typegraph.exceptions import (
    DimensionMismatch,
    GraphTooLarge,
    TooSmall,
    TrivialType,
    TypeGraphError,
    WidthMismatch,
)
from typegraph.models.enums import GraphKind
from typegraph.models.schemas import GraphDump
from typegraph.order_types import OrderType, dual
from typegraph.utils.logging import timed
from typegraph.utils.settings import get_settings

Payload = tuple[int, ...]
Edge = tuple[int, int]


class AdjacencyView(Protocol):
    """Anything that can answer membership and adjacency questions about payloads."""

    @property
    def params(self) -> dict[str, Any]: ...

    def has_vertex(self, payload: Payload) -> bool: ...

    def is_adjacent(self, a: Payload, b: Payload) -> bool: ...


@dataclass(frozen=True, eq=False)
class Graph:
    """An immutable graph: payloads in enumeration order plus sorted index pairs."""

    kind: GraphKind
    params: dict[str, Any]
    vertices: tuple[Payload, ...]
    edges: tuple[Edge, ...] = field(repr=False)

    def __post_init__(self) -> None:
        size = len(self.vertices)
        for u, v in self.edges:
            if u == v:
                raise TypeGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < size and 0 <= v < size):
                raise TypeGraphError(f"edge ({u}, {v}) out of range for {size} vertices")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], **params: Any) -> Graph:
        """A plain graph on payloads (0,), (1,), …; used for small fixtures."""
        canonical = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return cls(
            kind=GraphKind.GENERIC,
            params={"order": order, **params},
            vertices=tuple((i,) for i in range(order)),
            edges=tuple(canonical),
        )

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> dict[Payload, int]:
        return {payload: i for i, payload in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in self.vertices]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(items) for items in neighbours)

    def index_of(self, payload: Payload) -> int:
        return self.index[tuple(payload)]

    def neighbours(self, i: int) -> frozenset[int]:
        return self.adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def has_vertex(self, payload: Payload) -> bool:
        return tuple(payload) in self.index

    def is_adjacent(self, a: Payload, b: Payload) -> bool:
        i = self.index.get(tuple(a))
        j = self.index.get(tuple(b))
        return i is not None and j is not None and self.has_edge(i, j)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges)
        return g

    def describe(self) -> str:
        details = ", ".join(f"{key}={value}" for key, value in self.params.items())
        return f"{self.kind.value}({details})"


def _merge_pattern(xs: Payload, ys: Payload) -> tuple[int, ...]:
    """Order type of two sorted integer tuples by a linear merge."""
    out = []
    i = j = 0
    while i < len(xs) and j < len(ys):
        if xs[i] < ys[j]:
            out.append(1)
            i += 1
        elif ys[j] < xs[i]:
            out.append(2)
            j += 1
        else:
            out.append(3)
            i += 1
            j += 1
    out.extend([1] * (len(xs) - i))
    out.extend([2] * (len(ys) - j))
    return tuple(out)


def adjacent_typegraph(tau: OrderType, x_set: Iterable[int], y_set: Iterable[int]) -> bool:
    """True iff τ(X, Y) = τ or τ(Y, X) = τ.

    Raises:
        WidthMismatch: if either set does not have width(τ) elements
    """
    xs = tuple(sorted(x_set))
    ys = tuple(sorted(y_set))
    if len(xs) != tau.width or len(ys) != tau.width:
        raise WidthMismatch(f"|X|={len(xs)}, |Y|={len(ys)} but width({tau})={tau.width}")
    if xs == ys:
        return False
    pattern = _merge_pattern(xs, ys)
    return pattern == tau.digits or pattern == dual(tau).digits


def _is_shift_type(tau: OrderType) -> bool:
    k = tau.width
    shift = (1,) + (3,) * (k - 1) + (2,)
    return tau.digits == shift or dual(tau).digits == shift


def _guard(vertices: int, pairs: int, what: str) -> None:
    settings = get_settings()
    if vertices > settings.max_vertices:
        raise GraphTooLarge(f"{what} has {vertices} vertices (limit {settings.max_vertices})")
    if pairs > settings.max_pairs:
        raise GraphTooLarge(f"{what} needs {pairs} candidate pairs (limit {settings.max_pairs})")


def build_typegraph(n: int, tau: OrderType) -> Graph:
    """Materialise G(n, τ) on the k-subsets of [n] in lexicographic order.

    Raises:
        TrivialType: when τ consists of threes only
        TooSmall: when n < width(τ)
    """
    if tau.is_trivial:
        raise TrivialType(f"{tau} is trivial")
    k = tau.width
    if n < k:
        raise TooSmall(f"n={n} is smaller than width {k}")

    order = comb(n, k)
    shift = _is_shift_type(tau)
    _guard(order, 0 if shift else comb(order, 2), f"G({n},{tau})")

    with timed(f"build_typegraph(n={n}, tau={tau})"):
        vertices = tuple(combinations(range(1, n + 1), k))
        index = {payload: i for i, payload in enumerate(vertices)}
        if shift:
            # edges are exactly {h_1..h_k} - {h_2..h_k+1}
            edges = []
            for run in combinations(range(1, n + 1), k + 1):
                u, v = index[run[:-1]], index[run[1:]]
                edges.append((min(u, v), max(u, v)))
            edges.sort()
        else:
            targets = {tau.digits, dual(tau).digits}
            edges = [
                (i, j)
                for i, j in combinations(range(order), 2)
                if _merge_pattern(vertices[i], vertices[j]) in targets
            ]
    graph = Graph(
        kind=GraphKind.TYPEGRAPH,
        params={"n": n, "type": str(tau)},
        vertices=vertices,
        edges=tuple(edges),
    )
    logger.info(f"Built {graph.describe()}: {graph.order} vertices, {graph.size} edges")
    return graph


def in_W(b: int, n: int, x: Sequence[int]) -> bool:
    """Membership in W_b(n): nondecreasing (2b−1)-tuples over [n]."""
    if len(x) != 2 * b - 1 or not x:
        return False
    if x[0] < 1 or x[-1] > n:
        return False
    return all(x[i] <= x[i + 1] for i in range(len(x) - 1))


def in_V(b: int, n: int, x: Sequence[int]) -> bool:
    """Membership in V_b(n): W_b(n) with strictly increasing odd positions."""
    return in_W(b, n, x) and all(x[p] < x[p + 2] for p in range(0, len(x) - 2, 2))


def _ordered_Gb_edge(x: Sequence[int], y: Sequence[int]) -> bool:
    last = len(x) - 1
    for p in range(0, last + 1, 2):
        if not x[p] < y[p]:
            return False
        if p < last and not y[p] <= x[p + 2]:
            return False
    return all(x[j] <= y[j - 1] for j in range(1, last + 1))


def adjacent_Gb(x: Sequence[int], y: Sequence[int]) -> bool:
    """Edge test of G_b: clauses (i) and (ii) for (x, y) or for (y, x).

    Raises:
        DimensionMismatch: if the tuples have different lengths
    """
    if len(x) != len(y):
        raise DimensionMismatch(f"{tuple(x)} and {tuple(y)} have different dimensions")
    return _ordered_Gb_edge(x, y) or _ordered_Gb_edge(y, x)


def enumerate_V(b: int, n: int) -> Iterator[Payload]:
    """V_b(n) in lexicographic order."""
    for x in combinations_with_replacement(range(1, n + 1), 2 * b - 1):
        if all(x[p] < x[p + 2] for p in range(0, 2 * b - 3, 2)):
            yield x


def _Gb_successors(x: Payload, n: int) -> Iterator[Payload]:
    """All y with (x, y) satisfying clauses (i) and (ii), by bounded coordinate search."""
    last = len(x) - 1
    y: list[int] = []

    def extend(p: int) -> Iterator[Payload]:
        if p > last:
            yield tuple(y)
            return
        low = y[-1] if y else 1
        high = n
        if p % 2 == 0:
            low = max(low, x[p] + 1)
            if p + 2 <= last:
                high = min(high, x[p + 2])
            if y and p >= 2:
                low = max(low, y[p - 2] + 1)
        if p < last:
            low = max(low, x[p + 1])
        for value in range(low, high + 1):
            y.append(value)
            yield from extend(p + 1)
            y.pop()

    yield from extend(0)


def build_Gb(b: int, n: int) -> Graph:
    """Materialise G_b(n) using neighbour enumeration instead of a pairwise scan."""
    if b < 1 or n < 1:
        raise TooSmall(f"G_b(n) needs b >= 1 and n >= 1, got b={b}, n={n}")
    with timed(f"build_Gb(b={b}, n={n})"):
        limit = get_settings().max_vertices
        collected: list[Payload] = []
        for x in enumerate_V(b, n):
            collected.append(x)
            if len(collected) > limit:
                raise GraphTooLarge(f"G_{b}({n}) has more than {limit} vertices")
        vertices = tuple(collected)
        index = {payload: i for i, payload in enumerate(vertices)}
        edges = []
        for i, x in enumerate(vertices):
            for y in _Gb_successors(x, n):
                j = index.get(y)
                if j is not None:
                    edges.append((min(i, j), max(i, j)))
        edges.sort()
    graph = Graph(
        kind=GraphKind.AUXILIARY,
        params={"b": b, "n": n},
        vertices=vertices,
        edges=tuple(edges),
    )
    logger.info(f"Built {graph.describe()}: {graph.order} vertices, {graph.size} edges")
    return graph


@dataclass(frozen=True)
class ImplicitTypeGraph:
    """G(n, τ) answered by predicates only; nothing is materialised."""

    n: int
    tau: OrderType

    @property
    def params(self) -> dict[str, Any]:
        return {"n": self.n, "type": str(self.tau)}

    def has_vertex(self, payload: Payload) -> bool:
        k = self.tau.width
        return (
            len(payload) == k
            and all(1 <= v <= self.n for v in payload)
            and all(payload[i] < payload[i + 1] for i in range(k - 1))
        )

    def is_adjacent(self, a: Payload, b: Payload) -> bool:
        return adjacent_typegraph(self.tau, a, b)


@dataclass(frozen=True)
class ImplicitGbGraph:
    """G_b(n) answered by predicates only."""

    b: int
    n: int

    @property
    def params(self) -> dict[str, Any]:
        return {"b": self.b, "n": self.n}

    def has_vertex(self, payload: Payload) -> bool:
        return in_V(self.b, self.n, payload)

    def is_adjacent(self, a: Payload, b: Payload) -> bool:
        return adjacent_Gb(a, b)


def export_dimacs(graph: Graph, sink: TextIO) -> None:
    """Write DIMACS .col text with 1-based vertex indices."""
    sink.write(f"c {graph.kind.value} {json.dumps(graph.params, sort_keys=True)}\n")
    sink.write(f"p edge {graph.order} {graph.size}\n")
    for u, v in graph.edges:
        sink.write(f"e {u + 1} {v + 1}\n")


def read_dimacs(text: str) -> Graph:
    """Parse DIMACS .col text into a generic graph (payloads are 0-based indices)."""
    order = 0
    edges: list[tuple[int, int]] = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            order = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            logger.warning(f"Skipping unrecognised DIMACS line: {line!r}")
    return Graph.from_edges(order, edges)


def to_json(graph: Graph) -> GraphDump:
    return GraphDump(
        kind=graph.kind,
        params=graph.params,
        vertices=[list(payload) for payload in graph.vertices],
        edges=list(graph.edges),
    )


def odd_girth(graph: Graph) -> int | None:
    """Length of the shortest odd cycle, or None for bipartite graphs.

    From a vertex v on a shortest odd cycle, some edge uw has d(v,u) = d(v,w);
    conversely every such edge closes an odd walk of length 2·d(v,u)+1.
    """
    g = graph.to_networkx()
    best: int | None = None
    for source in g.nodes:
        dist = nx.single_source_shortest_path_length(g, source)
        for u, w in graph.edges:
            du = dist.get(u)
            if du is not None and du == dist.get(w):
                length = 2 * du + 1
                if best is None or length < best:
                    best = length
    return best
