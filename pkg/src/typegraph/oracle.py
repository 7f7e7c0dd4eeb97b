"""Exact chromatic numbers at desk scale.

An odd cycle lifts the clique bound to three; from there k-colourability is
decided for k up to the best known colouring. The backtracking walks a fixed
colex vertex order, opens new colours in order and remembers failed states up
to twin and colour symmetry.
"""
from __future__ import annotations

import sys
import time
from collections import Counter
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
from loguru import logger

from typegraph.colorings import Coloring, verify_proper
from typegraph.exceptions import BudgetExceeded, CoverageGap, TypeGraphError
from typegraph.graphs import Graph
from typegraph.models.schemas import ChromaticReport
from typegraph.utils.settings import get_settings

CLOCK_CHECK_EVERY = 1024


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    witness: Coloring
    nodes_explored: int
    elapsed_ms: float
    lower: int
    upper: int

    def to_report(self) -> ChromaticReport:
        return ChromaticReport(
            chi=self.chi,
            lower=self.lower,
            upper=self.upper,
            colors=list(self.witness.colors),
            nodes_explored=self.nodes_explored,
            elapsed_ms=round(self.elapsed_ms, 3),
        )


def greedy_coloring(graph: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit colouring along ``order`` (natural order when omitted).

    Raises:
        CoverageGap: if order is not a permutation of the vertex indices
    """
    sequence = list(range(graph.order)) if order is None else list(order)
    if sorted(sequence) != list(range(graph.order)):
        raise CoverageGap(f"order is not a permutation of {graph.order} vertices")
    colors = [-1] * graph.order
    for v in sequence:
        taken = {colors[u] for u in graph.neighbours(v)}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring.from_colors(graph, colors)


def dsatur_order(graph: Graph) -> list[int]:
    """Vertices in the order the DSATUR heuristic colours them.

    Highest saturation first, then highest degree, then lowest index.
    """
    neighbour_colors: list[set[int]] = [set() for _ in range(graph.order)]
    order: list[int] = []
    uncolored = set(range(graph.order))
    while uncolored:
        v = max(uncolored, key=lambda u: (len(neighbour_colors[u]), graph.degree(u), -u))
        c = 0
        while c in neighbour_colors[v]:
            c += 1
        order.append(v)
        uncolored.remove(v)
        for u in graph.neighbours(v):
            if u in uncolored:
                neighbour_colors[u].add(c)
    return order


def search_order(graph: Graph) -> list[int]:
    """Vertices in colex order of their payloads, ties by index.

    For k-subsets of [n] every prefix is the vertex set of the same graph on a
    smaller ground set.
    """
    return sorted(range(graph.order), key=lambda v: (graph.vertices[v][::-1], v))


def clique_lower_bound(graph: Graph) -> int:
    """Size of a clique grown greedily in decreasing-degree order."""
    clique: list[int] = []
    for v in sorted(range(graph.order), key=lambda u: (-graph.degree(u), u)):
        if all(graph.has_edge(v, u) for u in clique):
            clique.append(v)
    return len(clique)


@lru_cache(maxsize=None)
def _bits(mask: int) -> tuple[int, ...]:
    return tuple(c for c in range(mask.bit_length()) if mask >> c & 1)


class _TwinClasses:
    """Per depth d: the uncoloured vertices that have a coloured neighbour,
    grouped into false twins of the graph induced on ``order[d:]``.

    Depths are computed on first use, so a search that stops early never pays
    for the rest of the order.
    """

    def __init__(self, graph: Graph, order: Sequence[int]):
        self.graph = graph
        self.order = order
        self.remaining = set(order)
        self.frontier: set[int] = set()
        self.levels: list[tuple[tuple[int, ...], ...]] = []

    def __getitem__(self, d: int) -> tuple[tuple[int, ...], ...]:
        while len(self.levels) <= d:
            self._advance()
        return self.levels[d]

    def _advance(self) -> None:
        depth = len(self.levels)
        if depth:
            done = self.order[depth - 1]
            self.remaining.discard(done)
            self.frontier.discard(done)
            self.frontier.update(u for u in self.graph.neighbours(done) if u in self.remaining)
        groups: dict[frozenset[int], list[int]] = {}
        for v in sorted(self.frontier):
            groups.setdefault(self.graph.neighbours(v) & self.remaining, []).append(v)
        self.levels.append(tuple(tuple(members) for members in groups.values()))


class _Search:
    """k-colourability along a fixed vertex order.

    Forward checking cuts a branch once an uncoloured vertex sees all k colours.
    A colour that every later neighbour already forbids is tried alone, since
    any completion can be recoloured to use it. Failed states are cached under
    a key that ignores the order inside twin classes and, partly, the names of
    the colours.
    """

    def __init__(
        self,
        graph: Graph,
        order: Sequence[int],
        budget_nodes: int,
        deadline: float,
        upper: int,
    ):
        self.graph = graph
        self.order = list(order)
        position = [0] * graph.order
        for d, v in enumerate(self.order):
            position[v] = d
        self.later = [
            tuple(u for u in sorted(graph.neighbours(v)) if position[u] > position[v])
            for v in range(graph.order)
        ]
        self.classes = _TwinClasses(graph, self.order)
        self.budget_nodes = budget_nodes
        self.deadline = deadline
        self.upper = upper
        self.nodes = 0
        self.cache_hits = 0

    def _tick(self, k: int) -> None:
        self.nodes += 1
        over_nodes = self.nodes > self.budget_nodes
        if over_nodes or (self.nodes % CLOCK_CHECK_EVERY == 0 and time.monotonic() > self.deadline):
            reason = "node" if over_nodes else "time"
            logger.info(f"Exact search hit the {reason} budget while testing k={k}")
            raise BudgetExceeded(lower=k, upper=self.upper, nodes_explored=self.nodes)

    def _state_key(self, d: int, masks: list[int], k: int) -> Hashable:
        classes = self.classes[d]
        seen = Counter(masks[v] for members in classes for v in members)
        # rename colours by how often and in how large masks they occur
        weight = [(0, 0)] * k
        for mask, count in seen.items():
            size = mask.bit_count()
            for c in _bits(mask):
                hits, volume = weight[c]
                weight[c] = (hits + count, volume + count * size)
        ranking = sorted(range(k), key=lambda c: (-weight[c][0], -weight[c][1], c))
        rename = [0] * k
        for new, old in enumerate(ranking):
            rename[old] = new
        renamed = {mask: sum(1 << rename[c] for c in _bits(mask)) for mask in seen}
        return d, tuple(tuple(sorted(renamed[masks[v]] for v in members)) for members in classes)

    def colorable(self, k: int) -> list[int] | None:
        size = self.graph.order
        order, later = self.order, self.later
        full = (1 << k) - 1
        colors = [-1] * size
        # counts[v][c]: coloured earlier neighbours of v with colour c
        counts = [[0] * k for _ in range(size)]
        masks = [0] * size
        failed: set[Hashable] = set()

        def assign(v: int, c: int) -> bool:
            colors[v] = c
            bit = 1 << c
            ok = True
            for u in later[v]:
                counts[u][c] += 1
                if counts[u][c] == 1:
                    masks[u] |= bit
                    if masks[u] == full:
                        ok = False
            return ok

        def unassign(v: int, c: int) -> None:
            colors[v] = -1
            bit = 1 << c
            for u in later[v]:
                counts[u][c] -= 1
                if counts[u][c] == 0:
                    masks[u] &= ~bit

        def search(d: int, opened: int) -> bool:
            self._tick(k)
            if d == size:
                return True
            key = self._state_key(d, masks, k)
            if key in failed:
                self.cache_hits += 1
                return False
            v = order[d]
            allowed = full & ~masks[v]
            shared = allowed
            for u in later[v]:
                shared &= masks[u]
            if shared:
                candidates = [(shared & -shared).bit_length() - 1]
            else:
                candidates = [c for c in range(min(opened + 1, k)) if allowed >> c & 1]
            for c in candidates:
                if assign(v, c) and search(d + 1, max(opened, c + 1)):
                    return True
                unassign(v, c)
            failed.add(key)
            return False

        return colors if search(0, 0) else None


def _checked_hint(graph: Graph, hint: Coloring) -> Coloring:
    if hint.graph.vertices != graph.vertices:
        raise CoverageGap("upper_hint colours a different vertex set")
    check = verify_proper(graph, hint.colors)
    if not check.proper:
        raise TypeGraphError(f"upper_hint is not proper: {len(check.violations)} violated edges")
    return Coloring.from_colors(graph, hint.colors)


def exact_chromatic(
    graph: Graph,
    budget_nodes: int | None = None,
    budget_ms: int | None = None,
    upper_hint: Coloring | None = None,
) -> ChromaticResult:
    """χ(G) with a witness colouring.

    ``upper_hint`` is any known proper colouring of the same vertices; its
    palette caps the search from above.

    Raises:
        BudgetExceeded: carrying the proven lower bound and the best upper bound
    """
    settings = get_settings()
    if budget_nodes is None:
        budget_nodes = settings.budget_nodes
    if budget_ms is None:
        budget_ms = settings.budget_ms
    started = time.monotonic()

    if graph.order == 0:
        return ChromaticResult(0, Coloring(graph, ()), 0, 0.0, 0, 0)

    known = [greedy_coloring(graph, dsatur_order(graph)), greedy_coloring(graph)]
    if upper_hint is not None:
        known.append(_checked_hint(graph, upper_hint))
    best = min(known, key=lambda c: c.palette_size)
    upper = best.palette_size
    lower = clique_lower_bound(graph)
    if lower < 3 <= upper and not nx.is_bipartite(graph.to_networkx()):
        # an odd cycle rules out two colours
        lower = 3
    logger.debug(f"{graph.describe()}: {lower} <= chi <= {upper} before search")

    # one stack frame per coloured vertex
    sys.setrecursionlimit(max(sys.getrecursionlimit(), graph.order + 200))
    search = _Search(graph, search_order(graph), budget_nodes, started + budget_ms / 1000, upper)
    witness = best
    chi = upper
    for k in range(lower, upper):
        colors = search.colorable(k)
        if colors is not None:
            chi = k
            witness = Coloring.from_colors(graph, colors)
            break

    elapsed = (time.monotonic() - started) * 1000
    check = verify_proper(graph, witness)
    if not check.proper or witness.palette_size != chi:
        raise TypeGraphError(f"witness for chi={chi} is not a proper {chi}-colouring")
    logger.debug(f"exact_chromatic({graph.describe()}) executed in {elapsed:.1f} ms")
    logger.info(
        f"chi({graph.describe()}) = {chi} after {search.nodes} nodes, "
        f"{search.cache_hits} cached refutations"
    )
    return ChromaticResult(
        chi=chi,
        witness=witness,
        nodes_explored=search.nodes,
        elapsed_ms=elapsed,
        lower=lower,
        upper=upper,
    )
