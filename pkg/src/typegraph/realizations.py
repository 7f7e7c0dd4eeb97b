"""Concrete set pairs realising order types.

Sets of rationals are kept exact with :class:`fractions.Fraction`; a pair of
sets only matters up to the relative order of its elements, so every
construction here is checked by recomputing the order type.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from typegraph.exceptions import BadRange, SizeMismatch
from typegraph.order_types import BlockDecomposition, OrderType, marks_count

Number = int | Fraction


@dataclass(frozen=True)
class RationalSet:
    """A finite set of rationals stored as a strictly increasing tuple."""

    elements: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        elements = tuple(Fraction(value) for value in self.elements)
        for left, right in zip(elements, elements[1:], strict=False):
            if not left < right:
                raise BadRange(f"RationalSet elements must be strictly increasing: {left} >= {right}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def of(cls, values: Iterable[Number | str]) -> RationalSet:
        """Build from any iterable, sorting and removing duplicates."""
        return cls(tuple(sorted({Fraction(value) for value in values})))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __contains__(self, value: object) -> bool:
        return value in self.elements

    @property
    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self.elements)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise BadRange(f"{self} has non-integral elements")
        return tuple(int(value) for value in self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(value) for value in self.elements) + "}"


def _sorted_values(values: Iterable[Number]) -> list[Number]:
    return sorted(values)


def order_type_of(x_set: Iterable[Number], y_set: Iterable[Number]) -> OrderType:
    """τ(X, Y): walk X ∪ Y in increasing order marking 1 (X only), 2 (Y only), 3 (both)."""
    xs = set(x_set)
    ys = set(y_set)
    digits = []
    for value in _sorted_values(xs | ys):
        if value in xs:
            digits.append(3 if value in ys else 1)
        else:
            digits.append(2)
    return OrderType(tuple(digits), strict=False)


def canonical_realization(tau: OrderType) -> tuple[RationalSet, RationalSet]:
    """Realise tau on the ground set [ℓ]."""
    xs = [i for i, mark in enumerate(tau.digits, start=1) if mark in (1, 3)]
    ys = [i for i, mark in enumerate(tau.digits, start=1) if mark in (2, 3)]
    return RationalSet.of(xs), RationalSet.of(ys)


def _spread(count: int, low: Fraction, high: Fraction) -> list[Fraction]:
    step = (high - low) / (count + 1)
    return [low + step * t for t in range(1, count + 1)]


def extend_left(block: OrderType | Sequence[int], y_set: RationalSet) -> RationalSet:
    """Find X with τ(X, Y) = block.

    Marks 2 and 3 consume the next element of Y (3 also puts it in X); each
    run of ones is placed evenly inside the open gap between its neighbouring
    anchors.

    Raises:
        SizeMismatch: if |Y| != 𝟐(block)
    """
    marks = tuple(block.digits if isinstance(block, OrderType) else block)
    ones_threes, twos_threes = marks_count(marks)
    if len(y_set) != twos_threes:
        raise SizeMismatch(f"|Y| = {len(y_set)} but 𝟐({''.join(map(str, marks))}) = {twos_threes}")

    ys = y_set.elements
    result: list[Fraction] = []
    run = 0
    consumed = 0

    def flush(high: Fraction | None) -> None:
        if not run:
            return
        low = ys[consumed - 1] if consumed else None
        if low is None:
            low = high - run - 1 if high is not None else Fraction(0)
        if high is None:
            high = low + run + 1
        result.extend(_spread(run, low, high))

    for mark in marks:
        if mark == 1:
            run += 1
            continue
        flush(ys[consumed])
        run = 0
        if mark == 3:
            result.append(ys[consumed])
        consumed += 1
    flush(None)

    x_set = RationalSet(tuple(result))
    if len(x_set) != ones_threes:
        raise SizeMismatch(f"built {len(x_set)} elements, expected {ones_threes}")
    return x_set


def rank_normalize(sets: Sequence[Iterable[Number]]) -> list[frozenset[int]]:
    """Replace every element by its 1-based rank in the union of all sets."""
    materialised = [set(values) for values in sets]
    union = _sorted_values(set().union(*materialised)) if materialised else []
    rank = {value: position for position, value in enumerate(union, start=1)}
    return [frozenset(rank[value] for value in values) for values in materialised]


def irreducible_inequality_violations(
    tau: OrderType, x_set: Sequence[Number], y_set: Sequence[Number]
) -> list[str]:
    """Failures of x_i < y_i (all i) and x_{i+1} ≤ y_i (i < k) for a primary irreducible tau."""
    xs = _sorted_values(x_set)
    ys = _sorted_values(y_set)
    problems = []
    k = tau.width
    for i in range(k):
        if not xs[i] < ys[i]:
            problems.append(f"x_{i + 1} < y_{i + 1} fails: {xs[i]} >= {ys[i]}")
    for i in range(k - 1):
        if not xs[i + 1] <= ys[i]:
            problems.append(f"x_{i + 2} <= y_{i + 1} fails: {xs[i + 1]} > {ys[i]}")
    return problems


def block_inequality_violations(
    dec: BlockDecomposition, x_set: Sequence[Number], y_set: Sequence[Number]
) -> list[str]:
    """Failures of x_{s(i+1)} < y_{s(i)+1} ≤ x_{s(i+1)+1} for i ∈ [b−2]."""
    xs = _sorted_values(x_set)
    ys = _sorted_values(y_set)
    s = dec.s
    problems = []
    for i in range(1, dec.b - 1):
        s_i, s_next = s[i - 1], s[i]
        # 1-based indices shifted to 0-based
        x_low, y_mid, x_high = xs[s_next - 1], ys[s_i], xs[s_next]
        if not (x_low < y_mid <= x_high):
            problems.append(
                f"i={i}: x_{s_next} < y_{s_i + 1} <= x_{s_next + 1} fails "
                f"({x_low}, {y_mid}, {x_high})"
            )
    if problems:
        logger.debug(f"Block inequalities failed for {dec.source}: {problems}")
    return problems


def rational_set_to_json(values: RationalSet) -> list[str] | list[int]:
    """Integer sets become int arrays, everything else 'p/q' strings."""
    if values.is_integral:
        return list(values.as_ints())
    return [f"{value.numerator}/{value.denominator}" for value in values]


def rational_set_from_json(items: Sequence[str | int]) -> RationalSet:
    return RationalSet.of(Fraction(item) for item in items)
