"""Order types of set pairs, factorisation and the block algorithm."""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from typegraph.exceptions import BadWidth, InvalidDigit, NotAType, NotIrreducible, TrivialType
from typegraph.models.enums import Polarity

MARKS = (1, 2, 3)
EMPTY_LITERALS = frozenset({"∅", "empty"})

Marks = Sequence[int]


@dataclass(frozen=True)
class OrderType:
    """A finite sequence over {1,2,3}.

    With ``strict`` on (the default) the sequence must be a type, i.e. contain
    as many ones as twos. Block fragments such as ``211121`` are built with
    ``strict=False``.
    """

    digits: tuple[int, ...]
    strict: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        for mark in digits:
            if mark not in MARKS:
                raise InvalidDigit(f"Invalid mark {mark!r}; marks must be 1, 2 or 3")
        if self.strict and digits.count(1) != digits.count(2):
            raise NotAType(
                f"{self} has {digits.count(1)} ones but {digits.count(2)} twos"
            )

    @classmethod
    def parse(cls, text: str, strict: bool = True) -> OrderType:
        return parse_type(text, strict=strict)

    @classmethod
    def empty(cls) -> OrderType:
        return cls(())

    def __str__(self) -> str:
        return "".join(map(str, self.digits)) if self.digits else "∅"

    def __repr__(self) -> str:
        return f"OrderType('{self}')"

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, index: slice) -> OrderType:
        return OrderType(self.digits[index], strict=False)

    def __add__(self, other: OrderType) -> OrderType:
        return OrderType(self.digits + other.digits, strict=self.strict and other.strict)

    @property
    def length(self) -> int:
        """ℓ, the size of the union X ∪ Y."""
        return len(self.digits)

    @cached_property
    def width(self) -> int:
        """k = |X|, the number of ones and threes."""
        return marks_count(self.digits)[0]

    @property
    def ones(self) -> int:
        return self.digits.count(1)

    @property
    def twos(self) -> int:
        return self.digits.count(2)

    @property
    def threes(self) -> int:
        return self.digits.count(3)

    @property
    def is_type(self) -> bool:
        return self.ones == self.twos

    @property
    def is_empty(self) -> bool:
        return not self.digits

    @property
    def is_trivial(self) -> bool:
        """All threes; the empty type counts as trivial."""
        return self.ones == 0 and self.twos == 0

    @property
    def is_primary(self) -> bool:
        return bool(self.digits) and self.digits[0] == 1

    @property
    def is_secondary(self) -> bool:
        return bool(self.digits) and self.digits[0] == 2

    @property
    def polarity(self) -> Polarity:
        if self.is_primary:
            return Polarity.PRIMARY
        if self.is_secondary:
            return Polarity.SECONDARY
        return Polarity.TRIVIAL


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks B_1 … B_b of an irreducible type."""

    source: OrderType
    blocks: tuple[OrderType, ...]
    polarity: Polarity

    @property
    def b(self) -> int:
        return len(self.blocks)

    @cached_property
    def s(self) -> tuple[int, ...]:
        """Prefix sums s(i) = 𝟐(B_1 ⋯ B_i) for i = 1 … b."""
        sums: list[int] = []
        total = 0
        for block in self.blocks:
            total += marks_count(block.digits)[1]
            sums.append(total)
        return tuple(sums)

    def primary(self) -> BlockDecomposition:
        """The decomposition of the primary member of {τ, τ′}."""
        if self.polarity is not Polarity.SECONDARY:
            return self
        return BlockDecomposition(
            source=dual(self.source),
            blocks=tuple(dual(block) for block in self.blocks),
            polarity=Polarity.PRIMARY,
        )

    def __str__(self) -> str:
        return format_blocks(self)


def _as_marks(seq: Iterable[int] | str) -> tuple[int, ...]:
    if isinstance(seq, str):
        return tuple(int(ch) for ch in seq)
    return tuple(seq)


def parse_type(text: str, strict: bool = True) -> OrderType:
    """Parse a digit string such as ``"13332"``.

    Raises:
        InvalidDigit: for characters outside 1/2/3 or an empty string
        NotAType: for unbalanced ones/twos when strict
    """
    text = text.strip()
    if text in EMPTY_LITERALS:
        return OrderType.empty()
    if not text:
        raise InvalidDigit("Empty string; use '∅' for the empty type")
    bad = sorted({ch for ch in text if ch not in "123"})
    if bad:
        raise InvalidDigit(f"Invalid characters {''.join(bad)!r} in {text!r}")
    return OrderType(tuple(int(ch) for ch in text), strict=strict)


def marks_count(seq: Iterable[int] | str) -> tuple[int, int]:
    """Return (𝟏(seq), 𝟐(seq)): ones plus threes, twos plus threes."""
    marks = _as_marks(seq)
    threes = marks.count(3)
    return marks.count(1) + threes, marks.count(2) + threes


def dual(tau: OrderType) -> OrderType:
    """Swap ones and twos."""
    swap = {1: 2, 2: 1, 3: 3}
    return OrderType(tuple(swap[mark] for mark in tau.digits), strict=tau.strict)


def concat(tau: OrderType, other: OrderType) -> OrderType:
    return tau + other


def factorize(tau: OrderType) -> list[OrderType]:
    """Split a type into its irreducible factors.

    A factor ends after every prefix in which ones and twos balance.
    """
    if tau.is_empty:
        raise NotAType("The empty type has no factorisation")
    if not tau.is_type:
        raise NotAType(f"{tau} is not a type")

    factors: list[OrderType] = []
    balance = 0
    start = 0
    for position, mark in enumerate(tau.digits, start=1):
        if mark == 1:
            balance += 1
        elif mark == 2:
            balance -= 1
        if balance == 0:
            factors.append(OrderType(tau.digits[start:position]))
            start = position
    return factors


def is_irreducible(tau: OrderType) -> bool:
    return len(factorize(tau)) == 1


def _decompose_primary(tau: OrderType) -> list[OrderType]:
    digits = tau.digits
    size = len(digits)

    cursor = 0
    while cursor < size and digits[cursor] == 1:
        cursor += 1
    blocks = [digits[:cursor]]

    while cursor < size:
        need = marks_count(blocks[-1])[0]
        if need == 0:
            raise NotIrreducible(f"Block algorithm stalled on {tau} at position {cursor}")
        start = cursor
        got = 0
        while cursor < size and got < need:
            if digits[cursor] != 1:
                got += 1
            cursor += 1
        if got < need:
            raise NotIrreducible(f"{tau}: ran out of marks while building block {len(blocks) + 1}")
        # only ones keep 𝟐 unchanged
        while cursor < size and digits[cursor] == 1:
            cursor += 1
        blocks.append(digits[start:cursor])

    return [OrderType(block, strict=False) for block in blocks]


def block_decompose(tau: OrderType) -> BlockDecomposition:
    """Run the block algorithm on an irreducible type.

    Secondary types are dualised, decomposed and dualised back block by block.

    Raises:
        NotIrreducible: when tau is reducible (or empty)
    """
    if tau.is_empty or not is_irreducible(tau):
        raise NotIrreducible(f"{tau} is not irreducible")

    if tau.is_trivial:
        return BlockDecomposition(tau, (OrderType(tau.digits, strict=False),), Polarity.TRIVIAL)
    if tau.is_secondary:
        primary = block_decompose(dual(tau))
        return BlockDecomposition(
            source=tau,
            blocks=tuple(dual(block) for block in primary.blocks),
            polarity=Polarity.SECONDARY,
        )
    return BlockDecomposition(tau, tuple(_decompose_primary(tau)), Polarity.PRIMARY)


def sigma(k: int) -> OrderType:
    """σ_k = 1 3…3 2 with k−1 threes."""
    if k < 2:
        raise BadWidth(f"sigma requires k >= 2, got {k}")
    return OrderType((1,) + (3,) * (k - 1) + (2,))


def block_count(tau: OrderType) -> int:
    return block_decompose(tau).b


def factor_block_counts(tau: OrderType) -> list[int]:
    """b_i for each irreducible factor ρ_i."""
    return [block_count(factor) for factor in factorize(tau)]


def b_star(tau: OrderType) -> int:
    return max(factor_block_counts(tau))


def growth_order(tau: OrderType) -> int:
    """β = b* − 2 with χ(G(n, τ)) = Θ(log_(β) n).

    Raises:
        TrivialType: trivial types have no type-graph
    """
    if tau.is_trivial:
        raise TrivialType(f"{tau} is trivial")
    return b_star(tau) - 2


def format_blocks(dec: BlockDecomposition) -> str:
    """Spaced notation, e.g. ``11 211121 212122 22``."""
    return " ".join(str(block) for block in dec.blocks)
