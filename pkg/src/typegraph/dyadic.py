"""Binary-expansion helpers: the dyadic split (f, q) and the reflection η.

For 1 ≤ x < y there is exactly one pair (f, q), q odd, with

    (q−1)·2^(f−1) < x ≤ q·2^(f−1) < y ≤ (q+1)·2^(f−1).

f−1 is the most significant bit in which x−1 and y−1 differ and q is the
common high part of x−1 with a one appended, so both come out of a single
XOR. Arguments are limited to `dyadic_max_n` bits (62 by default).
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from typegraph.exceptions import BadRange
from typegraph.utils.settings import get_settings


def max_bits() -> int:
    """Largest exponent n for which 2^n is accepted as a ground set size."""
    return get_settings().dyadic_max_n


@dataclass(frozen=True)
class DyadicSplit:
    f: int
    q: int

    @property
    def t_minus(self) -> int:
        return (self.q - 1) << (self.f - 1)

    @property
    def t(self) -> int:
        return self.q << (self.f - 1)

    @property
    def t_plus(self) -> int:
        return (self.q + 1) << (self.f - 1)

    def contains(self, x: int, y: int) -> bool:
        """T⁻ < x ≤ T < y ≤ T⁺."""
        return self.t_minus < x <= self.t < y <= self.t_plus


def _check_pair(x: int, y: int) -> None:
    if not 1 <= x < y:
        raise BadRange(f"dyadic split needs 1 <= x < y, got x={x}, y={y}")
    limit = max_bits()
    if y > 1 << limit:
        raise BadRange(f"y={y} exceeds 2^{limit}")


def dyadic_split(x: int, y: int) -> DyadicSplit:
    """Return the unique (f, q) for the pair x < y."""
    _check_pair(x, y)
    low, high = x - 1, y - 1
    f = (low ^ high).bit_length()
    q = ((low >> f) << 1) | 1
    return DyadicSplit(f=f, q=q)


def f_value(x: int, y: int) -> int:
    """f(x, y) without building a DyadicSplit; no range check."""
    return ((x - 1) ^ (y - 1)).bit_length()


def q_value(x: int, y: int) -> int:
    return (((x - 1) >> f_value(x, y)) << 1) | 1


def eta(b: int, n: int, x: Sequence[int]) -> tuple[int, ...]:
    """Reflect a vertex of G_b(2^n): coordinates become 2^n+1−x_i in reverse order."""
    if len(x) != 2 * b - 1:
        raise BadRange(f"expected {2 * b - 1} coordinates, got {len(x)}")
    limit = max_bits()
    if not 0 <= n <= limit:
        raise BadRange(f"n={n} outside [0, {limit}]")
    top = 1 << n
    if any(not 1 <= coord <= top for coord in x):
        raise BadRange(f"{tuple(x)} has coordinates outside [1, {top}]")
    return tuple(top + 1 - coord for coord in reversed(x))


def ceil_log2(n: int) -> int:
    """⌈log₂ n⌉ for n ≥ 1."""
    if n < 1:
        raise BadRange(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def iterated_log(t: int, n: float) -> float | None:
    """log_(t)(n); None unless every value along the chain is at least 1."""
    value = float(n)
    if value < 1:
        return None
    for _ in range(t):
        value = math.log2(value)
        if value < 1:
            return None
    return value
