"""Unit tests for the dyadic split and the reflection η."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from typegraph.colorings import color_G2, color_Gb
from typegraph.dyadic import (
    DyadicSplit,
    ceil_log2,
    dyadic_split,
    eta,
    f_value,
    iterated_log,
    max_bits,
    q_value,
)
from typegraph.exceptions import BadRange
from typegraph.graphs import adjacent_Gb, build_Gb, in_V
from typegraph.utils.settings import reset_settings


def brute_force_split(x: int, y: int) -> list[tuple[int, int]]:
    """Every (f, q), q odd, with (q−1)2^(f−1) < x ≤ q2^(f−1) < y ≤ (q+1)2^(f−1)."""
    found = []
    for f in range(1, y.bit_length() + 2):
        unit = 1 << (f - 1)
        for q in range(1, y // unit + 2, 2):
            if (q - 1) * unit < x <= q * unit < y <= (q + 1) * unit:
                found.append((f, q))
    return found


class TestDyadicSplit:
    @pytest.mark.parametrize(
        ("x", "y", "f", "q"), [(1, 2, 1, 1), (3, 6, 3, 1), (5, 6, 1, 5), (4, 5, 3, 1), (7, 8, 1, 7)]
    )
    def test_examples(self, x, y, f, q):
        assert dyadic_split(x, y) == DyadicSplit(f=f, q=q)

    def test_matches_brute_force_exhaustively(self):
        for y in range(2, 257):
            for x in range(1, y):
                split = dyadic_split(x, y)
                assert brute_force_split(x, y) == [(split.f, split.q)], (x, y)

    @given(st.integers(1, 2**40), st.integers(1, 2**20))
    def test_split_contains_pair(self, x, gap):
        split = dyadic_split(x, x + gap)
        assert split.q % 2 == 1
        assert split.contains(x, x + gap)
        assert split.t_minus < split.t < split.t_plus

    @given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 10**6))
    def test_f_is_monotone(self, a, b, c):
        x, y, z = sorted({a, a + b, a + b + c})
        assert f_value(x, y) <= f_value(x, z)
        assert f_value(y, z) <= f_value(x, z)

    def test_accessors_agree(self):
        assert f_value(3, 6) == 3
        assert q_value(5, 6) == 5

    @pytest.mark.parametrize(("x", "y"), [(3, 3), (0, 1), (5, 2), (1, 2**63)])
    def test_bad_range(self, x, y):
        with pytest.raises(BadRange):
            dyadic_split(x, y)


class TestSplitLemmas:
    """Exhaustive checks of how f and q behave along a fixed left end."""

    def test_f_grows_with_the_right_end(self):
        for x in range(1, 128):
            for y in range(x + 1, 129):
                for z in range(y, 129):
                    assert f_value(x, y) <= f_value(x, z), (x, y, z)

    def test_equal_f_means_equal_q_and_same_block(self):
        for x in range(1, 128):
            for y in range(x + 1, 129):
                split = dyadic_split(x, y)
                for z in range(y, 129):
                    if f_value(x, z) != split.f:
                        continue
                    assert q_value(x, z) == split.q, (x, y, z)
                    assert z <= split.t_plus, (x, y, z)

    def test_equal_f_survives_moving_the_left_end_down(self):
        for x in range(1, 64):
            for y in range(x + 1, 65):
                f = f_value(x, y)
                for z in range(y, 65):
                    if f_value(x, z) != f:
                        continue
                    for t in range(1, x + 1):
                        assert f_value(t, y) == f_value(t, z), (t, x, y, z)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_reflection_of_the_ground_set(self, n):
        top = 1 << n
        for x in range(1, top):
            for y in range(x + 1, top + 1):
                f, q = f_value(x, y), q_value(x, y)
                assert 1 <= f <= n
                mirrored = (top + 1 - y, top + 1 - x)
                assert f_value(*mirrored) == f, (x, y)
                assert q_value(*mirrored) == (1 << (n + 1 - f)) - q, (x, y)


class TestEta:
    def test_reflection(self):
        assert eta(2, 2, (1, 2, 3)) == (2, 3, 4)
        assert eta(1, 3, (3,)) == (6,)

    def test_wrong_length(self):
        with pytest.raises(BadRange):
            eta(2, 2, (1, 2))

    def test_out_of_range(self):
        with pytest.raises(BadRange):
            eta(2, 2, (1, 2, 5))

    @pytest.mark.parametrize(("b", "n"), [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
    def test_automorphism(self, b, n):
        graph = build_Gb(b, 1 << n)
        images = [eta(b, n, x) for x in graph.vertices]
        assert all(in_V(b, 1 << n, image) for image in images)
        assert len(set(images)) == graph.order
        for u, v in graph.edges:
            assert adjacent_Gb(images[u], images[v])
        mapped = {
            frozenset((graph.index_of(images[u]), graph.index_of(images[v])))
            for u, v in graph.edges
        }
        assert len(mapped) == graph.size


class TestLogs:
    @pytest.mark.parametrize(("n", "expected"), [(1, 0), (2, 1), (3, 2), (5, 3), (16, 4), (17, 5)])
    def test_ceil_log2(self, n, expected):
        assert ceil_log2(n) == expected

    def test_ceil_log2_rejects_zero(self):
        with pytest.raises(BadRange):
            ceil_log2(0)

    def test_iterated_log(self):
        assert iterated_log(0, 5) == 5
        assert iterated_log(1, 8) == pytest.approx(3)
        assert iterated_log(2, 16) == pytest.approx(2)
        assert iterated_log(2, 3) is None
        assert iterated_log(1, 0.5) is None


class TestBitLimit:
    @pytest.fixture
    def four_bits(self, monkeypatch):
        monkeypatch.setenv("TYPEGRAPH_DYADIC_MAX_N", "4")
        reset_settings()

    def test_default_limit(self):
        assert max_bits() == 62

    def test_split_follows_the_setting(self, four_bits):
        assert max_bits() == 4
        assert dyadic_split(1, 16) == DyadicSplit(f=4, q=1)
        with pytest.raises(BadRange, match="2\\^4"):
            dyadic_split(1, 17)

    def test_eta_follows_the_setting(self, four_bits):
        assert eta(1, 4, (1,)) == (16,)
        with pytest.raises(BadRange):
            eta(1, 5, (1,))

    def test_colourings_follow_the_setting(self, four_bits):
        assert color_G2((1, 2, 3), 4) is not None
        with pytest.raises(BadRange):
            color_G2((1, 2, 3), 5)
        with pytest.raises(BadRange):
            color_Gb(3, 5, (1, 1, 2, 2, 3))
