import itertools
import random

import pytest

from rsbf.actions import (
    MuAction,
    SplitOutcome,
    break_levels,
    fresh_actions,
    mu_sequence_closed_form,
    mu_sequence_definitional,
    split_action,
    split_identity_check,
)
from rsbf.boolfn import RSFunctionSpec


def action_patterns(max_top, max_degree=4):
    """Generators (1, ..., top) with top <= max_top and degree <= max_degree."""
    out = []
    for top in range(2, max_top + 1):
        for k in range(0, max_degree - 1):
            for rest in itertools.combinations(range(2, top), k):
                out.append((1,) + rest + (top,))
    return out


class TestMuSequences:
    def test_level_one_is_all_ones(self):
        for pattern in [(1, 2), (1, 3, 5), (1, 2, 4, 6)]:
            for n in range(pattern[-1] + 1, pattern[-1] + 4):
                full = (1 << (1 << (n - 1))) - 1
                assert mu_sequence_definitional(pattern, 1, n) == full
                assert mu_sequence_closed_form(pattern, 1, n) == full

    def test_quadratic_closed_form(self):
        # level v of (1, a), v > 1: (0_{2^(n-v)} 1_{2^(n-v)})_{2^(v-2)}
        for a in range(2, 7):
            for n in range(a + 1, 11):
                for v in range(2, a + 1):
                    run = 1 << (n - v)
                    block = ((1 << run) - 1) << run
                    expect = 0
                    for b in range(1 << (v - 2)):
                        expect |= block << (b * run * 2)
                    assert mu_sequence_closed_form((1, a), v, n) == expect

    def test_quartic_middle_band(self):
        # (1,i,j,k), k-j+1 < v <= k-i+1:
        # (0_{2^(n+k-j-v)} (0_{2^(n-v)} 1_{2^(n-v)})_{2^(k-j-1)})_{2^(v+j-k-2)}
        for i, j, k in itertools.combinations(range(2, 7), 3):
            pattern = (1, i, j, k)
            for n in range(k + 1, 11):
                for v in range(k - j + 2, k - i + 2):
                    run = 1 << (n - v)
                    x = ((1 << run) - 1) << run
                    xlen = run * 2
                    y = 0
                    for b in range(1 << (k - j - 1)):
                        y |= x << (b * xlen)
                    y <<= 1 << (n + k - j - v)
                    ylen = 1 << (n + k - j - v + 1)
                    expect = 0
                    for b in range(1 << (v + j - k - 2)):
                        expect |= y << (b * ylen)
                    assert mu_sequence_closed_form(pattern, v, n) == expect, (
                        pattern, v, n,
                    )

    def test_closed_form_equals_definitional(self):
        for pattern in action_patterns(5):
            for n in range(pattern[-1] + 1, 11):
                for v in range(1, pattern[-1] + 1):
                    assert mu_sequence_definitional(
                        pattern, v, n
                    ) == mu_sequence_closed_form(pattern, v, n), (pattern, v, n)

    def test_length(self):
        for pattern in [(1, 3), (1, 2, 6)]:
            for n in range(pattern[-1] + 1, 10):
                for v in range(1, pattern[-1] + 1):
                    m = mu_sequence_definitional(pattern, v, n)
                    assert m < (1 << (1 << (n - 1)))

    def test_level_out_of_range(self):
        with pytest.raises(ValueError):
            mu_sequence_definitional((1, 4), 5, 6)
        with pytest.raises(ValueError):
            mu_sequence_closed_form((1, 4), 0, 6)

    def test_involution(self):
        rng = random.Random(3)
        for pattern in [(1, 3), (1, 2, 5)]:
            n = pattern[-1] + 2
            mask = mu_sequence_closed_form(pattern, 2, n)
            table = rng.getrandbits(1 << (n - 1))
            assert (table ^ mask) ^ mask == table

    def test_complement_weight_law(self):
        rng = random.Random(4)
        for pattern in [(1, 2), (1, 4), (1, 3, 5)]:
            for n in range(pattern[-1] + 1, pattern[-1] + 4):
                half = 1 << (n - 1)
                mask = mu_sequence_closed_form(pattern, 1, n)
                for _ in range(8):
                    table = rng.getrandbits(half)
                    assert (table ^ mask).bit_count() == half - table.bit_count()


class TestBreakLevels:
    def test_quadratic(self):
        assert break_levels((1, 4)) == {2}
        assert break_levels((1, 2)) == {2}

    def test_cubic(self):
        for r in range(2, 5):
            for s in range(r + 1, 7):
                assert break_levels((1, r, s)) == {2, s - r + 2}

    def test_quartic(self):
        for i, j, k in itertools.combinations(range(2, 7), 3):
            assert break_levels((1, i, j, k)) == {2, k - j + 2, k - i + 2}


class TestSplitAction:
    def test_level_one_complements_both(self):
        assert split_action((1, 3, 5), 1) == SplitOutcome(left=1, right=1)

    def test_level_two_left_vanishes(self):
        assert split_action((1, 4), 2) == SplitOutcome(left=None, right=1)

    def test_non_break_level(self):
        assert split_action((1, 2, 6), 4) == SplitOutcome(left=3, right=3)

    def test_break_level(self):
        # 6 in break_levels((1,2,6)) = {2, 6}
        assert split_action((1, 2, 6), 6) == SplitOutcome(left=None, right=5)


class TestSplitIdentity:
    def test_zero_table_level_one(self):
        pattern, n = (1, 3), 5
        full = (1 << (1 << (n - 1))) - 1
        masked = 0 ^ mu_sequence_closed_form(pattern, 1, n)
        assert masked == full
        assert split_identity_check(pattern, 1, n, 0)

    def test_quadratic_level_two_leaves_left_half(self):
        pattern, n = (1, 4), 6
        rng = random.Random(5)
        half = 1 << (n - 2)
        for _ in range(16):
            table = rng.getrandbits(1 << (n - 1))
            masked = table ^ mu_sequence_closed_form(pattern, 2, n)
            assert masked & ((1 << half) - 1) == table & ((1 << half) - 1)
            assert split_identity_check(pattern, 2, n, table)

    def test_exhaustive_small_and_random(self):
        rng = random.Random(6)
        for pattern in action_patterns(4):
            for n in range(pattern[-1] + 1, 9):
                for v in range(1, pattern[-1] + 1):
                    if n <= 4:
                        tables = range(1 << (1 << (n - 1)))
                    else:
                        tables = [rng.getrandbits(1 << (n - 1)) for _ in range(16)]
                    for table in tables:
                        assert split_identity_check(pattern, v, n, table), (
                            pattern, v, n,
                        )


class TestFreshActions:
    def test_cubic_plus_quadratic(self):
        spec = RSFunctionSpec(((1, 3, 5), (1, 4)))
        assert fresh_actions(spec) == [MuAction((1, 3, 5), 5), MuAction((1, 4), 4)]

    def test_pure_linear_has_none(self):
        assert fresh_actions(RSFunctionSpec(((1,),))) == []

    def test_triple(self):
        spec = RSFunctionSpec(((1, 2, 6), (1, 2), (1, 6)))
        assert [a.v for a in fresh_actions(spec)] == [6, 2, 6]

    def test_validation(self):
        with pytest.raises(ValueError):
            MuAction((1, 4), 5)
        with pytest.raises(ValueError):
            MuAction((2, 4), 2)
