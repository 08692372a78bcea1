import itertools

import pytest
from conftest import oracle_table_bits, oracle_weight

from rsbf.boolfn import (
    RSFunctionSpec,
    TruthTable,
    WeightSequence,
    eval_monomial_at,
    is_short,
    monomial_truth_table,
    monomial_truth_table_direct,
    mrs_truth_table,
    orbit_size,
    rho_index,
    rotation_orbit,
    weight,
    weight_sequence,
)
from rsbf.errors import BudgetExceededError, InputError


def all_patterns(max_top, max_degree=None):
    """Strictly increasing index tuples with largest index <= max_top."""
    out = []
    for top in range(1, max_top + 1):
        for k in range(0, top):
            for rest in itertools.combinations(range(1, top), k):
                mono = rest + (top,)
                if max_degree is None or len(mono) <= max_degree:
                    out.append(mono)
    return out


class TestEvalMonomial:
    def test_all_ones_input(self):
        assert eval_monomial_at((1, 2), 2, 3) == 1

    def test_missing_variable(self):
        assert eval_monomial_at((1, 2), 2, 2) == 0

    def test_binary_expansion(self):
        # j = 5 = 101 in 3 bits: x1 = 1, x2 = 0, x3 = 1
        assert eval_monomial_at((1, 3), 3, 5) == 1
        assert eval_monomial_at((2,), 3, 5) == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            eval_monomial_at((1, 4), 3, 0)
        with pytest.raises(ValueError):
            eval_monomial_at((1, 2), 2, 4)


class TestMonomialTable:
    def test_small_tables(self):
        assert monomial_truth_table((1, 2), 2).to01() == "0001"
        assert monomial_truth_table((1, 2, 3), 3).to01() == "00000001"
        assert monomial_truth_table((1, 3), 3).to01() == "00000101"

    def test_closed_form_equals_direct(self):
        for mono in all_patterns(4):
            for n in range(mono[-1], 9):
                assert (
                    monomial_truth_table(mono, n).bits
                    == monomial_truth_table_direct(mono, n).bits
                ), (mono, n)

    def test_ones_count(self):
        for mono in all_patterns(5):
            for n in range(mono[-1], 10):
                assert monomial_truth_table(mono, n).weight() == 1 << (n - len(mono))

    def test_quadratic_run_length_form(self):
        # table of x_1 x_s: 2^(n-1) zeros then (0 1)-runs of length 2^(n-s)
        for s in range(2, 7):
            for n in range(s, 11):
                zeros = (1 << (n - 1))
                run = 1 << (n - s)
                expect = 0
                pos = zeros
                for block in range(1 << (s - 2)):
                    pos += run
                    expect |= ((1 << run) - 1) << pos
                    pos += run
                assert monomial_truth_table((1, s), n).bits == expect

    def test_general_quadratic_form(self):
        # x_i x_j: (0_{2^(n-i)} (0_{2^(n-j)} 1_{2^(n-j)})_{2^(j-i-1)})_{2^(i-1)}
        def build(i, j, n):
            run = 1 << (n - j)
            inner = ((1 << run) - 1) << run
            inner_len = run * 2
            block = 0
            for b in range(1 << (j - i - 1)):
                block |= inner << (b * inner_len)
            block <<= 1 << (n - i)
            block_len = 1 << (n - i + 1)
            out = 0
            for b in range(1 << (i - 1)):
                out |= block << (b * block_len)
            return out

        for i in range(1, 5):
            for j in range(i + 1, 6):
                for n in range(j, 10):
                    assert monomial_truth_table((i, j), n).bits == build(i, j, n)

    def test_quartic_corollary_form(self):
        # x_1 x_i x_j x_k: 0_{2^(n-1)} (0_{2^(n-i)} (0_{2^(n-j)}
        #   (0_{2^(n-k)} 1_{2^(n-k)})_{2^(k-j-1)})_{2^(j-i-1)})_{2^(i-2)}
        def build(i, j, k, n):
            run = 1 << (n - k)
            x = ((1 << run) - 1) << run
            xlen = run * 2
            y = 0
            for b in range(1 << (k - j - 1)):
                y |= x << (b * xlen)
            y <<= 1 << (n - j)
            ylen = 1 << (n - j + 1)
            z = 0
            for b in range(1 << (j - i - 1)):
                z |= y << (b * ylen)
            z <<= 1 << (n - i)
            zlen = 1 << (n - i + 1)
            w = 0
            for b in range(1 << (i - 2)):
                w |= z << (b * zlen)
            return w << (1 << (n - 1))

        for i, j, k in itertools.combinations(range(2, 7), 3):
            for n in range(k, 10):
                assert monomial_truth_table((1, i, j, k), n).bits == build(i, j, k, n), (
                    (1, i, j, k), n,
                )

    def test_does_not_fit(self):
        with pytest.raises(ValueError):
            monomial_truth_table((1, 5), 4)


class TestOrbits:
    def test_full_support_is_fixed(self):
        assert rotation_orbit((1, 2, 3), 3) == [(1, 2, 3)]
        assert is_short((1, 2, 3), 3)

    def test_short_quadratic(self):
        orb = rotation_orbit((1, 6), 10)
        assert len(orb) == 5
        assert orb == [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]
        assert is_short((1, 6), 10)

    def test_generic_orbit(self):
        assert len(rotation_orbit((1, 2), 4)) == 4
        assert not is_short((1, 2), 4)

    def test_orbit_size_divides_n(self):
        for mono in all_patterns(5):
            if mono[0] != 1:
                continue
            for n in range(mono[-1], 13):
                assert n % orbit_size(mono, n) == 0

    def test_canonical_sorted(self):
        orb = rotation_orbit((1, 3), 6)
        assert orb == sorted(orb)


class TestMrsTable:
    def test_single_full_monomial(self):
        spec = RSFunctionSpec(((1, 2, 3),))
        for interp in ("orbit-distinct", "full-sum"):
            assert mrs_truth_table(spec, 3, interp).weight() == 1

    def test_triple_sum_weight_64(self):
        spec = RSFunctionSpec(((1, 2, 6), (1, 2), (1, 6)))
        for interp in ("orbit-distinct", "full-sum"):
            assert mrs_truth_table(spec, 7, interp).weight() == 64

    def test_short_quadratic_cancels_in_full_sum(self):
        spec = RSFunctionSpec(((1, 6),))
        assert mrs_truth_table(spec, 10, "full-sum").bits == 0
        assert mrs_truth_table(spec, 10, "orbit-distinct").bits != 0

    def test_against_oracle(self, battery_specs):
        for gens in battery_specs:
            spec = RSFunctionSpec(gens)
            for n in range(spec.max_top, spec.max_top + 4):
                for interp in ("orbit-distinct", "full-sum"):
                    assert (
                        mrs_truth_table(spec, n, interp).bits
                        == oracle_table_bits(gens, n, interp)
                    ), (gens, n, interp)

    def test_rotation_invariance(self, battery_specs):
        for gens in battery_specs:
            spec = RSFunctionSpec(gens)
            for n in range(spec.max_top, min(spec.max_top + 5, 13)):
                tt = mrs_truth_table(spec, n)
                assert all(
                    tt.value_at(j) == tt.value_at(rho_index(j, n))
                    for j in range(1 << n)
                ), (gens, n)

    def test_interpretations_agree_off_short_n(self, battery_specs):
        for gens in battery_specs:
            spec = RSFunctionSpec(gens)
            for n in range(spec.max_top, spec.max_top + 6):
                if any(is_short(g, n) for g in gens):
                    continue
                a = mrs_truth_table(spec, n, "orbit-distinct")
                b = mrs_truth_table(spec, n, "full-sum")
                assert a == b


class TestWeight:
    def test_trivial(self):
        assert weight(RSFunctionSpec(((1, 2, 3),)), 3) == 1

    def test_paper_pipeline_values(self):
        spec = RSFunctionSpec(((1, 2, 6), (1, 2), (1, 6)))
        assert weight(spec, 8) == 112
        assert weight(spec, 10, "full-sum") == 480
        assert weight(spec, 10, "orbit-distinct") == 496

    def test_matches_table_popcount(self, battery_specs):
        for gens in battery_specs:
            spec = RSFunctionSpec(gens)
            for n in range(spec.max_top, spec.max_top + 5):
                for interp in ("orbit-distinct", "full-sum"):
                    assert weight(spec, n, interp) == mrs_truth_table(
                        spec, n, interp
                    ).weight()

    def test_matches_oracle(self, battery_specs):
        for gens in battery_specs:
            spec = RSFunctionSpec(gens)
            n = spec.max_top + 3
            assert weight(spec, n) == oracle_weight(gens, n, "orbit-distinct")

    def test_chunk_independence(self):
        spec = RSFunctionSpec(((1, 2, 5), (1, 3)))
        expected = weight(spec, 12)
        for log2 in (6, 10, 14):
            assert weight(spec, 12, chunk_log2=log2) == expected

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            weight(RSFunctionSpec(((1, 2),)), 29)
        with pytest.raises(BudgetExceededError):
            weight(RSFunctionSpec(((1, 2),)), 12, budget_n=10)

    def test_weight_sequence(self):
        spec = RSFunctionSpec(((1, 2, 6), (1, 2), (1, 6)))
        ws = weight_sequence(spec, 7, 9)
        assert ws.start_n == 7
        assert ws.values == (64, 112, 244)

    def test_weight_sequence_single(self):
        ws = weight_sequence(RSFunctionSpec(((1, 2),)), 4, 4)
        assert ws.values == (oracle_weight([(1, 2)], 4, "orbit-distinct"),)


class TestDecompositionIdentities:
    """Block self-similarity of the shifted quadratic/cubic family tables."""

    @staticmethod
    def portions(bits, n, b):
        size = 1 << (n - b)
        mask = (1 << size) - 1
        return [(bits >> (i * size)) & mask for i in range(1 << b)], size

    @staticmethod
    def glue(parts, size, times_each):
        out = 0
        pos = 0
        for p in parts:
            for _ in range(times_each):
                out |= p << pos
                pos += size
        return out

    def test_quadratic_block_recursion(self):
        # x_j x_{n-a+1+j}: the n-table is each of the 2^j portions of the
        # (n-1)-table repeated twice, and more generally each of the 2^j
        # portions of the (n-k+j)-table repeated 2^(k-j) times.
        for a in range(2, 7):
            for n in range(a + 1, 13):
                for j in range(1, a):
                    tab_n = monomial_truth_table((j, n - a + 1 + j), n).bits
                    for k in range(j + 1, n - a + j + 1):
                        m = n - k + j
                        tab_m = monomial_truth_table((j, m - a + 1 + j), m).bits
                        parts, size = self.portions(tab_m, m, j)
                        assert tab_n == self.glue(parts, size, 1 << (k - j)), (
                            a, n, j, k,
                        )

    def test_cubic_block_recursions(self):
        # monomials x_j x_{n-s+1+j} x_{n-s+r+j} (split into 2^j pieces) and
        # x_j x_{s-r+j} x_{n-r+1+j} (split into 2^(s-r+j) pieces), sampled
        cases = [(2, 4, 9), (2, 5, 11), (3, 5, 10), (2, 3, 8), (4, 6, 12)]
        for r, s, n in cases:
            for j in range(1, s - r + 1):
                tab_n = monomial_truth_table(
                    tuple(sorted((j, n - s + 1 + j, n - s + r + j))), n
                ).bits
                for k in range(j + 1, n - s + j + 1):
                    m = n - k + j
                    tab_m = monomial_truth_table(
                        tuple(sorted((j, m - s + 1 + j, m - s + r + j))), m
                    ).bits
                    parts, size = self.portions(tab_m, m, j)
                    assert tab_n == self.glue(parts, size, 1 << (k - j)), (r, s, n, j, k)
            for j in range(1, r):
                b = s - r + j
                tab_n = monomial_truth_table(
                    tuple(sorted((j, s - r + j, n - r + 1 + j))), n
                ).bits
                for k in range(b + 1, n - r + j + 1):
                    m = n - k + b
                    tab_m = monomial_truth_table(
                        tuple(sorted((j, s - r + j, m - r + 1 + j))), m
                    ).bits
                    parts, size = self.portions(tab_m, m, b)
                    assert tab_n == self.glue(parts, size, 1 << (k - b)), (r, s, n, j, k)


class TestSpecValidation:
    def test_must_begin_with_one(self):
        with pytest.raises(InputError):
            RSFunctionSpec(((2, 3),))

    def test_duplicates_rejected(self):
        with pytest.raises(InputError):
            RSFunctionSpec(((1, 2), (1, 2)))

    def test_two_linears_rejected(self):
        with pytest.raises(InputError):
            RSFunctionSpec(((1,), (1,), (1, 2)))

    def test_non_increasing(self):
        with pytest.raises(InputError):
            RSFunctionSpec(((1, 3, 2),))

    def test_accessors(self):
        spec = RSFunctionSpec(((1, 2, 6), (1,)))
        assert spec.max_top == 6
        assert spec.nonlinear == ((1, 2, 6),)
        assert spec.linear_count == 1
        assert not spec.is_pure_linear
        assert spec.format() == "1,2,6;1"


class TestValueTypes:
    def test_truth_table_length(self):
        with pytest.raises(ValueError):
            TruthTable(2, 1 << 16)

    def test_weight_sequence_bound(self):
        WeightSequence(3, (8,))
        with pytest.raises(ValueError):
            WeightSequence(3, (9,))
