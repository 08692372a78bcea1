"""Shared brute-force oracles, independent of the package's fast paths.

Everything here evaluates functions input by input from first principles
(products of bits over explicit rotation lists), so tests can compare the
package's run-length tables, bitsliced weights, and recursion machinery
against genuinely independent computations.
"""
from collections import Counter

import pytest


def bit_of(j, n, i):
    """Value of variable x_i on input j (x_1 is the most significant bit)."""
    return (j >> (n - i)) & 1


def mono_value(mono, n, j):
    for i in mono:
        if not bit_of(j, n, i):
            return 0
    return 1


def rotations(mono, n):
    """All n rotated index sets, with repetition."""
    return [tuple(sorted((i - 1 + c) % n + 1 for i in mono)) for c in range(n)]


def oracle_monomials(generators, n, interpretation):
    """Surviving monomials after parity cancellation, from first principles."""
    count = Counter()
    for g in generators:
        rots = rotations(g, n)
        distinct = sorted(set(rots))
        if interpretation == "orbit-distinct":
            for m in distinct:
                count[m] += 1
        else:  # full-sum: every one of the n rotated copies counts
            for m in rots:
                count[m] += 1
    return [m for m, c in count.items() if c % 2 == 1]


def oracle_value(generators, n, j, interpretation):
    acc = 0
    for m in oracle_monomials(generators, n, interpretation):
        acc ^= mono_value(m, n, j)
    return acc


def oracle_weight(generators, n, interpretation):
    return sum(oracle_value(generators, n, j, interpretation) for j in range(1 << n))


def oracle_table_bits(generators, n, interpretation):
    bits = 0
    for j in range(1 << n):
        if oracle_value(generators, n, j, interpretation):
            bits |= 1 << j
    return bits


@pytest.fixture(scope="session")
def battery_specs():
    """Small end-to-end specs used across module tests."""
    return [
        ((1, 2, 4),),
        ((1, 3, 5),),
        ((1, 2), (1, 3)),
        ((1, 2, 3, 4),),
        ((1, 2, 5), (1,)),
        ((1, 4), (1, 2, 3)),
    ]
