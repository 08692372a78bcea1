"""Pure-Python enumeration kernel.

Works on whole chunks at once: each variable column is materialized as one
big integer whose bit t carries the variable's value on the t-th input of
the chunk, so AND/XOR over the chunk are single big-int operations and the
final popcount is int.bit_count().
"""
from functools import lru_cache


@lru_cache(maxsize=None)
def _column(p: int, log2_len: int) -> int:
    """Chunk column for bit position p: bit t is set iff (t >> p) & 1."""
    length = 1 << log2_len
    period = 1 << (p + 1)
    pat = ((1 << (1 << p)) - 1) << (1 << p)
    filled = period
    while filled < length:
        pat |= pat << filled
        filled <<= 1
    return pat


@lru_cache(maxsize=None)
def _full(log2_len: int) -> int:
    return (1 << (1 << log2_len)) - 1


def chunk_xor_popcount(log2_len, monomials, complement):
    """Popcount of the XOR-of-ANDs of periodic bit columns over one chunk.

    `monomials` is a sequence of tuples of distinct bit positions, each
    position < log2_len.  `complement` flips the final lane before counting.
    """
    full = _full(log2_len)
    acc = 0
    for mono in monomials:
        m = full
        for p in mono:
            m &= _column(p, log2_len)
        acc ^= m
    if complement:
        acc ^= full
    return acc.bit_count()
