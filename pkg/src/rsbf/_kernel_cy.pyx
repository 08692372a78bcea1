# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel: streams 64-bit words of the chunk.

Variable columns are periodic bit patterns; positions below 6 are fixed
64-bit masks, positions >= 6 select all-ones or all-zeros words from the
word index.  Same contract as rsbf._kernel_py.chunk_xor_popcount.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define RSBF_POPCOUNT64(x) __builtin_popcountll(x)
    #else
    static int RSBF_POPCOUNT64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int RSBF_POPCOUNT64(uint64_t x) nogil

cdef uint64_t _MASK[6]
_MASK[0] = <uint64_t>0xAAAAAAAAAAAAAAAA
_MASK[1] = <uint64_t>0xCCCCCCCCCCCCCCCC
_MASK[2] = <uint64_t>0xF0F0F0F0F0F0F0F0
_MASK[3] = <uint64_t>0xFF00FF00FF00FF00
_MASK[4] = <uint64_t>0xFFFF0000FFFF0000
_MASK[5] = <uint64_t>0xFFFFFFFF00000000


def chunk_xor_popcount(int log2_len, monomials, bint complement):
    """Popcount of the XOR-of-ANDs of periodic bit columns over one chunk."""
    cdef int nm = len(monomials)
    cdef int total = 0
    cdef int i, k, p
    for m in monomials:
        total += len(m)
    cdef int* pos = <int*> malloc(total * sizeof(int))
    cdef int* offs = <int*> malloc((nm + 1) * sizeof(int))
    if pos == NULL or offs == NULL:
        free(pos)
        free(offs)
        raise MemoryError()
    k = 0
    offs[0] = 0
    for i in range(nm):
        for p in monomials[i]:
            if p < 0 or p >= log2_len:
                free(pos)
                free(offs)
                raise ValueError("bit position out of range for chunk")
            pos[k] = p
            k += 1
        offs[i + 1] = k

    cdef uint64_t nwords = 1
    if log2_len > 6:
        nwords = (<uint64_t>1) << (log2_len - 6)
    cdef uint64_t tail = ~(<uint64_t>0)
    if log2_len < 6:
        tail = ((<uint64_t>1) << (1 << log2_len)) - 1

    cdef uint64_t w, acc, mval
    cdef int64_t count = 0
    with nogil:
        for w in range(nwords):
            acc = 0
            for i in range(nm):
                mval = ~(<uint64_t>0)
                for k in range(offs[i], offs[i + 1]):
                    p = pos[k]
                    if p < 6:
                        mval &= _MASK[p]
                    elif not (w >> (p - 6)) & 1:
                        mval = 0
                        break
                acc ^= mval
            if complement:
                acc = ~acc
            acc &= tail
            count += RSBF_POPCOUNT64(acc)
    free(pos)
    free(offs)
    return count
