"""Exact integer linear algebra: sparse integer matrices, monic integer
polynomials, and minimal polynomials of matrices whose dimension may reach a
few thousand while entries of the powers grow to hundreds of digits.

No floating point is used anywhere in this module.  Three routes to the
minimal polynomial are provided:

* dense-dependence: stack the flattened powers I, A, A^2, ... and return the
  first exact linear dependence.  Faithful but quadratic in memory; only
  sensible for small dimensions.
* vector-lcm: exact minimal polynomials of A relative to random vectors,
  combined by polynomial lcm until the result annihilates A.
* modular: per-prime candidates from Krylov elimination over F_q, CRT
  reconstruction with symmetric lifting, then unconditional certification.

Every route verifies p(A) = 0 in exact integer arithmetic before returning:
directly for small matrices, or through a residue certificate whose prime
product exceeds twice an a-priori bound on the entries of p(A) (entries of
A^k are bounded by the k-th power of the maximum column 1-norm, so a zero
residue modulo a large enough product proves exact vanishing).
"""
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np
import scipy.sparse as sp

_DENSE_AUTO_MAX = 32
_VECTOR_LCM_AUTO_MAX = 256
_EXACT_EVAL_MAX = 128
_PRIME_BITS = 24  # keeps int64 Horner products safe up to dim 2^15

METHODS = ("auto", "dense-dependence", "vector-lcm", "modular")


@dataclass(frozen=True)
class BigPoly:
    """Integer polynomial, coefficients ascending, leading coefficient nonzero."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, coeffs) -> "BigPoly":
        """Normalize by stripping trailing zeros; all-zero input is the zero
        polynomial (0,)."""
        coeffs = [int(c) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def pretty(self) -> str:
        """Human-readable form in ascending term order, e.g.
        '-8 x^9 + 4 x^10 + ... + x^15'."""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and not (self.is_zero and i == 0):
                continue
            if i == 0:
                body = str(c)
            else:
                x = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    body = x
                elif c == -1:
                    body = f"-{x}"
                else:
                    body = f"{c} {x}"
            terms.append(body)
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:].lstrip()}" if t.startswith("-") else f" + {t}"
        return out


@dataclass(frozen=True, eq=False)
class SparseIntMatrix:
    """Square sparse matrix with exact (unbounded) integer entries."""

    dim: int
    entries: dict  # (row, col) -> nonzero int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        clean = {}
        for (r, c), v in self.entries.items():
            v = int(v)
            if not (0 <= r < self.dim and 0 <= c < self.dim):
                raise ValueError(f"entry ({r}, {c}) outside a {self.dim}-dim matrix")
            if v:
                clean[(int(r), int(c))] = v
        object.__setattr__(self, "entries", clean)
        object.__setattr__(self, "_triplets", tuple(
            (r, c, v) for (r, c), v in sorted(clean.items())
        ))

    @classmethod
    def identity(cls, dim: int) -> "SparseIntMatrix":
        return cls(dim, {(i, i): 1 for i in range(dim)})

    @classmethod
    def zero(cls, dim: int) -> "SparseIntMatrix":
        return cls(dim, {})

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def matvec(self, vec) -> list:
        """Exact A @ vec on Python ints."""
        if len(vec) != self.dim:
            raise ValueError("vector length mismatch")
        out = [0] * self.dim
        for r, c, v in self._triplets:
            out[r] += v * vec[c]
        return out

    def col_norm(self) -> int:
        """Maximum column sum of absolute values (induced 1-norm)."""
        sums = [0] * self.dim
        for _, c, v in self._triplets:
            sums[c] += abs(v)
        return max(sums, default=0)

    def csr_mod(self, q: int) -> sp.csr_matrix:
        """CSR copy with entries reduced mod q (entries may exceed int64)."""
        rows = np.fromiter((r for r, _, _ in self._triplets), dtype=np.int64,
                           count=self.nnz)
        cols = np.fromiter((c for _, c, _ in self._triplets), dtype=np.int64,
                           count=self.nnz)
        vals = np.fromiter((v % q for _, _, v in self._triplets), dtype=np.int64,
                           count=self.nnz)
        return sp.csr_matrix((vals, (rows, cols)), shape=(self.dim, self.dim))


class FirstDependenceFinder:
    """Incremental exact linear-dependence detector over the rationals.

    Vectors are pushed one at a time; the first push that is linearly
    dependent on its predecessors returns the dependence as a primitive
    integer vector (content 1, positive last entry).
    """

    def __init__(self):
        self._pivots = []  # (lead index, scaled row, scaled combo)

    def push(self, vec):
        row = [Fraction(x) for x in vec]
        combo = [Fraction(0)] * (len(self._pivots) + 1)
        combo[-1] = Fraction(1)
        for lead, prow, pcombo in self._pivots:
            f = row[lead]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
                for i, b in enumerate(pcombo):
                    combo[i] -= f * b
        lead = next((i for i, a in enumerate(row) if a), None)
        if lead is None:
            den = 1
            for c in combo:
                den = den * c.denominator // gcd(den, c.denominator)
            ints = [int(c * den) for c in combo]
            content = 0
            for c in ints:
                content = gcd(content, c)
            ints = [c // content for c in ints]
            if ints[-1] < 0:
                ints = [-c for c in ints]
            return ints
        inv = 1 / row[lead]
        self._pivots.append(
            (lead, [a * inv for a in row], [a * inv for a in combo])
        )
        return None


def first_dependence(vectors):
    """Dependence of the shortest linearly dependent prefix of `vectors`,
    as a primitive integer vector with positive last entry; None if the
    whole list is independent."""
    finder = FirstDependenceFinder()
    for v in vectors:
        dep = finder.push(v)
        if dep is not None:
            return dep
    return None


def strip_x_factor(p: BigPoly):
    """Factor p = x^multiplicity * q with q(0) != 0.

    A pure power of x keeps a single factor: x^k -> (x, k - 1).
    """
    if p.is_zero:
        raise ValueError("cannot strip the zero polynomial")
    mult = next(i for i, c in enumerate(p.coeffs) if c != 0)
    if mult == p.degree and mult > 0:  # pure power of x
        return BigPoly((0, 1)), mult - 1
    return BigPoly(p.coeffs[mult:]), mult


def evaluate_poly_at_matrix(p: BigPoly, A: SparseIntMatrix) -> SparseIntMatrix:
    """Exact p(A) by Horner over sparse-times-dense products."""
    dim = A.dim
    if dim > 4096:
        raise ValueError("exact dense evaluation is sized for dim <= 4096")
    res = [[0] * dim for _ in range(dim)]
    top = p.coeffs[-1]
    for i in range(dim):
        res[i][i] = top
    for k in range(p.degree - 1, -1, -1):
        new = [[0] * dim for _ in range(dim)]
        for r, c, v in A._triplets:
            src = res[c]
            dst = new[r]
            if v == 1:
                for j in range(dim):
                    dst[j] += src[j]
            else:
                for j in range(dim):
                    dst[j] += v * src[j]
        ck = p.coeffs[k]
        if ck:
            for i in range(dim):
                new[i][i] += ck
        res = new
    entries = {}
    for i in range(dim):
        row = res[i]
        for j in range(dim):
            if row[j]:
                entries[(i, j)] = row[j]
    return SparseIntMatrix(dim, entries)


# ---------------------------------------------------------------------------
# primes


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24 with this base set
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE = []


def _prime(i: int) -> int:
    """The i-th prime below 2^_PRIME_BITS, descending, deterministic."""
    n = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else (1 << _PRIME_BITS) - 1
    while len(_PRIME_CACHE) <= i:
        if _is_prime(n):
            _PRIME_CACHE.append(n)
        n -= 2
    return _PRIME_CACHE[i]


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, ascending)


def _poly_divmod_frac(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    db = len(b) - 1
    quo = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - db - 1, -1, -1):
        f = a[db + i] / b[db]
        quo[i] = f
        if f:
            for j in range(db + 1):
                a[i + j] -= f * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return quo, a


def _poly_gcd_monic(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while not (len(b) == 1 and b[0] == 0):
        _, r = _poly_divmod_frac(a, b)
        a, b = b, r
    lead = a[-1]
    return [x / lead for x in a]


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_lcm_monic_int(a, b):
    """lcm of two monic integer polynomials; the result is monic integer."""
    g = _poly_gcd_monic(a, b)
    quo, rem = _poly_divmod_frac(a, g)
    assert rem == [Fraction(0)]
    out = _poly_mul_int([int(x) for x in _as_int_list(quo)], b)
    return out


def _as_int_list(fracs):
    out = []
    for f in fracs:
        f = Fraction(f)
        if f.denominator != 1:
            raise ArithmeticError("expected an integer polynomial")
        out.append(int(f))
    return out


# ---------------------------------------------------------------------------
# modular kernels (numpy int64; primes < 2^24 keep products inside int64)


def _rel_minpoly_mod(Aq, v, q):
    """Monic relative minimal polynomial of A mod q w.r.t. v, ascending."""
    pivots = []
    cur = v % q
    k = 0
    while True:
        vec = cur.copy()
        combo = np.zeros(k + 1, dtype=np.int64)
        combo[k] = 1
        for lead, prow, pcombo in pivots:
            f = int(vec[lead])
            if f:
                vec = (vec - f * prow) % q
                combo[: len(pcombo)] = (combo[: len(pcombo)] - f * pcombo) % q
        nz = np.nonzero(vec)[0]
        if len(nz) == 0:
            inv = pow(int(combo[k]), q - 2, q)
            return [int(c) * inv % q for c in combo]
        lead = int(nz[0])
        inv = pow(int(vec[lead]), q - 2, q)
        pivots.append((lead, vec * inv % q, combo * inv % q))
        cur = (Aq @ cur) % q
        k += 1
        if k > Aq.shape[0] + 1:
            raise RuntimeError("dependence must appear by dim + 1 powers")


def _poly_matvec_mod(Aq, coeffs, v, q):
    """p(A) v mod q by Horner."""
    w = (coeffs[-1] * v) % q
    for k in range(len(coeffs) - 2, -1, -1):
        w = (Aq @ w + coeffs[k] * v) % q
    return w


def _polmod_divmod(a, b, q):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], q - 2, q)
    quo = [0] * max(len(a) - db, 1)
    for i in range(len(a) - db - 1, -1, -1):
        f = a[db + i] * inv % q
        quo[i] = f
        if f:
            for j in range(db + 1):
                a[i + j] = (a[i + j] - f * b[j]) % q
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return quo, a


def _polmod_gcd(a, b, q):
    while len(b) > 1 or b[0] != 0:
        _, r = _polmod_divmod(a, b, q)
        a, b = b, r
    inv = pow(a[-1], q - 2, q)
    return [x * inv % q for x in a]


def _polmod_mul(a, b, q):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return out


def _polmod_lcm(a, b, q):
    g = _polmod_gcd(list(a), list(b), q)
    quo, _ = _polmod_divmod(list(a), g, q)
    return _polmod_mul(quo, b, q)


def _minpoly_mod_q(A: SparseIntMatrix, q: int, rng) -> list:
    """Candidate minimal polynomial of A over F_q: lcm of relative minimal
    polynomials of random vectors, accepted once it annihilates fresh random
    vectors."""
    m = A.dim
    Aq = A.csr_mod(q)
    p = [1]
    for trial in range(8):
        v = rng.integers(0, q, size=m, dtype=np.int64)
        p = _polmod_lcm(p, _rel_minpoly_mod(Aq, v, q), q)
        if len(p) - 1 == m:
            return p
        w1 = rng.integers(0, q, size=m, dtype=np.int64)
        w2 = rng.integers(0, q, size=m, dtype=np.int64)
        if (not _poly_matvec_mod(Aq, p, w1, q).any()
                and not _poly_matvec_mod(Aq, p, w2, q).any()):
            return p
    return p


def _entry_bound(p: BigPoly, A: SparseIntMatrix) -> int:
    """Bound on |entries of p(A)|: sum |a_k| * norm^k, norm = column 1-norm."""
    nb = max(1, A.col_norm())
    out = 0
    power = 1
    for c in p.coeffs:
        out += abs(c) * power
        power *= nb
    return out


def _certified_zero(p: BigPoly, A: SparseIntMatrix, skip=()) -> bool:
    """Exact test p(A) == 0 via residues: entries of p(A) are bounded, so
    vanishing modulo a prime product exceeding twice the bound is vanishing
    over the integers.  Primes listed in `skip` count toward the product
    without re-evaluation (used when p was CRT-built from them)."""
    if A.dim >= (1 << 15):
        raise ValueError("residue certificate sized for dim < 32768")
    target = 2 * _entry_bound(p, A) + 1
    product = 1
    for q in skip:
        product *= q
    idx = 0
    while product < target:
        q = _prime(idx)
        idx += 1
        if q in skip:
            continue
        Aq = A.csr_mod(q)
        dim = A.dim
        R = np.zeros((dim, dim), dtype=np.int64)
        diag = np.arange(dim)
        R[diag, diag] = p.coeffs[-1] % q
        for k in range(p.degree - 1, -1, -1):
            R = (Aq @ R) % q
            R[diag, diag] = (R[diag, diag] + p.coeffs[k]) % q
        if R.any():
            return False
        product *= q
    return True


def _verify_annihilates(p: BigPoly, A: SparseIntMatrix, skip=()) -> bool:
    if A.dim <= _EXACT_EVAL_MAX:
        return evaluate_poly_at_matrix(p, A).is_zero()
    return _certified_zero(p, A, skip=skip)


# ---------------------------------------------------------------------------
# the three methods


def _minpoly_dense(A: SparseIntMatrix) -> BigPoly:
    """First exact linear dependence among the flattened powers of A."""
    dim = A.dim
    if dim > 512:
        raise ValueError("dense-dependence is sized for dim <= 512")
    finder = FirstDependenceFinder()
    dense = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        dense[i][i] = 1
    while True:
        flat = [x for row in dense for x in row]
        dep = finder.push(flat)
        if dep is not None:
            poly = BigPoly(tuple(dep))
            assert poly.is_monic, "minimal polynomial of an integer matrix is monic"
            return poly
        new = [[0] * dim for _ in range(dim)]
        for r, c, v in A._triplets:
            src = dense[c]
            dst = new[r]
            for j in range(dim):
                dst[j] += v * src[j]
        dense = new


def _krylov_rel_minpoly_exact(A: SparseIntMatrix, vec) -> list:
    """Exact monic relative minimal polynomial via first dependence of the
    Krylov sequence vec, A vec, A^2 vec, ..."""
    finder = FirstDependenceFinder()
    cur = list(vec)
    steps = 0
    while True:
        dep = finder.push(cur)
        if dep is not None:
            assert dep[-1] == 1
            return dep
        cur = A.matvec(cur)
        steps += 1
        if steps > A.dim + 1:
            raise RuntimeError("dependence must appear by dim + 1 powers")


def _minpoly_vector_lcm(A: SparseIntMatrix, seed: int) -> BigPoly:
    rng = random.Random(seed * 0x9E3779B1 + 0x56C)
    p = [1]
    for _ in range(12):
        vec = [rng.randrange(-4, 5) for _ in range(A.dim)]
        if not any(vec):
            vec[rng.randrange(A.dim)] = 1
        rel = _krylov_rel_minpoly_exact(A, vec)
        p = _poly_lcm_monic_int(p, rel)
        cand = BigPoly(tuple(p))
        if _verify_annihilates(cand, A):
            return cand
    raise RuntimeError("vector-lcm failed to reach the minimal polynomial")


def _minpoly_modular(A: SparseIntMatrix, seed: int) -> BigPoly:
    deg = -1
    cands = {}
    lifted_prev = None
    for idx in itertools.count():
        if idx > 300:
            raise RuntimeError("modular reconstruction did not stabilize")
        q = _prime(idx)
        rng = np.random.default_rng((seed * 0x9E3779B1 + q) % (1 << 63))
        pq = _minpoly_mod_q(A, q, rng)
        d = len(pq) - 1
        if d > deg:
            deg = d
            cands = {}
            lifted_prev = None
        if d == deg:
            cands[q] = pq
        lifted = _crt_lift(cands)
        if lifted is not None and lifted == lifted_prev and lifted[-1] == 1:
            cand = BigPoly(tuple(lifted))
            if _verify_annihilates(cand, A, skip=tuple(cands)):
                return cand
        lifted_prev = lifted


def _crt_lift(cands):
    """Combine per-prime coefficient lists by CRT, then lift symmetrically."""
    if not cands:
        return None
    modulus = 1
    resid = None
    for q, poly in sorted(cands.items()):
        if resid is None:
            modulus, resid = q, [c % q for c in poly]
            continue
        inv = pow(modulus % q, q - 2, q)
        resid = [
            r0 + modulus * ((rq - r0) % q * inv % q)
            for r0, rq in zip(resid, poly)
        ]
        modulus *= q
    return [r if 2 * r <= modulus else r - modulus for r in resid]


def minimal_polynomial(
    A: SparseIntMatrix, method: str = "auto", seed: int = 0
) -> BigPoly:
    """The unique monic integer polynomial of least degree with p(A) = 0.

    All methods verify annihilation in exact arithmetic before returning, so
    the result is independent of the seed and of the method.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if method == "auto":
        if A.dim <= _DENSE_AUTO_MAX:
            method = "dense-dependence"
        elif A.dim <= _VECTOR_LCM_AUTO_MAX:
            method = "vector-lcm"
        else:
            method = "modular"
    if method == "dense-dependence":
        p = _minpoly_dense(A)
        if not _verify_annihilates(p, A):
            raise AssertionError("dense-dependence produced a non-annihilating polynomial")
        return p
    if method == "vector-lcm":
        return _minpoly_vector_lcm(A, seed)
    return _minpoly_modular(A, seed)
