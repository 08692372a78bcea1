"""Monomials, rotation orbits, truth tables and Hamming weights of rotation
symmetric Boolean functions.

Conventions used throughout the package:

* Inputs are indexed 0 .. 2^n - 1 in lexicographic order.  The n-bit binary
  expansion of an index, most significant bit first, gives the variable
  values (x_1, ..., x_n); so x_i lives at bit position n - i of the index.
* A truth table is stored as a Python int whose bit j holds the function
  value on input j.  Concatenation of table segments therefore maps to
  shifts and ORs, and Hamming weight to int.bit_count().
* A monomial is a strictly increasing tuple of 1-based variable indices.
"""
from collections import Counter
from dataclasses import dataclass

from rsbf.errors import BudgetExceededError, InputError
from rsbf.kernel import chunk_xor_popcount

Monomial = tuple

DEFAULT_ENUM_BUDGET = 28
DEFAULT_CHUNK_LOG2 = 20
INTERPRETATIONS = ("orbit-distinct", "full-sum")


def as_monomial(indices) -> Monomial:
    """Validate a monomial: nonempty, strictly increasing, all indices >= 1."""
    try:
        mono = tuple(int(i) for i in indices)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad monomial {indices!r}: {exc}") from None
    if not mono:
        raise InputError("empty monomial")
    if mono[0] < 1:
        raise InputError(f"variable indices start at 1, got {mono}")
    for a, b in zip(mono, mono[1:]):
        if a >= b:
            raise InputError(f"monomial indices must be strictly increasing: {mono}")
    return mono


@dataclass(frozen=True)
class RSFunctionSpec:
    """Generating monomials of a rotation symmetric function family.

    Every generator must begin with index 1; generators are pairwise
    distinct and at most one of them may be the linear monomial (1,).
    """

    generators: tuple

    def __post_init__(self):
        gens = tuple(as_monomial(g) for g in self.generators)
        if not gens:
            raise InputError("at least one generating monomial is required")
        for g in gens:
            if g[0] != 1:
                raise InputError(
                    f"all generating monomials must begin with 1, got {g}"
                )
        if len(set(gens)) != len(gens):
            raise InputError("duplicate generating monomials are not allowed")
        if sum(1 for g in gens if len(g) == 1) > 1:
            raise InputError("at most one linear generator (1,) is allowed")
        object.__setattr__(self, "generators", gens)

    @property
    def max_top(self) -> int:
        return max(g[-1] for g in self.generators)

    @property
    def nonlinear(self) -> tuple:
        return tuple(g for g in self.generators if len(g) > 1)

    @property
    def linear_count(self) -> int:
        return sum(1 for g in self.generators if len(g) == 1)

    @property
    def is_pure_linear(self) -> bool:
        return self.generators == ((1,),)

    def format(self) -> str:
        return ";".join(",".join(str(i) for i in g) for g in self.generators)


@dataclass(frozen=True)
class TruthTable:
    """Truth table of an n-variable function, packed into one int."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        if not 0 <= self.bits < (1 << (1 << self.n)):
            raise ValueError("bit vector longer than 2^n")

    @property
    def length(self) -> int:
        return 1 << self.n

    def weight(self) -> int:
        return self.bits.bit_count()

    def value_at(self, j: int) -> int:
        return (self.bits >> j) & 1

    def __xor__(self, other: "TruthTable") -> "TruthTable":
        if self.n != other.n:
            raise ValueError("variable counts differ")
        return TruthTable(self.n, self.bits ^ other.bits)

    def to01(self) -> str:
        """The table as a 0/1 string, input 0 first."""
        return "".join(str((self.bits >> j) & 1) for j in range(self.length))


@dataclass(frozen=True)
class WeightSequence:
    """Consecutive Hamming weights w_n for n = start_n, start_n + 1, ..."""

    start_n: int
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        for i, v in enumerate(vals):
            if not 0 <= v <= (1 << (self.start_n + i)):
                raise ValueError(
                    f"weight {v} impossible for {self.start_n + i} variables"
                )
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def n_range(self):
        return range(self.start_n, self.start_n + len(self.values))


def eval_monomial_at(mono, n: int, j: int) -> int:
    """1 iff every variable of the monomial is 1 in input j (x_1 = MSB of j)."""
    if mono[-1] > n:
        raise ValueError(f"monomial {mono} does not fit in {n} variables")
    if not 0 <= j < (1 << n):
        raise ValueError(f"input index {j} out of range for n={n}")
    for i in mono:
        if not (j >> (n - i)) & 1:
            return 0
    return 1


def _repeat_block(block: int, length: int, times: int) -> int:
    """Concatenate `times` copies of a length-bit block (block < 2^length)."""
    out = block
    filled = 1
    while filled * 2 <= times:
        out |= out << (filled * length)
        filled *= 2
    if filled < times:
        out |= _repeat_block(block, length, times - filled) << (filled * length)
    return out


def monomial_truth_table(mono, n: int) -> TruthTable:
    """Truth table of a single monomial via the nested run-length construction.

    Innermost layer: a zero run and a one run of length 2^(n - top index);
    each outer index k contributes a zero prefix of length 2^(n-k) and a
    repetition factor determined by the gap to the next index.
    """
    mono = as_monomial(mono)
    if mono[-1] > n:
        raise ValueError(f"monomial {mono} does not fit in {n} variables")
    run = 1 << (n - mono[-1])
    x = ((1 << run) - 1) << run
    xlen = run * 2
    for t in range(len(mono) - 2, -1, -1):
        k, knext = mono[t], mono[t + 1]
        x = _repeat_block(x, xlen, 1 << (knext - k - 1)) << (1 << (n - k))
        xlen = 1 << (n - k + 1)
    x = _repeat_block(x, xlen, 1 << (mono[0] - 1))
    return TruthTable(n, x)


def monomial_truth_table_direct(mono, n: int) -> TruthTable:
    """Same table built by evaluating the product at every input.

    Slow; exists as the independent oracle for the run-length construction.
    """
    mono = as_monomial(mono)
    bits = 0
    for j in range(1 << n):
        if eval_monomial_at(mono, n, j):
            bits |= 1 << j
    return TruthTable(n, bits)


def rho_index(j: int, n: int) -> int:
    """Index of the cyclically shifted input: (x_1,..,x_n) -> (x_2,..,x_n,x_1)."""
    return ((j << 1) | (j >> (n - 1))) & ((1 << n) - 1)


def rotate_pattern(mono, n: int, shift: int) -> Monomial:
    """Support set of the monomial after adding `shift` to every index mod n."""
    return tuple(sorted((i - 1 + shift) % n + 1 for i in mono))


def rotation_orbit(mono, n: int) -> list:
    """Distinct support sets of all n rotations, sorted lexicographically."""
    mono = as_monomial(mono)
    if mono[-1] > n:
        raise ValueError(f"monomial {mono} does not fit in {n} variables")
    return sorted({rotate_pattern(mono, n, c) for c in range(n)})


def orbit_size(mono, n: int) -> int:
    return len(rotation_orbit(mono, n))


def is_short(mono, n: int) -> bool:
    """True when the rotation orbit has fewer than n distinct members."""
    return orbit_size(mono, n) < n


def _check_interpretation(interpretation: str):
    if interpretation not in INTERPRETATIONS:
        raise InputError(
            f"unknown interpretation {interpretation!r}; choose from {INTERPRETATIONS}"
        )


def surviving_monomials(spec: RSFunctionSpec, n: int, interpretation: str) -> list:
    """Monomials left after mod-2 cancellation, for either interpretation.

    orbit-distinct: every generator contributes each distinct orbit member
    once.  full-sum: a generator contributes its orbit with multiplicity
    n / orbit size, so an even multiplicity cancels the generator entirely.
    Cross-generator duplicates always cancel by parity.
    """
    _check_interpretation(interpretation)
    if n < spec.max_top:
        raise ValueError(f"n={n} below the largest generator index {spec.max_top}")
    count = Counter()
    for g in spec.generators:
        orb = rotation_orbit(g, n)
        mult = 1 if interpretation == "orbit-distinct" else n // len(orb)
        if mult % 2 == 1:
            for m in orb:
                count[m] += 1
    return [m for m, c in count.items() if c % 2 == 1]


def mrs_truth_table(
    spec: RSFunctionSpec, n: int, interpretation: str = "orbit-distinct"
) -> TruthTable:
    """Truth table of the rotation symmetric function defined by the spec."""
    bits = 0
    for m in surviving_monomials(spec, n, interpretation):
        bits ^= monomial_truth_table(m, n).bits
    return TruthTable(n, bits)


def weight(
    spec: RSFunctionSpec,
    n: int,
    interpretation: str = "orbit-distinct",
    *,
    budget_n: int = DEFAULT_ENUM_BUDGET,
    chunk_log2: int = DEFAULT_CHUNK_LOG2,
) -> int:
    """Hamming weight by streamed enumeration, never materializing the table.

    Inputs are processed in chunks of 2^chunk_log2; within a chunk every
    variable column is a periodic bit lane, so each monomial is an AND of
    lanes and the function an XOR of monomials.  Variables whose index falls
    outside the chunk width are constant per chunk and folded away up front;
    monomials that become identical after folding cancel in pairs.
    """
    if n > budget_n:
        raise BudgetExceededError(
            f"enumerating 2^{n} inputs exceeds the budget of 2^{budget_n}"
        )
    monos = surviving_monomials(spec, n, interpretation)
    if not monos:
        return 0
    c = min(n, chunk_log2)
    folded = []
    for mono in monos:
        high = 0
        low = []
        for i in mono:
            p = n - i
            if p >= c:
                high |= 1 << p
            else:
                low.append(p)
        folded.append((high, tuple(low)))
    total = 0
    for base in range(0, 1 << n, 1 << c):
        parity = False
        active = Counter()
        for high, low in folded:
            if base & high == high:
                if low:
                    active[low] += 1
                else:
                    parity = not parity
        live = [m for m, k in active.items() if k % 2 == 1]
        if live or parity:
            total += chunk_xor_popcount(c, live, parity)
    return total


def weight_sequence(
    spec: RSFunctionSpec,
    n_from: int,
    n_to: int,
    interpretation: str = "orbit-distinct",
    *,
    budget_n: int = DEFAULT_ENUM_BUDGET,
) -> WeightSequence:
    """Element-wise weights for n = n_from .. n_to inclusive."""
    if n_to < n_from:
        raise ValueError("empty range")
    values = [
        weight(spec, n, interpretation, budget_n=budget_n)
        for n in range(n_from, n_to + 1)
    ]
    return WeightSequence(n_from, tuple(values))
