"""From the reduced minimal polynomial to a weight recurrence: coefficient
extraction, brute-forced initial conditions, exact propagation, and empirical
verification against the enumeration oracle.

Residuals are exact integers throughout; there is no tolerance anywhere.
"""
from dataclasses import dataclass

from rsbf.boolfn import (
    DEFAULT_ENUM_BUDGET,
    RSFunctionSpec,
    WeightSequence,
    orbit_size,
    weight,
)
from rsbf.errors import BudgetExceededError
from rsbf.exact_linalg import BigPoly


@dataclass(frozen=True)
class RecursionSpec:
    """w_n = sum_{i=1..order} coeffs[i-1] * w_{n-i}, asserted from valid_from."""

    order: int
    coeffs: tuple
    valid_from: int | None = None

    def __post_init__(self):
        if self.order < 1 or len(self.coeffs) != self.order:
            raise ValueError("need exactly `order` coefficients")
        if self.coeffs[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def step(self, window) -> int:
        """Next value from the last `order` values (window[-1] is w_{n-1})."""
        return sum(c * window[-i] for i, c in enumerate(self.coeffs, 1))


@dataclass(frozen=True)
class VerificationReport:
    """Exact residuals of a recurrence against brute-force weights."""

    interpretation: str
    order: int
    n_lo: int
    n_hi: int
    residuals: dict  # n -> w_n - sum c_i w_{n-i}, for n >= n_lo + order
    nonzero: tuple  # n with residual != 0
    earliest_clean: int | None  # first n from which residuals stay zero
    short_ns: tuple  # n where some generator has orbit size < n

    def to_dict(self) -> dict:
        return {
            "interpretation": self.interpretation,
            "order": self.order,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "residuals": {str(n): r for n, r in sorted(self.residuals.items())},
            "nonzero": list(self.nonzero),
            "earliest_clean": self.earliest_clean,
            "short_ns": list(self.short_ns),
        }


def recursion_from_polynomial(
    q: BigPoly, first_weight_n: int | None = None
) -> RecursionSpec:
    """Read a monic reduced polynomial x^D + a_{D-1} x^{D-1} + ... + a_0 as
    the recurrence w_n = sum c_i w_{n-i} with c_i = -a_{D-i}.

    `first_weight_n` is the index of the first available initial weight; the
    recurrence is then asserted from first_weight_n + D on.
    """
    if q.is_zero or not q.is_monic or q.degree < 1:
        raise ValueError("need a monic polynomial of positive degree")
    if q.coeffs[0] == 0:
        raise ValueError("polynomial must have nonzero constant term (strip x first)")
    d = q.degree
    coeffs = tuple(-q.coeffs[d - i] for i in range(1, d + 1))
    valid_from = first_weight_n + d if first_weight_n is not None else None
    return RecursionSpec(order=d, coeffs=coeffs, valid_from=valid_from)


def initial_conditions(
    spec: RSFunctionSpec,
    rec: RecursionSpec,
    interpretation: str = "full-sum",
    *,
    budget_n: int = DEFAULT_ENUM_BUDGET,
) -> WeightSequence:
    """The first `order` weights, brute forced from n = max top index + 1."""
    start = spec.max_top + 1
    last = start + rec.order - 1
    if last > budget_n:
        raise BudgetExceededError(
            f"initial conditions need weights up to n={last} "
            f"(order {rec.order}), beyond the enumeration budget of {budget_n}"
        )
    values = [
        weight(spec, n, interpretation, budget_n=budget_n)
        for n in range(start, last + 1)
    ]
    return WeightSequence(start, tuple(values))


def propagate(rec: RecursionSpec, initial: WeightSequence, count: int) -> WeightSequence:
    """Exact integer propagation to `count` values; the prefix is `initial`."""
    if len(initial) != rec.order:
        raise ValueError(f"need exactly {rec.order} initial values")
    values = list(initial.values[:count])
    while len(values) < count:
        values.append(rec.step(values[-rec.order:]))
    return WeightSequence(initial.start_n, tuple(values))


def verify_recursion(
    spec: RSFunctionSpec,
    rec: RecursionSpec,
    n_lo: int,
    n_hi: int,
    interpretation: str = "orbit-distinct",
    *,
    budget_n: int = DEFAULT_ENUM_BUDGET,
) -> VerificationReport:
    """Brute-force weights on [n_lo, n_hi] and check the recurrence exactly.

    Residuals exist for n >= n_lo + order.  Positions where some generator
    has a short orbit are listed so interpretation-sensitive entries can be
    spotted; the check itself uses the single given interpretation end to end.
    """
    n_lo = max(n_lo, spec.max_top)
    if n_hi > budget_n:
        raise BudgetExceededError(
            f"verification to n={n_hi} exceeds the enumeration budget of {budget_n}"
        )
    if n_hi < n_lo:
        raise ValueError("empty verification range")
    ws = {
        n: weight(spec, n, interpretation, budget_n=budget_n)
        for n in range(n_lo, n_hi + 1)
    }
    residuals = {}
    for n in range(n_lo + rec.order, n_hi + 1):
        residuals[n] = ws[n] - sum(
            c * ws[n - i] for i, c in enumerate(rec.coeffs, 1)
        )
    nonzero = tuple(n for n in sorted(residuals) if residuals[n] != 0)
    if not residuals:
        earliest = None
    elif not nonzero:
        earliest = min(residuals)
    elif nonzero[-1] == max(residuals):
        earliest = None
    else:
        earliest = nonzero[-1] + 1
    shorts = tuple(
        n
        for n in range(n_lo, n_hi + 1)
        if any(orbit_size(g, n) < n for g in spec.generators)
    )
    return VerificationReport(
        interpretation=interpretation,
        order=rec.order,
        n_lo=n_lo,
        n_hi=n_hi,
        residuals=residuals,
        nonzero=nonzero,
        earliest_clean=earliest,
        short_ns=shorts,
    )


def short_replacement_weight(
    spec: RSFunctionSpec, n: int, *, budget_n: int = DEFAULT_ENUM_BUDGET
) -> int:
    """Weight displayed at a short position: the orbit-distinct value, i.e.
    every generator contributes its distinct orbit monomials exactly once
    (for a short quadratic x_1 x_a at n = 2a - 2 that is the half-length
    quadratic sum added to the remaining generators)."""
    return weight(spec, n, "orbit-distinct", budget_n=budget_n)


def display_weights(
    spec: RSFunctionSpec,
    rec: RecursionSpec,
    count: int,
    *,
    budget_n: int = DEFAULT_ENUM_BUDGET,
) -> list:
    """Weights the way the pipeline prints them: brute-forced full-sum
    initial values, recurrence propagation beyond the order, and short
    quadratic positions n = 2(a-1) replaced by the short computation.

    Returns [(n, value, method)] with method in {brute, propagated,
    short-replaced}.
    """
    if count < 1:
        raise ValueError("need a positive number of weights")
    large = spec.max_top
    k = min(count, rec.order)
    first = large + 1
    if first + k - 1 > budget_n:
        raise BudgetExceededError(
            f"initial conditions need weights up to n={first + k - 1}, "
            f"beyond the enumeration budget of {budget_n}"
        )
    ivals = WeightSequence(
        first,
        tuple(
            weight(spec, n, "full-sum", budget_n=budget_n)
            for n in range(first, first + k)
        ),
    )
    if count >= rec.order:
        vals = propagate(rec, ivals, count)
    else:
        vals = ivals
    out = [
        [n, v, "brute" if n < first + k else "propagated"]
        for n, v in zip(vals.n_range(), vals.values)
    ]
    for g in spec.generators:
        if len(g) == 2:
            n_short = 2 * (g[1] - 1)
            if first <= n_short <= large + count:
                out[n_short - first] = [
                    n_short,
                    short_replacement_weight(spec, n_short, budget_n=budget_n),
                    "short-replaced",
                ]
    return [tuple(row) for row in out]
