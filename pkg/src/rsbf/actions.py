"""Masking actions on half-tables and their splitting rules.

A level-v action of a generator (1, c_2, ..., c_d) is a bit mask of length
2^(n-1): split the generator's n-variable truth table into 2^(c_d - v + 1)
equal portions, keep the final portion, and stretch it by repeating every
entry 2^(c_d - v) times.  Level 1 is always the all-ones mask, i.e. a
complement; it is never stored in operation states, only tracked as a sign.

When a table of length 2^(n-1) is halved, an action at level v turns into
actions at level v-1 on the halves: the left half loses the action entirely
at the generator's break levels, and the right half always keeps it.
"""
from dataclasses import dataclass

from rsbf.boolfn import (
    RSFunctionSpec,
    as_monomial,
    eval_monomial_at,
    monomial_truth_table_direct,
)


def _check_action_pattern(pattern):
    pattern = as_monomial(pattern)
    if pattern[0] != 1:
        raise ValueError(f"actions are defined for generators beginning with 1: {pattern}")
    return pattern


@dataclass(frozen=True)
class MuAction:
    """An action of `pattern` at level v, 1 <= v <= top index."""

    pattern: tuple
    v: int

    def __post_init__(self):
        pattern = _check_action_pattern(self.pattern)
        object.__setattr__(self, "pattern", pattern)
        if not 1 <= self.v <= pattern[-1]:
            raise ValueError(f"level {self.v} out of range for {pattern}")


@dataclass(frozen=True)
class SplitOutcome:
    """Action levels received by the two halves when a table splits.

    None means the half receives nothing; level 1 means a complement.
    The right half always receives something.
    """

    left: int | None
    right: int


def mu_sequence_definitional(pattern, v: int, n: int) -> int:
    """Level-v mask straight from the definition (split / isolate / stretch).

    Deliberately built from the per-input product oracle so it stays
    independent of the closed form.  Returns a bit mask of length 2^(n-1).
    """
    pattern = _check_action_pattern(pattern)
    c = pattern[-1]
    if not 1 <= v <= c:
        raise ValueError(f"level {v} out of range for {pattern}")
    if n < c:
        raise ValueError(f"generator {pattern} does not fit in {n} variables")
    table = monomial_truth_table_direct(pattern, n).bits
    portion_len = 1 << (n - c + v - 1)
    final = table >> ((1 << n) - portion_len)
    stretch = 1 << (c - v)
    unit = (1 << stretch) - 1
    out = 0
    while final:
        t = final & -final
        i = t.bit_length() - 1
        out |= unit << (i * stretch)
        final ^= t
    return out


def mu_sequence_closed_form(pattern, v: int, n: int) -> int:
    """Level-v mask as a nested run-length expression.

    For v = 1 the mask is all ones.  Otherwise v falls into the band
    (c - c_u + 1, c - c_{u-1} + 1] of some generator index c_u; the mask is
    the innermost 0-run/1-run pair of length 2^(n-v) wrapped, for every
    index between c_u and the top, in a zero prefix plus repetition, and the
    whole block repeated to fill 2^(n-1) bits.
    """
    pattern = _check_action_pattern(pattern)
    c = pattern[-1]
    if not 1 <= v <= c:
        raise ValueError(f"level {v} out of range for {pattern}")
    if n < c:
        raise ValueError(f"generator {pattern} does not fit in {n} variables")
    half = 1 << (n - 1)
    if v == 1:
        return (1 << half) - 1
    d = len(pattern)
    u = None
    for t in range(d, 1, -1):
        if c - pattern[t - 1] + 1 < v <= c - pattern[t - 2] + 1:
            u = t
            break
    assert u is not None, "bands cover (1, top]"
    run = 1 << (n - v)
    x = ((1 << run) - 1) << run
    xlen = run * 2
    for w in range(d - 1, u - 1, -1):
        cw, cnext = pattern[w - 1], pattern[w]
        rep = _repeat(x, xlen, 1 << (cnext - cw - 1))
        x = rep << (1 << (n + c - cw - v))
        xlen = 1 << (n + c - cw - v + 1)
    out = _repeat(x, xlen, 1 << (v - (c - pattern[u - 1] + 1) - 1))
    return out


def _repeat(block, length, times):
    out = block
    filled = 1
    while filled * 2 <= times:
        out |= out << (filled * length)
        filled *= 2
    if filled < times:
        out |= _repeat(block, length, times - filled) << (filled * length)
    return out


def break_levels(pattern) -> frozenset:
    """Levels at which the left half loses the action: {c_d - c_t + 2, t >= 2}.

    Level 2 is always a break level (take t = d); the remaining ones come
    from the middle indices.
    """
    pattern = _check_action_pattern(pattern)
    c = pattern[-1]
    return frozenset(c - ct + 2 for ct in pattern[1:])


def split_action(pattern, v: int) -> SplitOutcome:
    """How a level-v action distributes over the two halves of a table."""
    pattern = _check_action_pattern(pattern)
    if not 1 <= v <= pattern[-1]:
        raise ValueError(f"level {v} out of range for {pattern}")
    if v == 1:
        return SplitOutcome(left=1, right=1)
    if v in break_levels(pattern):
        return SplitOutcome(left=None, right=v - 1)
    return SplitOutcome(left=v - 1, right=v - 1)


def split_identity_check(pattern, v: int, n: int, table_bits: int) -> bool:
    """Executable form of the splitting rule on a concrete table.

    `table_bits` is a table of length 2^(n-1).  Masking it with the level-v
    mask must equal applying split_action's outcome half by half, where the
    halves are tables of length 2^(n-2) and actions are taken at n-1.
    """
    pattern = _check_action_pattern(pattern)
    half = 1 << (n - 2)
    if not 0 <= table_bits < (1 << (2 * half)):
        raise ValueError("table must have length 2^(n-1)")
    lhs = table_bits ^ mu_sequence_closed_form(pattern, v, n)
    outcome = split_action(pattern, v)
    lo = table_bits & ((1 << half) - 1)
    hi = table_bits >> half
    if outcome.left is not None:
        lo ^= mu_sequence_closed_form(pattern, outcome.left, n - 1)
    hi ^= mu_sequence_closed_form(pattern, outcome.right, n - 1)
    return lhs == (lo | (hi << half))


def fresh_actions(spec: RSFunctionSpec) -> list:
    """Actions acquired by the right half at every split: one top-level
    action per nonlinear generator."""
    return [MuAction(g, g[-1]) for g in spec.nonlinear]
