"""Operation states and the sparse integer rules matrix.

An operation state records which action levels are active per nonlinear
generator.  For a generator with top index c the field is c - 1 bits wide
(levels 2..c; level v sits at bit value 2^(c - v), so level 2 is the top
bit of the field and the fresh top-level action is the bottom bit).
Fields are packed generator-major, first generator most significant, for a
total state width of sum(c_g - 1) = Rs - t bits.

Column j of the matrix holds the states produced when state j splits:
+1 at the left child, +/-1 at the right child depending on the complement
parity, and, for odd parity, +1 in the extra last row whose corner entry 2
tracks the doubling of 2^(n-1).  A linear generator contributes a constant
complement to every right child.
"""
from dataclasses import dataclass, field

import numpy as np

from rsbf.boolfn import RSFunctionSpec
from rsbf.errors import BudgetExceededError
from rsbf.exact_linalg import SparseIntMatrix

DEFAULT_WIDTH_BUDGET = 24
_BLOCK = 1 << 18  # states per vectorized block during assembly


def generator_fields(spec: RSFunctionSpec) -> list:
    """(offset, width, generator) per nonlinear generator, first one most
    significant; offset counts bits from the least significant end."""
    widths = [g[-1] - 1 for g in spec.nonlinear]
    total = sum(widths)
    out = []
    pos = total
    for g, w in zip(spec.nonlinear, widths):
        pos -= w
        out.append((pos, w, g))
    return out


def state_width(spec: RSFunctionSpec) -> int:
    return sum(g[-1] - 1 for g in spec.nonlinear)


def state_levels(spec: RSFunctionSpec, state: int) -> tuple:
    """Decode a packed state into one frozenset of active levels per
    nonlinear generator."""
    out = []
    for offset, width, g in generator_fields(spec):
        fkb = (state >> offset) & ((1 << width) - 1)
        c = g[-1]
        out.append(frozenset(v for v in range(2, c + 1) if (fkb >> (c - v)) & 1))
    return tuple(out)


def levels_state(spec: RSFunctionSpec, levels) -> int:
    """Inverse of state_levels."""
    state = 0
    fields = generator_fields(spec)
    if len(levels) != len(fields):
        raise ValueError("one level set per nonlinear generator required")
    for (offset, width, g), lv in zip(fields, levels):
        c = g[-1]
        fkb = 0
        for v in lv:
            if not 2 <= v <= c:
                raise ValueError(f"level {v} invalid for generator {g}")
            fkb |= 1 << (c - v)
        state |= fkb << offset
    return state


def left_child(state: int, spec: RSFunctionSpec) -> int:
    """Split a state toward the left half: break levels vanish, every other
    active level v becomes v - 1."""
    out = 0
    for offset, width, g in generator_fields(spec):
        fkb = (state >> offset) & ((1 << width) - 1)
        lft = fkb << 1
        for ci in g[1:]:  # doubled break-level bits sit at positions ci - 1
            lft &= ~(1 << (ci - 1))
        out |= lft << offset
    return out


def right_child(state: int, spec: RSFunctionSpec) -> tuple:
    """Split a state toward the right half.

    Every active level shifts down one; a level-2 action leaves the state
    and emits a complement; the fresh top-level action is added for every
    nonlinear generator.  Returns (state, complement parity); the parity
    includes one flip per linear generator.
    """
    out = 0
    parity = spec.linear_count & 1
    for offset, width, g in generator_fields(spec):
        fkb = (state >> offset) & ((1 << width) - 1)
        c = g[-1]
        rt = (fkb << 1) | 1
        if rt & (1 << (c - 1)):
            rt &= ~(1 << (c - 1))
            parity ^= 1
        out |= rt << offset
    return out, parity


@dataclass(frozen=True, eq=False)
class RulesMatrix:
    """Pruned sparse rules matrix plus the bookkeeping of the pruning."""

    spec: RSFunctionSpec
    state_width: int
    raw_dim: int
    kept: tuple  # raw indices surviving the zero-row pruning, ascending
    rows: np.ndarray = field(repr=False)
    cols: np.ndarray = field(repr=False)
    vals: np.ndarray = field(repr=False)
    coincidences: int = 0  # merged duplicate (row, col) pairs during assembly

    @property
    def dim(self) -> int:
        return len(self.kept)

    @property
    def nnz(self) -> int:
        return len(self.vals)

    def to_sparse(self) -> SparseIntMatrix:
        entries = {
            (int(r), int(c)): int(v)
            for r, c, v in zip(self.rows, self.cols, self.vals)
        }
        return SparseIntMatrix(self.dim, entries)

    def dump(self) -> str:
        """Line-oriented 'row col value' triples, sorted for diffing."""
        order = np.lexsort((self.cols, self.rows))
        lines = [
            f"{self.rows[i]} {self.cols[i]} {self.vals[i]}" for i in order
        ]
        return "\n".join(lines) + "\n"


def _children_vectorized(spec: RSFunctionSpec, states: np.ndarray):
    left = np.zeros_like(states)
    right = np.zeros_like(states)
    parity = np.full_like(states, spec.linear_count & 1)
    for offset, width, g in generator_fields(spec):
        fkb = (states >> offset) & ((1 << width) - 1)
        c = g[-1]
        lft = fkb << 1
        for ci in g[1:]:
            lft &= ~np.int64(1 << (ci - 1))
        rt = (fkb << 1) | 1
        flip = (rt >> (c - 1)) & 1
        rt &= ~np.int64(1 << (c - 1))
        parity ^= flip
        left |= lft << offset
        right |= rt << offset
    return left, right, parity


def build_rules_matrix(
    spec: RSFunctionSpec, *, max_width: int = DEFAULT_WIDTH_BUDGET
) -> RulesMatrix:
    """Assemble the rules matrix column by column, then prune zero rows.

    Pruning repeatedly removes any index whose row is entirely zero,
    deleting row and column together, until stable.
    """
    if not spec.nonlinear:
        raise ValueError("the pure linear function has no rules matrix")
    width = state_width(spec)
    if width > max_width:
        raise BudgetExceededError(
            f"state width {width} exceeds the matrix budget of {max_width} bits"
        )
    nstates = 1 << width
    dim = nstates + 1
    rows_parts, cols_parts, vals_parts = [], [], []
    for start in range(0, nstates, _BLOCK):
        states = np.arange(start, min(start + _BLOCK, nstates), dtype=np.int64)
        left, right, parity = _children_vectorized(spec, states)
        rows_parts += [left, right]
        cols_parts += [states, states]
        vals_parts += [np.ones_like(states), np.where(parity == 1, -1, 1)]
        odd = states[parity == 1]
        if len(odd):
            rows_parts.append(np.full_like(odd, dim - 1))
            cols_parts.append(odd)
            vals_parts.append(np.ones_like(odd))
    rows_parts.append(np.array([dim - 1], dtype=np.int64))
    cols_parts.append(np.array([dim - 1], dtype=np.int64))
    vals_parts.append(np.array([2], dtype=np.int64))
    rows = np.concatenate(rows_parts)
    cols = np.concatenate(cols_parts)
    vals = np.concatenate(vals_parts)

    # coalesce duplicate coordinates; children accumulate rather than overwrite
    keys = rows * dim + cols
    order = np.argsort(keys, kind="stable")
    keys, rows, cols, vals = keys[order], rows[order], cols[order], vals[order]
    uniq, inverse = np.unique(keys, return_inverse=True)
    coincidences = len(keys) - len(uniq)
    summed = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(summed, inverse, vals)
    rows = uniq // dim
    cols = uniq % dim
    vals = summed
    nonzero = vals != 0
    rows, cols, vals = rows[nonzero], cols[nonzero], vals[nonzero]

    alive = np.ones(dim, dtype=bool)
    while True:
        keep = alive[rows] & alive[cols]
        present = np.zeros(dim, dtype=bool)
        present[rows[keep]] = True
        dead = alive & ~present
        if not dead.any():
            break
        alive &= present
    keep = alive[rows] & alive[cols]
    rows, cols, vals = rows[keep], cols[keep], vals[keep]
    kept = np.flatnonzero(alive)
    rows = np.searchsorted(kept, rows)
    cols = np.searchsorted(kept, cols)
    order = np.lexsort((rows, cols))
    return RulesMatrix(
        spec=spec,
        state_width=width,
        raw_dim=dim,
        kept=tuple(int(i) for i in kept),
        rows=rows[order],
        cols=cols[order],
        vals=vals[order],
        coincidences=int(coincidences),
    )
