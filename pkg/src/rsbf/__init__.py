"""Weight recursions for rotation symmetric Boolean functions.

Given the generating monomials of a rotation symmetric function family
f_n, this package builds the sparse integer rules matrix of the family,
computes its exact minimal polynomial, reads off the homogeneous integer
linear recurrence satisfied by the Hamming weights wt(f_n), brute-forces
initial conditions, and verifies the recurrence against direct enumeration.
"""
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
from rsbf.boolfn import (
    DEFAULT_CHUNK_LOG2,
    DEFAULT_ENUM_BUDGET,
    INTERPRETATIONS,
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
    surviving_monomials,
    weight,
    weight_sequence,
)
from rsbf.cli import RunConfig, parse_spec, run
from rsbf.errors import BudgetExceededError, InputError, RSBFError
from rsbf.exact_linalg import (
    BigPoly,
    FirstDependenceFinder,
    SparseIntMatrix,
    evaluate_poly_at_matrix,
    first_dependence,
    minimal_polynomial,
    strip_x_factor,
)
from rsbf.recursion import (
    RecursionSpec,
    VerificationReport,
    display_weights,
    initial_conditions,
    propagate,
    recursion_from_polynomial,
    short_replacement_weight,
    verify_recursion,
)
from rsbf.rules_matrix import (
    RulesMatrix,
    build_rules_matrix,
    left_child,
    right_child,
    state_levels,
    state_width,
)

__version__ = "0.1.0"
