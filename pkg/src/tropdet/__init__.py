"""Tropical determinants of integer doubly-stochastic matrices.

D(m, n) is the set of n x n non-negative integer matrices whose rows and
columns all sum to m.  This package evaluates the sharp range of the
maximum transversal sum (tdet) and minimum transversal sum (tropdet) over
D(m, n), builds matrices attaining the extremes, and provides exact
solvers, threshold-block analysis, exhaustive enumeration, and a CLI.
"""

from .assignment import (
    Transversal,
    brute_assignment,
    has_transversal_above,
    tdet,
    tropdet,
)
from .blocks import (
    BlockDecomposition,
    arrange_block_corner,
    largest_low_block,
    max_matching_above,
)
from .bounds import (
    BoundsResult,
    CaseTag,
    lower_bound_L,
    rubik_answer,
    smallest_l,
    upper_bound_U,
)
from .construct import (
    BlockPlan,
    construct_max_tropdet,
    construct_min_tdet,
    fill_bounded_transportation,
    plan_hard_case,
)
from .enumerate_ds import (
    DEFAULT_VISIT_BUDGET,
    EnumStats,
    brute_L,
    brute_U,
    count_D,
    enumerate_D,
    random_ds,
)
from .errors import (
    BudgetExceededError,
    DomainError,
    InfeasibleMarginalsError,
    LineSumError,
    MatrixParseError,
    MatrixShapeError,
    SizeGuardError,
    TropdetError,
)
from .matrices import (
    DSMatrix,
    IntMatrix,
    SplitParams,
    parse_matrix,
    serialize,
    split,
    validate_ds,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BlockPlan",
    "BoundsResult",
    "BudgetExceededError",
    "CaseTag",
    "DEFAULT_VISIT_BUDGET",
    "DSMatrix",
    "DomainError",
    "EnumStats",
    "InfeasibleMarginalsError",
    "IntMatrix",
    "LineSumError",
    "MatrixParseError",
    "MatrixShapeError",
    "SizeGuardError",
    "SplitParams",
    "Transversal",
    "TropdetError",
    "arrange_block_corner",
    "brute_L",
    "brute_U",
    "brute_assignment",
    "construct_max_tropdet",
    "construct_min_tdet",
    "count_D",
    "enumerate_D",
    "fill_bounded_transportation",
    "has_transversal_above",
    "largest_low_block",
    "lower_bound_L",
    "max_matching_above",
    "parse_matrix",
    "plan_hard_case",
    "random_ds",
    "rubik_answer",
    "serialize",
    "smallest_l",
    "split",
    "tdet",
    "tropdet",
    "upper_bound_U",
    "validate_ds",
]
