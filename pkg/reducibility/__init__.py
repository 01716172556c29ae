from reducibility.criteria import (
    ConditionMatch,
    ConditionTag,
    FiniteDimWitness,
    Method,
    ReducibilityVerdict,
    Side,
    finite_dim_quotient,
    finite_dim_submodule,
    is_reducible_closed,
    length_upper_bound,
)
from reducibility.recursion import clear_memo, is_reducible_recursive, memo_info
