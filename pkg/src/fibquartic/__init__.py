"""Exact fourth-power sums of Fibonacci and Lucas numbers in logarithmic time."""

from .closed_form import (
    EvalResult,
    Method,
    SumFamily,
    SumSpec,
    closed_form_sum,
    corollary_sum,
    lemma3_sum,
    lemma4_sum,
    thm1_fib_fourth_sum,
    thm2_lucas_fourth_sum,
    thm3_alt_fib_fourth_sum,
    thm4_alt_lucas_fourth_sum,
)
from .errors import (
    ConsistencyError,
    DomainError,
    FibQuarticError,
    IndexOverflowError,
    InexactDivisionError,
    ParameterError,
)
from .identities import IdentityId, IdentityInstance, eval_identity
from .kernel import FibPair, count_big_ops, fib, fib_lucas, fib_pair, lucas
from .oracle import SequenceKind, SequenceSpec, naive_power_sum, telescoping_sum
from .verify import GridSpec, VerifyReport, evaluate, run_grid

__version__ = "0.1.0"
