"""GCDs of sums of k consecutive powers of Gibonacci numbers."""

from ._gibgcd import (  # noqa: F401
    CaseTag,
    DegenerateSequenceError,
    GcdClassification,
    GibonacciSpec,
    ModulusError,
    OddKReport,
    PisanoResult,
    PreconditionError,
    characteristic,
    fib,
    fib_closed,
    fib_pisano,
    gcd_firstpower_closed,
    gcd_power_bruteforce,
    gcd_squares_classified,
    gcd_squares_closed,
    gcd_squares_parity,
    gib_term,
    lucas,
    lucas_closed,
    lucas_pisano,
    odd_k_maximality,
    pisano_period,
    reduce_to_primitive,
    window_sum,
)

__version__ = "0.1.0"
