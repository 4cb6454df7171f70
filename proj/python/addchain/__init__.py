"""Addition-chain toolkit.

Exact shortest chains, determiner/regulator decomposition and identity
checks, Scholz conjecture sweeps, and straight-line exponentiation
schedules. All heavy lifting happens in the compiled `_core` extension.
"""

from addchain._core import (
    AdditionChain,
    ChainError,
    GeneratorSeq,
    IdentityReport,
    IdentityVerdicts,
    Instruction,
    LengthCache,
    LengthSandwich,
    LhsRhs,
    Rational,
    Schedule,
    ScholzRecord,
    SearchResult,
    TruncatedChain,
    abel_cross_check,
    bfs_oracle,
    binary_upper_bound,
    classic_scholz_check,
    consistency_check,
    decompose,
    determiner_closed_form,
    determiner_integral_identity,
    element_sum_identity,
    element_sum_lower_bound,
    emit,
    enumerate_star_chains,
    evaluate,
    evaluate_all,
    exists_star_chain_all_regulators_ge,
    format_record,
    is_star_chain,
    length_sandwich,
    lower_bound,
    parse_record,
    powmod,
    recompose,
    reformulated_rhs,
    regulator_sum,
    scholz_csv_header,
    scholz_sweep,
    shortest_chain,
    step_integral,
    truncate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
