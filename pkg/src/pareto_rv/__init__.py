"""Pareto-rational verification of single-player parity games.

Does every play whose payoff for the environment is Pareto-optimal also
satisfy the system's objective?  The package decides this with a naive
enumeration, an antichain descent and a counterexample-guided algorithm,
on top of an Emerson-Lei emptiness engine.
"""

from .arena import (
    ArenaError,
    GameArena,
    InvalidLassoError,
    Lasso,
    MooreMachine,
    StrategyIncompleteError,
    check_lasso,
    product,
    validate,
)
from .emptiness import check, streett_check, witness_to_play_report
from .generators import CnfFormula, gen_from_cnf, gen_intersection, gen_random, parse_dimacs
from .io import ParseError, parse_arena, parse_moore, read_arena, write_arena, write_moore
from .lattice import Antichain, ceil, format_payoff, payoff
from .oracle import oracle_verify
from .realizability import (
    exists_extended,
    exists_lost_not_below,
    exists_payoff_eq,
    exists_payoff_geq,
    is_pareto_optimal,
)
from .verifier import (
    VerificationResult,
    antichain_verify,
    check_certificate,
    compute_pareto_set,
    counterexample_verify,
    naive_verify,
    pareto_front,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "ArenaError",
    "GameArena",
    "InvalidLassoError",
    "Lasso",
    "MooreMachine",
    "StrategyIncompleteError",
    "check_lasso",
    "product",
    "validate",
    "exists_extended",
    "exists_lost_not_below",
    "exists_payoff_eq",
    "exists_payoff_geq",
    "is_pareto_optimal",
    "VerificationResult",
    "antichain_verify",
    "check_certificate",
    "compute_pareto_set",
    "counterexample_verify",
    "naive_verify",
    "pareto_front",
    "verify",
    "check",
    "streett_check",
    "witness_to_play_report",
    "CnfFormula",
    "gen_from_cnf",
    "gen_intersection",
    "gen_random",
    "parse_dimacs",
    "ParseError",
    "parse_arena",
    "parse_moore",
    "read_arena",
    "write_arena",
    "write_moore",
    "Antichain",
    "ceil",
    "format_payoff",
    "payoff",
    "oracle_verify",
]
