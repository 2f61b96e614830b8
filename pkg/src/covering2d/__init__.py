"""Two-dimensional covering systems and prime values of |a^m - b^n|."""

from .census import bucket_counts, census, is_probable_prime, p_100, pi_100, pi_ab
from .covering import CoveringSystem, density, is_covering, is_covering_restricted, is_minimal
from .errors import BudgetExceeded, DomainError, FactorizationError, InsufficientPrimes, NotCovering
from .heuristic import expected_pair_count, kappa, predictions
from .lattice import ReducedTriple, Triple, equivalent, member, reduce
from .obstruction import SearchConfig, classify, find_mixed_obstruction, find_obstruction, verify_obstruction
from .orders import construct_pair, mult_order, realize_triple, triple_for_prime

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CoveringSystem", "DomainError", "FactorizationError", "InsufficientPrimes",
    "NotCovering", "ReducedTriple", "SearchConfig", "Triple", "bucket_counts", "census", "classify",
    "construct_pair", "density", "equivalent", "expected_pair_count", "find_mixed_obstruction",
    "find_obstruction", "is_covering", "is_covering_restricted", "is_minimal", "is_probable_prime",
    "kappa", "member", "mult_order", "p_100", "pi_100", "pi_ab", "predictions", "realize_triple",
    "reduce", "triple_for_prime", "verify_obstruction",
]
