class DomainError(ValueError):
    """An argument lies outside an operation's mathematical domain."""


class BudgetExceeded(RuntimeError):
    """A configured work budget ran out before the answer was known."""


class FactorizationError(BudgetExceeded):
    """Pollard-Brent exhausted its budget on a composite cofactor."""

    def __init__(self, cofactor: int):
        self.cofactor = cofactor
        super().__init__(f"incomplete factorization: composite cofactor {cofactor} left unsplit")


class InsufficientPrimes(LookupError):
    """Fewer primes than requested exist below the bound; ``found`` holds those that do."""

    def __init__(self, found: list[int], wanted: int, bound: int):
        self.found = found
        self.wanted = wanted
        self.bound = bound
        super().__init__(f"only {len(found)} of {wanted} primes found below {bound}: {found}")


class NotCovering(ValueError):
    """An operation needing a covering system was handed one that leaves cells uncovered."""
