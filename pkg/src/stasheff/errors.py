"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An argument broke an operation's precondition."""


class ResourceGuardError(RuntimeError):
    """A desk-scale limit was exceeded."""


class IntegrityError(RuntimeError):
    """Internal data failed a consistency check; indicates a bug or bad input data."""
