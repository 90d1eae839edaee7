"""Exception types shared across the package."""


class QuditlineError(Exception):
    """Base class for errors raised by quditline."""


class NonUnitError(QuditlineError, ValueError):
    """Inversion was requested for a residue that is not a unit."""

    def __init__(self, a: int, d: int):
        super().__init__(f"{a} is not a unit modulo {d}")
        self.a = a
        self.d = d


class ModulusMismatchError(QuditlineError, ValueError):
    """Two operands live over different moduli."""


class ZeroVectorError(QuditlineError, ValueError):
    """The zero vector was passed where a nonzero vector is required."""


class BudgetExceededError(QuditlineError, RuntimeError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(
            f"{what} needs {requested} but the cap is {cap}; "
            "raise the budget explicitly to proceed"
        )
        self.what = what
        self.requested = requested
        self.cap = cap
