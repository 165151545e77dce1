"""Exception types shared across the package."""


class FermatMLDError(Exception):
    """Base class for all errors raised by fermat_mld."""


class NonzeroRemainder(FermatMLDError, ArithmeticError):
    pass


class NonMonicDivisor(FermatMLDError, ValueError):
    pass


class BudgetExceeded(FermatMLDError):
    """An enumeration would visit more items than the configured budget."""

    def __init__(self, needed: int, budget: int, what: str = "items"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} {what}, budget is {budget}")


class NonExactDivision(FermatMLDError, ArithmeticError):
    """A division that encodes a theorem left a remainder. Always a bug."""


class NotPrimePower(FermatMLDError, ValueError):
    pass


class DegreeOneUnsupported(FermatMLDError, ValueError):
    pass


class MethodNotApplicable(FermatMLDError, ValueError):
    pass


class CacheFormatError(FermatMLDError, ValueError):
    pass
