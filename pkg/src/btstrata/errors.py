"""Exception types shared across the package."""


class BTStrataError(Exception):
    """Base class for every error raised by this package."""


class NonExactDivision(BTStrataError, ArithmeticError):
    """A polynomial quotient left a nonzero remainder."""


class InvalidSymbol(BTStrataError, ValueError):
    pass


class InvalidLabel(BTStrataError, ValueError):
    pass


class RankUnderflow(BTStrataError, ValueError):
    pass


class ScaleGuard(BTStrataError, RuntimeError):
    """An enumeration would exceed the configured work bound."""
