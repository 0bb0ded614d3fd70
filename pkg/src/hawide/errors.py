"""Exception hierarchy shared by the library and the CLI."""


class HawideError(Exception):
    """Base class for all library errors."""


class InvalidParameters(HawideError, ValueError):
    pass


class InvalidTuple(HawideError, ValueError):
    pass


class ContextMismatch(HawideError, ValueError):
    """Two objects living over different (n, m) were combined."""


class PreconditionError(HawideError, ValueError):
    pass


class BudgetExceeded(HawideError, RuntimeError):
    pass


class CapExceeded(HawideError, RuntimeError):
    pass


class NonZeroComposite(HawideError, ArithmeticError):
    """Two consecutive maps of a complex do not compose to zero."""
