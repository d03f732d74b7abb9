"""Exception types shared across the package."""


class AntimagicError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(AntimagicError):
    """A value violates a structural invariant (loop, duplicate edge, ...)."""


class ContractError(AntimagicError):
    """A precondition of an operation was violated by the caller."""


class GraphParseError(AntimagicError):
    """Malformed edge-list document."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SchemaError(AntimagicError):
    """A JSON document does not match the expected schema."""

    def __init__(self, message, path="$"):
        self.path = path
        super().__init__(f"{path}: {message}")


class InfeasibleInstanceError(AntimagicError):
    """The instance cannot be solved with the label budget it was given."""


class CertificateError(AntimagicError):
    """An internal guarantee failed; indicates a modeling bug, not bad input."""


class BudgetExceededError(AntimagicError):
    """A search ran out of its node budget before reaching a conclusion.

    ``estimate`` carries a rough node count that would be required to finish,
    when one is available.
    """

    def __init__(self, message, estimate=None):
        self.estimate = estimate
        if estimate is not None:
            message = f"{message} (estimated budget required: {estimate})"
        super().__init__(message)
