class RSBFError(Exception):
    """Base class for errors raised by this package."""


class InputError(RSBFError):
    """Malformed generator specification or option value (CLI exit code 2)."""


class BudgetExceededError(RSBFError):
    """A requested computation exceeds the configured size budget (CLI exit code 3)."""
