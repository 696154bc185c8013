"""Package-wide error types."""


class BudgetExceeded(RuntimeError):
    """A deterministic candidate search ran past its fixed budget."""


class TheoremViolation(RuntimeError):
    """A structural fact the library relies on failed to hold; this means a
    bug (or an input outside a verifier's contract), never a soft result."""
