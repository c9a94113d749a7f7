"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller violated a documented precondition or supplied malformed data."""


class RuleViolation(ValueError):
    """A single reconfiguration move is illegal under the governing rule."""

    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class SequenceError(ValueError):
    """A move sequence failed verification at a specific step (1-based index)."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"move {index}: {reason}")
        self.index = index
        self.reason = reason


class OracleCapError(RuntimeError):
    """The brute-force oracle refused an instance above its vertex cap."""


class InternalError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
