"""Exception types shared across the toolkit."""


class GraphFormatError(ValueError):
    """Raised when graph6 or edge-list input cannot be parsed."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its stated domain."""


class TheoremViolation(RuntimeError):
    """A verified theorem failed on an in-domain instance.

    This signals either a toolkit bug or a major mathematical finding;
    callers should halt and dump the offending instance rather than
    continue producing statistics.
    """

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.detail = detail or {}
