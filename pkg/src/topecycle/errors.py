"""Exception hierarchy shared by all topecycle modules."""


class TopeCycleError(Exception):
    """Base class; ``kind`` is the machine-readable name used by the CLI."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class FieldMismatch(TopeCycleError):
    pass


class UnsupportedField(TopeCycleError):
    pass


class ParseError(TopeCycleError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateHyperplane(TopeCycleError):
    pass


class DropAll(TopeCycleError):
    pass


class LengthMismatch(TopeCycleError):
    pass


class SizeLimit(TopeCycleError):
    pass


class NotSimplicial(TopeCycleError):
    pass


class NotSimplicialCone(NotSimplicial):
    pass


class DegenerateDirection(TopeCycleError):
    pass


class TieDetected(TopeCycleError):
    pass


class EmptyBaseRegion(TopeCycleError):
    pass


class NotSupersolvable(TopeCycleError):
    pass


class NotAPath(TopeCycleError):
    pass


class EdgeNotInCycle(TopeCycleError):
    pass


class InvalidInput(TopeCycleError):
    pass


class QuadrilateralExhausted(TopeCycleError):
    pass


class BudgetExceeded(TopeCycleError):
    pass


class UsageError(TopeCycleError):
    """A request that does not apply to the given input (CLI exit status 2)."""
