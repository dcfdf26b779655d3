"""Exception hierarchy.

`Refusal` marks a mathematical "no" (a pair that is not exact, witnesses that do
not exist, nothing to reduce).  Everything else derived from `EzdError` is a
usage or computation failure.  The CLI maps the two families to different exit
codes.
"""


class EzdError(Exception):
    pass


class InputError(EzdError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"column {position + 1}: {message}"
        super().__init__(message)


class RingMismatch(InputError):
    pass


class Refusal(EzdError):
    pass


class NotExactPair(Refusal):
    def __init__(self, message, failed=None):
        super().__init__(message)
        self.failed = failed


class WitnessRefusal(Refusal):
    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class NothingToReduce(Refusal):
    pass


class PremiseError(Refusal):
    pass


class WindowError(EzdError):
    def __init__(self, message, degree_reached=None):
        super().__init__(message)
        self.degree_reached = degree_reached


class FitError(EzdError):
    pass


class CompositionNonzero(EzdError):
    pass


class DimensionDeficit(EzdError):
    """Module dimension is smaller than the ring dimension."""


class BudgetExceeded(EzdError):
    pass
