"""Exception hierarchy.

Every error carries the exit code the CLI reports for it: 1 for malformed or
invalid input, 2 when a cap or budget was exhausted before an answer was known.
"""


class DistinguoError(Exception):
    exit_code = 1


class InputError(DistinguoError):
    exit_code = 1


class ExhaustedError(DistinguoError):
    exit_code = 2


class MalformedCycles(InputError):
    pass


class MalformedGroupFile(InputError):
    pass


class MalformedGraph(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class TrivialGroup(InputError):
    pass


class UnknownFamily(InputError):
    pass


class NotASubgroup(InputError):
    pass


class OrderTooSmall(InputError):
    pass


class BadDimension(InputError):
    pass


class ZeroVector(InputError):
    pass


class OrderExceedsCap(ExhaustedError):
    pass


class SearchBudgetExceeded(ExhaustedError):
    pass


class BudgetExceeded(ExhaustedError):
    pass


class MotionEvidenceExhausted(ExhaustedError):
    pass


class TooManySubsets(ExhaustedError):
    pass


class MalformedVectors(InputError):
    pass


class MalformedWord(InputError):
    pass
