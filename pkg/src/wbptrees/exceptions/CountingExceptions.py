# -----------------------------------------------------------
# CountingExceptions.py
# Description: internal consistency failures of the counting formulas.
# -----------------------------------------------------------

class CountingError(Exception):
    pass


class IntegralityError(CountingError):
    pass


class IdentityViolationError(CountingError):
    pass
