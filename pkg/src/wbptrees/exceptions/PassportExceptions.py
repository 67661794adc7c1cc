# -----------------------------------------------------------
# PassportExceptions.py
# Description: errors raised while parsing, validating or transforming passports.
# -----------------------------------------------------------

class PassportError(Exception):
    pass


class PassportSyntaxError(PassportError):
    def __init__(self, message: str, position: int, column: int):
        super().__init__(f"{message} (at char {position}, col {column})")
        self.position = position
        self.column = column


class PassportValueError(PassportError):
    pass


class DivisionError(PassportError):
    pass


class FillMismatchError(PassportError):
    pass


class UnbalancedPassportError(PassportError):
    pass


class EmptyPassportError(PassportError):
    pass


class NotSimpleError(PassportError):
    pass


class StarredPassportError(PassportError):
    pass
