"""Exception hierarchy shared by every solver module."""


class HanabiError(Exception):
    """Base class for all package errors."""


class InvalidInstance(HanabiError, ValueError):
    pass


class MultiplicityExceeded(InvalidInstance):
    pass


class ParseError(HanabiError, ValueError):
    """Text input could not be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        super().__init__(message if line is None else f"{message}, line {line}")


class MoveError(HanabiError):
    """An action in a play sequence is not legal in the current state."""


class HandOverflow(MoveError):
    pass


class IllegalPlay(MoveError):
    pass


class PlayNotInHand(MoveError):
    pass


class NotPermutation(HanabiError, ValueError):
    pass


class NotUnique(NotPermutation):
    pass


class MultiColor(HanabiError, ValueError):
    pass


class ResourceLimit(HanabiError):
    pass


class NoJournal(HanabiError):
    pass


class CnfError(ParseError):
    pass


class Not3Sat(CnfError):
    pass


class UnsatisfiedAssignment(HanabiError, ValueError):
    pass


class UnsupportedVariant(HanabiError, ValueError):
    pass


class InfeasibleRequest(HanabiError, ValueError):
    pass
