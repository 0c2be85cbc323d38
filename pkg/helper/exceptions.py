# encoding: utf-8


class AutomatonError(ValueError):
    pass


class DfaSyntaxError(AutomatonError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class RegexSyntaxError(AutomatonError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (pos {position})")


class AlphabetError(AutomatonError):
    pass


class IncompleteAutomatonError(AutomatonError):
    pass


class NotAccessibleError(AutomatonError):
    pass


class NotMinimalError(AutomatonError):
    pass


class NotCongruenceError(AutomatonError):
    pass


class LimitExceededError(AutomatonError):
    """
    A configured size guard was hit. `progress` tells how far the computation got.
    """

    def __init__(self, message, limit, progress=None):
        self.limit = limit
        self.progress = progress
        super().__init__(message)
