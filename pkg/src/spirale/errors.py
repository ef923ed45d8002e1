"""Exception hierarchy.

Every error carries a short ``code`` (the class name) so the command line
can report it as ``ERROR <code>: <message>``.
"""


class SpiraleError(ValueError):
    @property
    def code(self) -> str:
        return type(self).__name__


class DuplicateSymbol(SpiraleError):
    pass


class AlphabetTooSmall(SpiraleError):
    pass


class NotInAlphabet(SpiraleError):
    pass


class EmptyKey(SpiraleError):
    pass


class KeyLengthMismatch(SpiraleError):
    pass


class InvalidLag(SpiraleError):
    pass


class BadSeedLength(SpiraleError):
    pass


class ResultEmpty(SpiraleError):
    pass


class EmptyMessage(SpiraleError):
    pass


class BadExtractLength(SpiraleError):
    pass


class SetSizeMismatch(SpiraleError):
    pass


class TooShort(SpiraleError):
    pass


class BadLag(SpiraleError):
    pass


class BadPosition(SpiraleError):
    pass


class BudgetExceeded(SpiraleError):
    pass
