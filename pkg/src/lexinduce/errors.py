"""Exception types shared across the package."""


class LexinduceError(Exception):
    """Base class for all errors raised by this package."""


class MissingFile(LexinduceError):
    pass


class MalformedLine(LexinduceError):
    def __init__(self, path, lineno: int, reason: str):
        super().__init__(f"{path}:{lineno}: {reason}")
        self.path = path
        self.lineno = lineno
        self.reason = reason


class InvalidSpec(LexinduceError):
    pass


class IntraLanguagePair(LexinduceError):
    pass


class UnknownVertex(LexinduceError):
    pass


class UnknownLanguage(LexinduceError):
    pass


class NotACycle(LexinduceError):
    pass


class MissingPivotDictionaries(LexinduceError):
    pass


class LanguageMismatch(LexinduceError):
    pass
