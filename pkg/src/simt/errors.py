class SimtError(Exception):
    """Base class for errors raised by this package."""


class WordSyntaxError(SimtError, ValueError):
    pass


class MissingImage(SimtError, KeyError):
    """A generator occurring in a word has no image under a substitution."""

    def __str__(self):
        return f"no image for generator {self.args[0]!r}"


class ResourceLimit(SimtError):
    """A configured size bound was exceeded."""


class ParseError(SimtError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotPositive(SimtError, ValueError):
    pass


class NoValidRotation(SimtError, ValueError):
    pass
