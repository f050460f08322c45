"""Exception types shared across the package."""


class MzvFracError(Exception):
    """Base class for algebra-level failures."""


class NotAdmissible(MzvFracError):
    """Word ends in the x0 letter, or a leading exponent is 1 where a
    convergent series is required."""


class VariableCollision(MzvFracError):
    """Two product factors share a variable; the generic-variable product
    is undefined."""


class UnboundVariable(MzvFracError):
    """Evaluation met a variable with no assigned value."""


class NotInDomain(MzvFracError):
    """An operator was applied outside its domain (constant term under the
    rate-0 integral, unit term under the leading-exponent raise)."""


class ParseError(MzvFracError):
    """Malformed term literal. Carries the source text and the offset of
    the offending token so the CLI can print a caret diagnostic."""

    def __init__(self, message, text, offset):
        super().__init__(message)
        self.message = message
        self.text = text
        self.offset = offset

    def caret_diagnostic(self):
        return "  {}\n  {}^".format(self.text, " " * self.offset)
