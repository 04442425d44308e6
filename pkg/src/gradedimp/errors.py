"""Exception hierarchy shared by all modules."""


class GradedError(Exception):
    """Base class for every error raised by this package."""


class ChainError(GradedError, ValueError):
    """Invalid structure of truth degrees or hedge."""


class DegreeError(GradedError, ValueError):
    """A degree is out of range or cannot be represented exactly."""


class UniverseMismatch(GradedError, ValueError):
    """Operands live on different attribute (or object) universes."""


class PreconditionError(GradedError):
    """An operation was called on input violating its documented precondition."""


class NotApplicable(PreconditionError):
    """A reduction step would not enlarge the target antecedent."""


class InvariantViolation(GradedError):
    """An internal invariant that theory guarantees was found broken."""


class BudgetExceeded(GradedError):
    """An exhaustive enumeration would exceed the configured budget."""


class ParseError(GradedError, ValueError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        self.message = message
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            if source:
                where = f"{source}: {where}"
            where += ": "
        elif source:
            where = f"{source}: "
        super().__init__(where + message)

    def located(self, source) -> "ParseError":
        """Same error, attributed to ``source`` unless it already names one."""
        if self.source is not None:
            return self
        return ParseError(self.message, self.line, self.column, source)
