"""Exception hierarchy shared across the package."""


class SpingeoError(Exception):
    """Base class for all package errors."""


class UnknownGeneratorError(SpingeoError):
    """A word uses a generator that the presentation does not declare."""


class ParseError(SpingeoError):
    """Malformed presentation or recipe text."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class InvariantError(SpingeoError):
    """Characteristic-number arithmetic asked for an inadmissible value."""


class PreconditionError(SpingeoError):
    """An operation was invoked on operands violating its preconditions."""


class UnsupportedSumError(PreconditionError):
    """Symplectic sum with a fundamental-group situation the calculus does not certify."""


class UnsupportedTargetError(PreconditionError):
    """A composite construction was asked for a fundamental group outside its range."""


class CatalogError(SpingeoError):
    """Unknown block name, claim id, or malformed catalog reference."""


class RecipeError(SpingeoError):
    """Error while evaluating a recipe tree; carries the step path."""

    def __init__(self, path, cause):
        super().__init__(f"at step {path}: {cause}")
        self.path = path
        self.cause = cause
