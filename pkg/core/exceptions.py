from typing import Optional


class AlgebraToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class InputError(AlgebraToolkitError, ValueError):
    """Malformed or inconsistent user input."""


class ParseError(InputError):
    def __init__(self, message: str, line_number: Optional[int] = None, source: Optional[str] = None):
        self.line_number = line_number
        self.source = source
        location = ""
        if source:
            location += f"{source}:"
        if line_number is not None:
            location += f"{line_number}:"
        super().__init__(f"{location} {message}".strip() if location else message)


class AlgebraMismatchError(InputError):
    """Two modules (or a module and a map) live over different algebras."""


class DimensionMismatchError(InputError):
    pass


class InvalidAdmissibleSequenceError(InputError):
    pass


class UnsupportedCharacteristicError(InputError):
    pass


class FieldTooSmallError(AlgebraToolkitError, RuntimeError):
    """End/rad has a residue field strictly larger than the base field."""


class ComputationError(AlgebraToolkitError, RuntimeError):
    """An internal consistency check failed."""
