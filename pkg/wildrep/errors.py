"""
Exceptions raised by wildrep. Each carries the error `code` that
ends up in the CLI's report documents.
"""
from typing import Any, Optional


class WildRepError(Exception):
    code = 'INTERNAL_ERROR'


class SingularModelError(WildRepError):
    code = 'SINGULAR_MODEL'


class DivisionByZero(WildRepError, ZeroDivisionError):
    code = 'DIVISION_BY_ZERO'


class FieldMismatch(WildRepError, TypeError):
    code = 'FIELD_MISMATCH'


class CapacityExceeded(WildRepError):
    code = 'CAPACITY_EXCEEDED'


class InternalContradiction(WildRepError):
    code = 'INTERNAL_CONTRADICTION'


class ParityMismatch(WildRepError):
    code = 'PARITY_MISMATCH'


class UnknownLabel(WildRepError, KeyError):
    code = 'UNKNOWN_LABEL'


class ClassifierContradiction(WildRepError):
    code = 'CLASSIFIER_CONTRADICTION'


class InvalidArgument(WildRepError, ValueError):
    code = 'INVALID_ARGUMENT'


class OutOfScope(WildRepError):
    """Potentially multiplicative reduction; `local_data` is still available."""
    code = 'OUT_OF_SCOPE'

    def __init__(self, message: str, local_data: Any = None):
        super().__init__(message)
        self.local_data = local_data


class ParseError(WildRepError, ValueError):
    code = 'PARSE_ERROR'

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)
        self.line = line
