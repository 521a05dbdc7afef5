"""Exception types shared across the package.

The CLI maps these onto exit codes: parse/usage problems exit 2, resource
caps exit 3, failed verification predicates exit 1.
"""


class HomcxError(Exception):
    pass


class GraphParseError(HomcxError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(HomcxError, RuntimeError):
    """A configured size limit (colorings, cells, chains, vertices) was hit."""


class VerificationError(HomcxError, AssertionError):
    """A claim about the counterexample could not be reproduced."""
