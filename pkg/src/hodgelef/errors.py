"""Exception hierarchy shared across the package.

Errors split into three families that the CLI maps to distinct exit codes:
structural problems (malformed data, dimension mismatches), unmet
preconditions (operation not applicable to the given instance), and plain
value errors from bad user input.  Failed *checks* are never exceptions;
they are carried in report objects.
"""


class HodgelefError(Exception):
    """Base class for all package errors."""


class StructuralError(HodgelefError):
    """Input data is malformed: wrong shapes, missing blocks, bad keys."""


class ParseError(StructuralError):
    """A scalar, vector, or instance file could not be parsed."""


class NotHermitianError(HodgelefError):
    """A matrix required to be Hermitian is not; carries the witness entry."""

    def __init__(self, i: int, j: int, detail: str = ""):
        self.i = i
        self.j = j
        msg = f"matrix is not Hermitian: entry ({i},{j}) != conj of ({j},{i})"
        if detail:
            msg += f" [{detail}]"
        super().__init__(msg)


class DegenerateGramError(HodgelefError):
    """An inner-product block is singular; carries the offending degree."""

    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"inner product is degenerate in degree {degree}")


class InvalidAlgebraError(HodgelefError):
    """An operation requires a validated algebra but validation failed."""


class PreconditionError(HodgelefError):
    """The operation's precondition is unmet (odd middle degree, level out of
    range, unproved conjecture hypothesis, ...)."""
