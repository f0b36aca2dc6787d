"""
Error hierarchy for quif5

Every failure the library can report derives from QuiF5Error and carries
the exit code the CLI returns for it. Only main.py turns these into exit
codes; everything else just raises.
"""

from typing import Optional


class QuiF5Error(Exception):
    """Base class of all quif5 errors"""
    exit_code = 1


class UsageError(QuiF5Error):
    """Bad command line"""
    exit_code = 1


class ParseError(QuiF5Error):
    """Syntax error in a problem file, with 1-based location"""
    exit_code = 2

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class SemanticError(QuiF5Error):
    """Well-formed input that refers to something inconsistent"""
    exit_code = 3

    def __init__(self, message: str, offending_id: Optional[str] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.offending_id = offending_id
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        what = f" ('{offending_id}')" if offending_id is not None else ""
        super().__init__(f"{where}{message}{what}")


class ComputationError(QuiF5Error):
    """Base class of algebraic failures"""
    exit_code = 4


class DivisionByZero(ComputationError, ZeroDivisionError):
    """Inversion of zero in F_p"""


class QuiverMismatch(ComputationError):
    """Paths from different quivers were combined"""


class NotADivisor(ComputationError):
    """complement() called on a path that is not a prefix"""


class ZeroElement(ComputationError):
    """Leading data requested for the zero element"""


class InvalidAlgebraSpec(ComputationError):
    """Relations violate the shape required for a basic algebra"""


class NotBasic(ComputationError):
    """A path of degree 0 or 1 lies in the ideal"""


class DegreeCapExceeded(ComputationError):
    """Auto nilpotency detection ran past the degree cap"""


class NonHomogeneousAuto(ComputationError):
    """Auto nilpotency requested for relations that are not degree-homogeneous"""


class InconsistentTruncation(ComputationError):
    """The declared nilpotency bound is too small for the relations"""


class WrongOrdering(ComputationError):
    """Loewy layers need a negative degree ordering"""


class OracleTooLarge(ComputationError):
    """Dense oracle refused an instance above its dimension cap"""


class InternalInvariantError(ComputationError):
    """An invariant the algorithms rely on was violated"""


class OracleMismatch(QuiF5Error):
    """Computed result disagrees with the linear-algebra oracle"""
    exit_code = 5
