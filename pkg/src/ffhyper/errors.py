"""Exception types shared across the package."""


class FFHyperError(Exception):
    """Base class for every error raised by this package."""


class NotOddPrime(FFHyperError):
    """Field characteristic is not an odd prime."""


class ReducibleModulus(FFHyperError):
    """Supplied defining polynomial is reducible over the prime field."""


class DegreeMismatch(FFHyperError):
    """A polynomial has the wrong degree or shape for the operation."""


class FieldMismatch(FFHyperError):
    """Operands belong to different fields, or a handle is out of range."""


class ArityMismatch(FFHyperError):
    """A polynomial has the wrong number of variables."""


class ZeroPolynomial(FFHyperError):
    """The zero polynomial is not a valid input here."""


class EmptyGenerators(FFHyperError):
    """An ideal operation was given no generators."""


class NotSymmetric(FFHyperError):
    """The polynomial is not invariant under variable permutations."""


class ConstantPolynomial(FFHyperError):
    """A constant (degree < 1) polynomial is not a valid input here."""


class DuplicateVertex(FFHyperError):
    """An edge query repeated a vertex."""


class NotAdmissible(FFHyperError):
    """The operation requires an admissible polynomial."""


class NotMonic(FFHyperError):
    """The operation requires a monic polynomial."""


class BudgetExceeded(FFHyperError):
    """The requested enumeration is larger than the configured budget."""


class ParseError(FFHyperError):
    """Malformed polynomial or field-spec text; carries the position."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, column)
        super().__init__(message)
        self.line = line
        self.column = column
