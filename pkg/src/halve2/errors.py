"""Exception hierarchy shared by all halve2 modules.

Every error raised on purpose by this package derives from
:class:`ExactCurveError`, so callers (notably the CLI) can separate
domain failures from genuine bugs. :class:`InvariantBreachError` is the
one exception that signals a bug: it is raised when an internal
cross-check that is mathematically guaranteed to hold fails anyway.
"""


class ExactCurveError(Exception):
    """Base class for all errors raised by halve2."""


class ParseError(ExactCurveError):
    """Malformed field spec, element literal, point literal, or JSON."""


class EvenOrSmallModulusError(ExactCurveError):
    """Prime-field modulus below 3; characteristic 2 is unsupported."""


class NotPrimeError(ExactCurveError):
    """Prime-field modulus is composite."""


class ModulusOutOfRangeError(ExactCurveError):
    """Modulus too large for the deterministic primality check."""


class SpecMismatchError(ExactCurveError):
    """Operands or coordinates belong to different fields."""


class DivisionByZeroError(ExactCurveError, ZeroDivisionError):
    """Division by the zero element of a field."""


class RepeatedRootError(ExactCurveError):
    """Curve roots are not pairwise distinct, so the curve is singular."""


class NotOnCurveError(ExactCurveError):
    """Point does not satisfy the curve equation."""


class InfinityInputError(ExactCurveError):
    """Operation needs an affine point but received the point at infinity."""


class NotHalvableError(ExactCurveError):
    """Point is not divisible by 2 in the group of rational points.

    The ``witness`` attribute, when set, carries the per-root square
    witnesses explaining which differences failed the square test.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidTripleError(ExactCurveError):
    """Root triple violates its defining relations for the given point."""


class DegenerateDenominatorError(ExactCurveError):
    """Half x-coordinate collides with a curve root.

    For a genuine half of an affine point this cannot happen, so seeing
    it means the inputs were inconsistent upstream.
    """


class RootsNotSquareError(ExactCurveError):
    """Differences of curve roots are not squares, so the construction
    of the points of order 4 above the chosen 2-torsion point fails.

    The ``witness`` attribute carries the failing square witnesses.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class FieldNotFiniteError(ExactCurveError):
    """Operation requires a prime field, not the rationals."""


class BoundExceededError(ExactCurveError):
    """Prime modulus exceeds the configured enumeration bound."""


class InvariantBreachError(ExactCurveError):
    """An internal mathematically-guaranteed cross-check failed."""
