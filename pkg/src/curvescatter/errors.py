"""Exception hierarchy shared by every module of the package."""


class CurveScatterError(Exception):
    """Base class for all errors raised by curvescatter."""


class InvalidInputError(CurveScatterError, ValueError):
    pass


class NumericalFailureError(CurveScatterError, RuntimeError):
    """An iterative method did not converge.

    The best iterate reached is attached as ``best`` so callers can inspect
    or salvage it.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class PoleOnBoundaryError(CurveScatterError, ValueError):
    def __init__(self, message, pole=None):
        super().__init__(message)
        self.pole = pole


class NotHardyError(CurveScatterError, ValueError):
    """A function expected in H^2 has a pole in the closed unit disc."""


class DegenerateDensityError(CurveScatterError, ValueError):
    """A sampled density has a nonpositive sample."""


class NotPurelyInnovatingError(CurveScatterError, ValueError):
    """The Szego integral of the density diverges."""


class InvalidModelError(CurveScatterError, ValueError):
    pass


class InconsistentCountsError(CurveScatterError, ValueError):
    """Point counts do not produce an integral zeta numerator."""


class InvalidCurveError(CurveScatterError, ValueError):
    pass


class UnsupportedModelError(CurveScatterError, ValueError):
    pass


class FieldTooLargeError(CurveScatterError, ValueError):
    """Brute-force enumeration requested over a field beyond the size cap."""


class ConsistencyError(CurveScatterError, RuntimeError):
    """Two independent routes to the same answer disagree.

    This always signals a bug (or a tolerance far too tight), never bad input.
    """
