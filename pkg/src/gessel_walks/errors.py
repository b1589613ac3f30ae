"""Exception types raised across the package."""


class GesselError(Exception):
    """Base class for all package errors."""


class PreconditionViolation(GesselError, ValueError):
    """Arguments fall outside the domain an operation is defined on."""


class DuplicateAbscissa(GesselError, ValueError):
    pass


class SingularSystem(GesselError, ArithmeticError):
    pass


class NonIntegerResult(GesselError, ArithmeticError):
    """A closed form that must be an integer produced a proper fraction."""


class QueryExceedsTable(GesselError, ValueError):
    pass


class RegionMismatch(GesselError, ValueError):
    pass


class SizeCap(GesselError, ValueError):
    """Exhaustive enumeration was requested beyond its hard size limit."""


class UnknownSuite(GesselError, KeyError):
    pass
