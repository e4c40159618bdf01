"""Exception types raised across the package."""


class KnotPolyError(Exception):
    """Base class for all package errors."""


class InvalidParameter(KnotPolyError, ValueError):
    pass


class ZeroArgument(KnotPolyError, ZeroDivisionError):
    pass


class TooLarge(KnotPolyError):
    """Input exceeds the brute-force enumeration guard."""


class ResourceLimit(KnotPolyError):
    """Deletion-contraction recursion or memo budget exhausted."""


class ConvergenceFailure(KnotPolyError):
    def __init__(self, message, indices=(), approximations=None):
        super().__init__(message)
        self.indices = tuple(indices)
        self.approximations = approximations


class CorruptCache(KnotPolyError):
    pass


class IoFailure(KnotPolyError, OSError):
    pass
