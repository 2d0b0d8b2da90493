"""Exception types shared by all modules."""


class BlockIneqError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(BlockIneqError):
    pass


class ConvergenceError(BlockIneqError):
    """Raised when the underlying eigenvalue/SVD solver fails to converge."""


class NotHermitian(BlockIneqError):
    pass


class NotPsd(BlockIneqError):
    def __init__(self, message, min_eig=None):
        super().__init__(message)
        self.min_eig = min_eig


class NotNormal(BlockIneqError):
    def __init__(self, message, commutator_norm=None):
        super().__init__(message)
        self.commutator_norm = commutator_norm


class NotContraction(BlockIneqError):
    def __init__(self, message, sigma_max=None):
        super().__init__(message)
        self.sigma_max = sigma_max


class SingularInput(BlockIneqError):
    pass


class InvalidSpectrum(BlockIneqError):
    pass


class DominanceViolated(BlockIneqError):
    def __init__(self, message, side=None, margin=None):
        super().__init__(message)
        self.side = side
        self.margin = margin


class IndexConstraint(BlockIneqError):
    pass


class DegenerateAngle(BlockIneqError):
    pass


class NonpositiveParam(BlockIneqError):
    pass


class EvenK(BlockIneqError):
    pass


class BoundExceeded(BlockIneqError):
    """A proved (or conjectured) bound was exceeded during a search.

    Carries a serializable reproducer so the offending point can be
    re-verified independently at tightened tolerance.
    """

    def __init__(self, message, value=None, bound=None, reproducer=None):
        super().__init__(message)
        self.value = value
        self.bound = bound
        self.reproducer = reproducer
