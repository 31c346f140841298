"""Exception taxonomy shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can emit
structured error JSON and map failures onto exit codes.
"""


class ApecError(Exception):
    """Base class; ``code`` is a stable machine-readable identifier."""

    code = "ERROR"
    exit_code = 2

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidInputError(ApecError):
    code = "VALIDATION"
    exit_code = 2


class UndefinedQuantityError(ApecError):
    code = "UNDEFINED_QUANTITY"
    exit_code = 2


class CpsSingularError(ApecError):
    code = "CPS_SINGULAR"
    exit_code = 2


class ResolutionError(ApecError):
    """An epsilon-dependent estimator was asked to work below the scale at
    which a finite-depth construction still resembles its limit object."""

    code = "RESOLUTION_GUARD"
    exit_code = 3


class InsufficientDataError(ApecError):
    """A truncated point set is too small for the requested look-ahead."""

    code = "RADIUS_GUARD"
    exit_code = 3


class ResourceCapError(ApecError):
    code = "RESOURCE_CAP"
    exit_code = 4
