"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a contract: asymmetric matrix, unphysical state,
    out-of-range transmittance, ill-formed state file, and the like."""


class SeparableInputError(ValidationError):
    """The operation is only defined for entangled states."""
