"""Exception hierarchy shared by all bgzeta modules.

The CLI maps these onto exit codes: ValidationError and its subclasses
exit 2, CapacityError exits 3, ContractViolationError exits 4.
"""


class BGZetaError(Exception):
    """Base class for all library errors."""


class ValidationError(BGZetaError, ValueError):
    """Bad user input: malformed polynomials, wrong fields, failed preconditions."""


class NotPrimeError(ValidationError):
    """Requested characteristic is not a prime number."""


class ReducibleModulusError(ValidationError):
    """A polynomial required to be irreducible is reducible (or not monic)."""


class FieldMismatchError(ValidationError):
    """Arithmetic attempted between values of different fields or variables."""


class CapacityError(BGZetaError):
    """A computation exceeds the configured desk-scale iteration cap."""


class ContractViolationError(BGZetaError):
    """An internal consistency check failed: two independently computed
    routes disagree, or a value landed outside its guaranteed subfield.
    Always a bug (or a violated mathematical contract), never user error."""
