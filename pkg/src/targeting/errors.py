"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the model's admissible domain."""


class RegimeBoundaryError(DomainError):
    """The budget sits exactly on the small/large budget boundary."""


class OracleError(RuntimeError):
    """An independent numerical check could not be carried out."""


class GridCapacityError(ValueError):
    """The requested enumeration mode cannot handle a grid this large."""


class GridAlignmentError(ValueError):
    """A strategy does not fall on the cell boundaries of a grid game."""
