"""Exception hierarchy shared by all portdiv modules."""


class DiversityError(ValueError):
    """Base class for every error raised by portdiv."""


class DomainError(DiversityError):
    """An indicator is mathematically undefined for the given input."""


class DimensionError(DiversityError):
    """Two inputs have incompatible sizes."""


class ParseError(DiversityError):
    """A file could not be parsed into a numeric matrix."""


class ValidationError(DiversityError):
    """A parsed matrix violates the contract of its type."""


class ShapeError(ValidationError):
    """Matrix is not square (or otherwise has the wrong shape)."""


class SymmetryError(ValidationError):
    """Matrix asymmetry exceeds the tolerance."""


class RangeError(ValidationError):
    """Matrix entry outside its admissible range."""
