"""Exception hierarchy for the diagram engine."""


class DiagramError(ValueError):
    """Base class for invalid diagram input."""


class UnpackedError(DiagramError):
    """A weight matrix has a zero row or a zero column."""


class RaggedError(DiagramError):
    """Rows of unequal length."""


class ColumnIndexError(DiagramError, IndexError):
    """Column selection outside ``1..q``."""


class BoundExceededError(DiagramError):
    """Requested enumeration weight is above the configured cap."""


class ParseError(DiagramError):
    """Malformed text input."""


class PlacementError(DiagramError):
    """A placement does not describe an interleaving of the two column sequences."""


class UnverifiedStructureError(ValueError):
    """The operation requires one of the two verified Hopf structures."""
