"""Exception hierarchy.

Every contract violation raises a distinct class so callers (and tests) can
discriminate without parsing messages.  All inherit from DicritError.
"""


class DicritError(Exception):
    """Base class for all errors raised by this package."""


# -- digraph construction / surgery ----------------------------------------

class LoopArcError(DicritError):
    """An arc has tail == head."""


class TwoCycleError(DicritError):
    """Both u->v and v->u requested; 2-cycles are outside the oriented-graph class."""


class DuplicateArcError(DicritError):
    """The same arc appears twice in a build list."""


class TooLargeError(DicritError):
    """Vertex count exceeds the supported maximum for the operation."""


class MissingArcError(DicritError):
    """Arc removal requested for an arc that is not present."""


class LastVertexError(DicritError):
    """Vertex deletion requested on a 1-vertex digraph."""


# -- text formats -----------------------------------------------------------

class FormatError(DicritError):
    """Base class for parse errors in the matrix and digraph6 formats."""


class BadCharError(FormatError):
    """Matrix text contains a character outside {0, +, -}."""


class NonZeroDiagonalError(FormatError):
    """Matrix text has a non-'0' entry on the main diagonal."""


class NotAntisymmetricError(FormatError):
    """Matrix entries a_ij and a_ji are not an antisymmetric +/- or 0/0 pair."""


class RaggedRowsError(FormatError):
    """Matrix rows do not all have length n, or the row count is not n."""


class BadHeaderError(FormatError):
    """digraph6 text does not start with the '&' header."""


class BadLengthError(FormatError):
    """digraph6 payload is truncated or has trailing data."""


# -- constructions ----------------------------------------------------------

class EvenMiddleError(DicritError):
    """The middle circuit of the glued-gadget family must have odd length."""


class TooShortError(DicritError):
    """A circuit parameter is below the minimum length 3."""


class NotButterflyError(DicritError):
    """The arc is neither the unique out-arc of its tail nor the unique in-arc of its head."""


class CreatesTwoCycleError(DicritError):
    """Contracting the arc would merge an in- and an out-neighbour into a 2-cycle."""


# -- enumeration / pipelines ------------------------------------------------

class InfeasibleError(DicritError):
    """Requested edge count is impossible for the degree constraint."""


class Not3DichromaticError(DicritError):
    """Dicritical descent requires a starting digraph with dichromatic number >= 3."""


class UncoverableError(DicritError):
    """Some covering-set target contains no element of the candidate pool."""
