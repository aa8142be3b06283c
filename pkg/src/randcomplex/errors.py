"""Exception types shared across the package."""


class RandComplexError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRange(RandComplexError):
    """A vertex index falls outside 1..n."""


class DegenerateSimplex(RandComplexError):
    """An edge or face repeats a vertex."""


class MissingBoundaryEdge(RandComplexError):
    """A face was given whose boundary edge is absent (listed skeleton)."""


class EqualVertices(RandComplexError):
    """Two vertex arguments that must differ are equal."""


class MissingEdge(RandComplexError):
    """An edge argument is not an edge of the complex."""


class UnknownFace(RandComplexError):
    """A face argument is not a face of the complex."""


class Disconnected(RandComplexError):
    """A graph operation requiring connectivity got a disconnected graph."""


class BadProbability(RandComplexError):
    """A probability parameter is outside [0, 1]."""


class TooSmall(RandComplexError):
    """A size parameter is below the operation's minimum."""


class BadField(RandComplexError):
    """A field tag names a non-prime modulus."""


class SizeCapExceeded(RandComplexError):
    """An exact integer computation was requested above its size cap."""


class RankOverflow(RandComplexError):
    """Reserved: exact rank arithmetic overflowed.

    The rational rank path runs on arbitrary-precision integers, so this
    is never raised in practice; the class exists so callers can still
    guard against it uniformly.
    """


class NoFaces(RandComplexError):
    """An operation requiring at least one 2-face got a face-free complex."""


class AnchorMissing(RandComplexError):
    """An anchored density was requested but the anchor vertices are absent."""


class TooLarge(RandComplexError):
    """A brute-force enumeration was requested above its supported scale."""


class MissingAnchorEdges(RandComplexError):
    """The loop on vertices 1,2,3 is not a loop: an anchor edge is absent."""


class BudgetCapExceeded(RandComplexError):
    """An area-search budget exceeds the configured cap."""


class InvalidLoop(RandComplexError):
    """A loop word is not a valid closed edge path in the complex."""


class NotAdmissible(RandComplexError):
    """Homotopy classification requested for a complex with density <= 1/2."""


class InternalInconsistency(RandComplexError):
    """Cross-checked homology counts disagree; indicates a bug or bad input."""


class DenominatorNonpositive(RandComplexError):
    """A bound with denominator 2*e_w - 1 was requested at e_w <= 1/2."""


class ConfigError(RandComplexError):
    """A sweep configuration file is malformed."""


class MissingColumn(RandComplexError):
    """A CSV consumed by plotting lacks a required column."""


class EmptyInput(RandComplexError):
    """A CSV consumed by plotting has no data rows."""


class ParseError(RandComplexError):
    """An SC2 file is malformed; carries the offending line number."""

    def __init__(self, line_number, message):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
