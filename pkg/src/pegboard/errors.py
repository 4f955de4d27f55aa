"""Exception types shared across the package."""


class PegboardError(Exception):
    """Base class for all domain errors."""


class NotUnimodular(PegboardError):
    """Matrix determinant is not +-1."""


class DegenerateInput(PegboardError):
    """Input polyline passes through a peg."""


class UnrepresentableWrap(PegboardError):
    """The taut representative needs a wrap angle beyond pi.

    Such curves carry a resolvable self-intersection at the offending peg;
    callers split it off (resolve + delete) and retry.
    """

    def __init__(self, msg, peg=None):
        super().__init__(msg)
        self.peg = peg


class NotSymmetric(PegboardError):
    """Symmetric normalization requested for a non-self-conjugate curve."""


class VerticalClass(PegboardError):
    """Component has nonzero vertical homology; no closed lift exists."""


class NoCrossings(PegboardError):
    """Component misses the vertical measuring circle (internal error)."""


class FValueParity(PegboardError):
    """Residue undefined: odd order with odd crossing span."""


class NotACrossing(PegboardError):
    """Requested crossing id does not exist on the curve."""


class AsymmetricPair(PegboardError):
    """Partner crossing is not the conjugate image of the given one."""


class NotExtremal(PegboardError):
    """Peg pass requested at a peg that is not at max/min height."""


class NotWrapped(PegboardError):
    """Peg is not visited by the component."""


class NotFlattened(PegboardError):
    """Curve is not supported in the flattening band."""


class ParallelComponents(PegboardError):
    """A shared free homotopy class between the two multicurves."""


class NotLoopType(PegboardError):
    """Type-D graph does not decompose into loops."""


class UnsupportedPattern(PegboardError):
    """Loop pattern outside the supported conversion dictionary."""


class InvalidOrder(PegboardError):
    """Order parameter out of range."""


class MissingSector(PegboardError):
    """Multicurve lacks a component with the required residue."""


class Stuck(PegboardError):
    """Simplification made no progress; carries a diagnostic payload."""

    def __init__(self, msg, diagnostic=None):
        super().__init__(msg)
        self.diagnostic = diagnostic


class FormatError(PegboardError):
    """Malformed curve or graph file."""

    def __init__(self, msg, line_no=None):
        super().__init__(msg if line_no is None else f"line {line_no}: {msg}")
        self.line_no = line_no
