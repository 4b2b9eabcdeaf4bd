"""Exception hierarchy shared across the package.

Two families matter to callers: ``InputError`` (malformed or oversized
input) and ``HypothesisError`` (well-formed input that fails the
mathematical hypotheses of the requested computation).  The CLI maps
these to exit codes 2 and 3 respectively.
"""

__all__ = [
    "StateSurfError",
    "InputError",
    "HypothesisError",
    "ParseError",
    "EmptyInput",
    "ArcCount",
    "IndexOutOfRange",
    "ZeroExponent",
    "MissingStrandCount",
    "LengthTooSmall",
    "IntegerSlope",
    "ZeroDenominator",
    "NonPlanar",
    "Disconnected",
    "CrossingCapExceeded",
    "NotAdequate",
    "NotHomogeneous",
    "NotAdequateOrHomogeneous",
    "NotConnected",
    "NotPrimeDiagram",
    "NotPrime",
    "ExponentTooSmall",
    "HypothesisNotMet",
]


class StateSurfError(Exception):
    """Base class for every error raised by this package."""


class InputError(StateSurfError):
    """The input was malformed, inconsistent, or over a size cap."""


class HypothesisError(StateSurfError):
    """The input is valid but outside the hypotheses of the operation."""


class ParseError(InputError):
    """Syntax error in a textual notation.

    ``position`` is a character offset into the input when known.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class EmptyInput(ParseError):
    pass


class ArcCount(InputError):
    """A PD arc label does not appear exactly twice."""


class IndexOutOfRange(InputError):
    """A braid generator index is outside 1..n-1."""


class ZeroExponent(InputError):
    """A braid letter was given exponent zero."""


class MissingStrandCount(ParseError):
    """A braid word lacks its ``B<n>:`` strand-count prefix."""


class LengthTooSmall(InputError):
    """A slope vector has fewer than three entries."""


class IntegerSlope(InputError):
    """A slope vector entry is an integer."""


class ZeroDenominator(InputError):
    """A slope was written with denominator zero."""


class NonPlanar(InputError):
    """The code does not describe a diagram on the sphere."""


class Disconnected(InputError):
    """The underlying projection is not connected."""


class CrossingCapExceeded(InputError):
    """The diagram exceeds the crossing cap of the requested evaluator."""


class NotAdequate(HypothesisError):
    """The relevant state graph has a one-edge loop."""


class NotHomogeneous(HypothesisError):
    """Some complementary region mixes A- and B-labelled crossings."""


class NotAdequateOrHomogeneous(HypothesisError):
    """The state fails adequacy, homogeneity, or both."""


class NotConnected(HypothesisError):
    """A graph or diagram required to be connected is not."""


class NotPrimeDiagram(HypothesisError):
    """The diagram admits a nontrivial connect-sum decomposition."""


# Both names occur in calling code; keep a single class.
NotPrime = NotPrimeDiagram


class ExponentTooSmall(HypothesisError):
    """A braid exponent is below the bound required by the estimate."""


class HypothesisNotMet(HypothesisError):
    """A tangle-count hypothesis fails; carries the offending counts."""

    def __init__(self, message: str, r: int | None = None, s: int | None = None):
        super().__init__(message)
        self.r = r
        self.s = s
