"""Exception hierarchy. Every library-raised error derives from LdcError."""


class LdcError(Exception):
    """Base class for all errors raised by this package."""


class UnknownEdge(LdcError):
    """A switch set references an edge that is not part of the network."""


class EdgeOverlap(LdcError):
    """Two networks being summed carry an edge on the same node pair."""


class RoleConflict(LdcError):
    """A node would end up being both a generator and a load."""


class MalformedProgram(LdcError):
    """A linear program references undeclared variables or has inverted bounds."""


class NotFixedSusceptance(LdcError):
    """An operation requiring fixed susceptances got a network with FACTS edges."""


class NotATree(LdcError):
    """The tree fast path was invoked on a network that is not a tree."""


class TooLarge(LdcError):
    """Exhaustive switching search refused: too many edges."""


class TooManyFactsEdges(LdcError):
    """FACTS assignment search refused: too many adjustable edges."""


class NonpositiveX(LdcError):
    """Gadget constructors require a strictly positive size parameter."""


class InvalidInstance(LdcError):
    """A combinatorial problem instance violates its structural requirements."""


class NotACertificate(LdcError):
    """A claimed subset-sum certificate does not sum to the target."""


class NotOptimal(LdcError):
    """Decoding was attempted on an outcome below the predicted optimal value."""


class DecodingFailed(LdcError):
    """An optimal outcome did not decode to a valid combinatorial certificate."""
