"""Exception types shared across the library."""


class CyclosureError(Exception):
    """Base class for all library-specific errors."""


class OutOfRange(CyclosureError):
    """An edge endpoint is not a valid vertex id."""


class SelfLoop(CyclosureError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(CyclosureError):
    """The same unordered vertex pair was supplied twice."""


class MalformedGraph6(CyclosureError):
    """Input is not a valid header-free graph6 string."""


class InvalidHighlight(CyclosureError):
    """The highlight sequence is not a path in the graph being rendered."""


class BadSpec(CyclosureError):
    """A family spec violates its parameter invariants."""


class UnsupportedWitness(CyclosureError):
    """The (family, length) pair is outside the witness validity range."""


class SizeMismatch(CyclosureError):
    """A permutation does not match the graph's vertex count."""


class TooLarge(CyclosureError):
    """The instance exceeds a configured size cap."""


class PreconditionViolated(CyclosureError):
    """The graph does not satisfy a checker's hypotheses."""


class EmptyGraph(CyclosureError):
    """The operation is undefined on the 0-vertex graph."""


class NotAPath(CyclosureError):
    """The vertex sequence is not a path in the host graph."""


class NotInducedPath(CyclosureError):
    """The vertex sequence is not an induced path in the host graph."""


class UnknownClaim(CyclosureError):
    """No claim with the given identifier exists."""


class BadParams(CyclosureError):
    """Claim or search parameters are outside their supported ranges."""


class Indeterminate(CyclosureError):
    """A search exhausted its node budget before reaching an answer."""
