"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """An argument fails the documented domain of an operation."""


class PreconditionError(GraphInputError):
    """A lemma-level hypothesis does not hold for the supplied instance.

    Kept distinct from a check returning False: a False verdict means the
    conclusion of a lemma failed on a valid instance, while this error means
    the instance never qualified in the first place.
    """


class InvariantViolationError(RuntimeError):
    """An internal invariant that should be unreachable was violated.

    Raised, for example, when the decomposition fails to produce a star
    cutset on a graph the theory guarantees has one. If this ever fires on
    valid input it is evidence against the implementation (or the theory)
    and the offending instance should be preserved.
    """


class SamplingGiveUp(RuntimeError):
    """Rejection sampling hit the configured acceptance-rate floor."""
