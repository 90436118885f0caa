"""Exception types raised across the package."""


class ShapeTopError(Exception):
    """Base class for every error raised by shapetop."""


class DegenerateElement(ShapeTopError, ValueError):
    """A segment whose two endpoints coincide."""


class KindMismatch(ShapeTopError, TypeError):
    """Operands belong to different algebras (U0 vs U1) or the wrong one."""


class MemberNotPart(ShapeTopError, ValueError):
    """A shape that should be a part of a carrier is not."""


class EmptyGenerator(ShapeTopError, ValueError):
    """Generator family is empty or contains the empty shape."""


class DoesNotExhaust(ShapeTopError, ValueError):
    """Generators do not sum to the carrier and the carrier was not added."""


class GeneratorBudgetExceeded(ShapeTopError, RuntimeError):
    """Topology generation produced more opens than the configured cap."""


class NotATopology(ShapeTopError, ValueError):
    """A family of parts fails the topology conditions."""


class NotABasis(ShapeTopError, ValueError):
    """A family of parts fails the basis conditions."""

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class CarrierMismatch(ShapeTopError, ValueError):
    """Two topologies (or a topology and a shape) have different carriers."""


class NotOnto(ShapeTopError, ValueError):
    """A mapping does not take the source carrier onto the target carrier."""


class NotContinuous(ShapeTopError, ValueError):
    """A continuity-dependent check was asked of a non-continuous mapping."""


class TooLarge(ShapeTopError, ValueError):
    """An exhaustive enumeration was requested beyond its supported size."""


class TooManyFragments(ShapeTopError, ValueError):
    """A brute-force search would need more fragments than allowed."""


class ParseError(ShapeTopError, ValueError):
    """Malformed input text; carries the source name, line and token."""

    def __init__(self, source, line, token, message):
        super().__init__(f"{source}:{line}: {message} (at {token!r})")
        self.source = source
        self.line = line
        self.token = token


class AlreadyOpen(UserWarning):
    """Warning: a part offered for refinement is already open."""
